import { describe, expect, it } from "vitest";

import { canonicalStringify, checksumOf } from "../src/checksum";

describe("canonicalStringify", () => {
  it("is independent of key order", () => {
    const a = { x: 1, y: [1, 2, { b: 2, a: 1 }] };
    const b = { y: [1, 2, { a: 1, b: 2 }], x: 1 };
    expect(canonicalStringify(a)).toBe(canonicalStringify(b));
    expect(checksumOf(a)).toBe(checksumOf(b));
  });

  it("distinguishes different values", () => {
    expect(checksumOf({ x: 1 })).not.toBe(checksumOf({ x: 2 }));
    expect(checksumOf([1, 2])).not.toBe(checksumOf([2, 1]));
  });

  it("handles primitives and null", () => {
    expect(canonicalStringify(null)).toBe("null");
    expect(canonicalStringify("a")).toBe('"a"');
    expect(canonicalStringify(3)).toBe("3");
  });
});
