/**
 * Canonical JSON stringification (object keys sorted) and a deterministic
 * 64-bit FNV-1a checksum over it.  The checksum witnesses that displayed
 * state is byte-for-byte the server's JSON, so it must not depend on key
 * order or on anything the UI adds locally.
 */

export function canonicalStringify(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(canonicalStringify).join(",") + "]";
  }
  const obj = value as Record<string, unknown>;
  const keys = Object.keys(obj).sort();
  const body = keys
    .map((k) => JSON.stringify(k) + ":" + canonicalStringify(obj[k]))
    .join(",");
  return "{" + body + "}";
}

export function fnv1a64(text: string): string {
  let hash = 0xcbf29ce484222325n;
  const prime = 0x100000001b3n;
  const mask = 0xffffffffffffffffn;
  for (let i = 0; i < text.length; i++) {
    hash ^= BigInt(text.charCodeAt(i) & 0xff);
    hash = (hash * prime) & mask;
    // fold in the high byte for non-ascii code points
    const high = text.charCodeAt(i) >> 8;
    if (high) {
      hash ^= BigInt(high);
      hash = (hash * prime) & mask;
    }
  }
  return hash.toString(16).padStart(16, "0");
}

export function checksumOf(value: unknown): string {
  return fnv1a64(canonicalStringify(value));
}
