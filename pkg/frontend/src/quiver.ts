import { SeedJson } from "./types";

export interface QuiverVertex {
  index: number; // 1-based
  label: string;
  frozen: boolean;
  x: number;
  y: number;
}

export interface QuiverArrow {
  from: number;
  to: number;
  weight: number; // |b_from,to| as seen from the exchangeable side
}

export interface QuiverModel {
  vertices: QuiverVertex[];
  arrows: QuiverArrow[];
}

/**
 * Derive the quiver from the seed's B matrix: an arrow i -> j for every
 * positive b_ij (rows are the exchangeable vertices).  Layout is a fixed
 * two-layer grid keyed only by the vertex index, so renders are
 * reproducible across sessions.
 */
export function quiverFromSeed(seed: SeedJson): QuiverModel {
  const vertices: QuiverVertex[] = [];
  const spacing = 110;
  for (let i = 1; i <= seed.n; i++) {
    const frozen = i > seed.m;
    vertices.push({
      index: i,
      label: seed.labels[i - 1],
      frozen,
      x: 60 + (i - 1) * spacing,
      y: frozen ? 190 : 70,
    });
  }
  const arrows: QuiverArrow[] = [];
  for (let i = 0; i < seed.m; i++) {
    for (let j = 0; j < seed.n; j++) {
      const b = seed.B[i][j];
      if (b > 0) {
        arrows.push({ from: i + 1, to: j + 1, weight: b });
      } else if (b < 0 && j >= seed.m) {
        // frozen vertices have no row of their own; emit their incoming side
        arrows.push({ from: j + 1, to: i + 1, weight: -b });
      }
    }
  }
  arrows.sort((a, b) => a.from - b.from || a.to - b.to);
  return { vertices, arrows };
}

export function formatVariable(seed: SeedJson, index: number): string {
  const terms = seed.variables[index - 1];
  if (!terms.length) return "0";
  const parts = terms.map(({ exp, num, den }) => {
    const coeff = den === 1 ? `${num}` : `${num}/${den}`;
    const monos = exp
      .map((e, i) => (e === 0 ? "" : e === 1 ? seed.labels[i] : `${seed.labels[i]}^${e}`))
      .filter((s) => s.length > 0)
      .join("·");
    if (!monos) return coeff;
    return coeff === "1" ? monos : `${coeff}·${monos}`;
  });
  return parts.join(" + ");
}
