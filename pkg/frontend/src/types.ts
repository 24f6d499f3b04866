export interface LaurentTerm {
  exp: number[];
  num: number;
  den: number;
}

export interface SeedJson {
  m: number;
  n: number;
  B: number[][];
  labels: string[];
  variables: LaurentTerm[][];
  history: number[];
  // quantum extension and bruhat extras travel through untouched
  [extra: string]: unknown;
}

export interface StratumJson {
  tip: number[];
  surviving: number[];
  center_basis: number[][];
  rank: number;
}

export interface BuildResponse {
  id: string;
  seed: SeedJson;
  lambda: number[][];
  lambda_scale: number;
  exchangeable_vertices: number[];
  vertex_order: number[];
  [extra: string]: unknown;
}
