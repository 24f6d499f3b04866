import { checksumOf } from "./checksum";
import { SeedJson, StratumJson } from "./types";

/** The slice of ApiClient the view state needs; tests can inject a fake. */
export interface BuildReply {
  id: string;
  seed: SeedJson;
  exchangeable_vertices?: number[];
  vertex_order?: number[];
  [extra: string]: unknown;
}

export interface SeedApi {
  mutate(id: string, k: number): Promise<SeedJson>;
  undo(id: string): Promise<SeedJson>;
  buildBruhat(word: string, rank: number): Promise<BuildReply>;
  createSession(seed: SeedJson): Promise<{ id: string; seed: SeedJson }>;
  strata(id: string): Promise<StratumJson[]>;
}

export type Listener = () => void;

/**
 * All displayed state is the server's JSON verbatim: the store never edits
 * a seed locally, it only swaps in whole responses.  One request may be in
 * flight at a time; inputs stay disabled while busy.
 */
export class ViewState {
  sessionId: string | null = null;
  seed: SeedJson | null = null;
  buildInfo: BuildReply | null = null;
  strata: StratumJson[] | null = null;
  busy = false;
  hint = "";
  validationError = "";
  /** full server JSONs received before the current one, oldest first */
  trail: SeedJson[] = [];

  private listeners: Listener[] = [];

  constructor(private api: SeedApi) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  /** checksum of the displayed seed (history is shown in the trail panel) */
  displayChecksum(): string {
    if (!this.seed) return "";
    const { history: _history, ...rest } = this.seed;
    return checksumOf(rest);
  }

  /** checksum of the exact server JSON including history */
  fullChecksum(): string {
    return this.seed ? checksumOf(this.seed) : "";
  }

  isMutable(vertex: number): boolean {
    return this.seed !== null && vertex >= 1 && vertex <= this.seed.m;
  }

  async loadSeed(seed: SeedJson): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.emit();
    try {
      const { id, seed: got } = await this.api.createSession(seed);
      this.sessionId = id;
      this.seed = got;
      this.trail = [];
      this.hint = "";
      this.validationError = "";
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async mutateAt(vertex: number): Promise<boolean> {
    if (this.busy || !this.seed || !this.sessionId) return false;
    if (!this.isMutable(vertex)) {
      this.hint = `vertex ${vertex} is frozen`;
      this.emit();
      return false; // no request is sent for frozen vertices
    }
    this.busy = true;
    this.hint = "";
    this.emit();
    try {
      const next = await this.api.mutate(this.sessionId, vertex);
      this.trail.push(this.seed);
      this.seed = next;
      this.strata = null; // stale after a mutation; reload on demand
      return true;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async loadStrata(): Promise<boolean> {
    if (this.busy || !this.sessionId) return false;
    this.busy = true;
    this.emit();
    try {
      this.strata = await this.api.strata(this.sessionId);
      return true;
    } catch (err) {
      this.hint = err instanceof Error ? err.message : String(err);
      return false;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  canUndo(): boolean {
    return this.trail.length > 0;
  }

  async undo(): Promise<boolean> {
    if (this.busy || !this.sessionId || !this.canUndo()) return false;
    this.busy = true;
    this.emit();
    try {
      const prev = await this.api.undo(this.sessionId);
      this.trail.pop();
      this.seed = prev;
      return true;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  /** empty words are allowed (all-frozen seed); garbage is rejected inline */
  validateWord(word: string, rank: number): string {
    const trimmed = word.trim();
    if (!Number.isInteger(rank) || rank < 1) return "rank must be a positive integer";
    if (trimmed === "") return "";
    if (!/^-?\d+(\s*,\s*-?\d+)*$/.test(trimmed)) {
      return "word must be comma-separated signed integers";
    }
    for (const tok of trimmed.split(",")) {
      const v = parseInt(tok.trim(), 10);
      if (v === 0 || Math.abs(v) > rank) {
        return `letter ${v} out of range ±[1,${rank}]`;
      }
    }
    return "";
  }

  async buildBruhat(word: string, rank: number): Promise<boolean> {
    if (this.busy) return false;
    const problem = this.validateWord(word, rank);
    if (problem) {
      this.validationError = problem;
      this.emit();
      return false; // invalid input never reaches the server
    }
    this.busy = true;
    this.validationError = "";
    this.emit();
    try {
      const built = await this.api.buildBruhat(word, rank);
      this.sessionId = built.id;
      this.seed = built.seed;
      this.buildInfo = built;
      this.trail = [];
      this.hint = "";
      return true;
    } catch (err) {
      this.validationError = err instanceof Error ? err.message : String(err);
      return false;
    } finally {
      this.busy = false;
      this.emit();
    }
  }
}
