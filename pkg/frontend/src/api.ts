import { BuildResponse, SeedJson, StratumJson } from "./types";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

/** Minimal typed client for the clusterlab serve endpoints. */
export class ApiClient {
  constructor(private baseUrl: string) {}

  private async call<T>(path: string, method: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body !== undefined ? { "Content-Type": "application/json" } : {},
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const data = await resp.json();
    if (!resp.ok) {
      const message =
        typeof data === "object" && data !== null && "error" in data
          ? String((data as { error: unknown }).error)
          : resp.statusText;
      throw new ApiError(resp.status, message);
    }
    return data as T;
  }

  health(): Promise<string> {
    return this.call("/health", "GET");
  }

  createSession(seed: SeedJson): Promise<{ id: string; seed: SeedJson }> {
    return this.call("/session", "POST", seed);
  }

  getSeed(id: string): Promise<SeedJson> {
    return this.call(`/session/${id}`, "GET");
  }

  mutate(id: string, k: number): Promise<SeedJson> {
    return this.call(`/session/${id}/mutate`, "POST", { k });
  }

  undo(id: string): Promise<SeedJson> {
    return this.call(`/session/${id}/undo`, "POST");
  }

  strata(id: string): Promise<StratumJson[]> {
    return this.call(`/session/${id}/strata`, "GET");
  }

  buildBruhat(word: string, rank: number): Promise<BuildResponse> {
    return this.call("/bruhat/build", "POST", { word, rank });
  }
}
