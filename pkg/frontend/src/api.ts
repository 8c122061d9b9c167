// Typed client for the similarity service. The UI computes nothing itself:
// every number on screen came out of one of these calls.

export interface InstanceInfo {
  id: string;
  class: string;
  attrs: Record<string, unknown>;
  rels: Record<string, string[]>;
}

export interface TieGroup {
  ids: string[];
  score: number;
}

export interface Ranking {
  query: string;
  context: string;
  groups: TieGroup[];
}

export interface ElementMatch {
  element: string;
  best_match: string | null;
  score: number;
}

export interface TermScore {
  path: string;
  entity: string;
  op: string;
  score: number;
  elements?: ElementMatch[];
}

export interface Similarity {
  value: number;
  external: number;
  extensional: number;
  terms: TermScore[];
}

export interface PathRef {
  start: string;
  relations: string[];
}

export interface TermRef {
  name: string;
  op: string;
}

export interface ContextEntry {
  path: PathRef;
  attrs: TermRef[];
  rels: TermRef[];
}

export interface ContextDoc {
  name: string;
  entries: ContextEntry[];
}

export interface MatrixData {
  ids: string[];
  values: number[][];
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function parseError(res: Response): Promise<ApiError> {
  let detail = res.statusText;
  try {
    const body = await res.json();
    if (typeof body.detail === "string") detail = body.detail;
    else if (body.detail) detail = JSON.stringify(body.detail);
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(res.status, detail);
}

export class ApiClient {
  constructor(private base: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const res = await fetch(this.base + path);
    if (!res.ok) throw await parseError(res);
    return res.json() as Promise<T>;
  }

  async instances(): Promise<InstanceInfo[]> {
    const body = await this.getJson<{ instances: InstanceInfo[] }>("/api/instances");
    return body.instances;
  }

  async contexts(): Promise<ContextDoc[]> {
    const body = await this.getJson<{ contexts: ContextDoc[] }>("/api/contexts");
    return body.contexts;
  }

  async saveContext(doc: ContextDoc): Promise<ContextDoc> {
    const res = await fetch(this.base + "/api/contexts", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(doc),
    });
    if (!res.ok) throw await parseError(res);
    const body = (await res.json()) as { context: ContextDoc };
    return body.context;
  }

  rank(query: string, context: string): Promise<Ranking> {
    const params = new URLSearchParams({ query, context });
    return this.getJson(`/api/rank?${params}`);
  }

  similarity(a: string, b: string, context: string): Promise<Similarity> {
    const params = new URLSearchParams({ a, b, context });
    return this.getJson(`/api/similarity?${params}`);
  }

  matrix(context: string): Promise<MatrixData> {
    const params = new URLSearchParams({ context });
    return this.getJson(`/api/matrix?${params}`);
  }
}
