// Page state and the update flows around it. Responses are tagged with a
// request sequence number; anything superseded by a newer user action is
// dropped, so the ranking on screen always belongs to the controls shown.

import {
  ApiClient,
  ApiError,
  ContextDoc,
  InstanceInfo,
  MatrixData,
  Ranking,
  Similarity,
} from "./api.js";

export interface BrowseState {
  loading: boolean;
  connectionError: string | null;
  instances: InstanceInfo[];
  contexts: ContextDoc[];
  queryId: string | null;
  contextName: string | null;
  ranking: Ranking | null;
  rankingError: string | null;
  breakdownFor: string | null;
  breakdown: Similarity | null;
  matrix: MatrixData | null;
  matrixVisible: boolean;
  draft: ContextDoc | null;
  draftError: string | null;
}

function initialState(): BrowseState {
  return {
    loading: true,
    connectionError: null,
    instances: [],
    contexts: [],
    queryId: null,
    contextName: null,
    ranking: null,
    rankingError: null,
    breakdownFor: null,
    breakdown: null,
    matrix: null,
    matrixVisible: false,
    draft: null,
    draftError: null,
  };
}

export class Store {
  state: BrowseState = initialState();
  private seq = 0;
  private listeners: Array<() => void> = [];

  constructor(private api: ApiClient) {}

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private nextSeq(): number {
    return ++this.seq;
  }

  private fresh(seq: number): boolean {
    return seq === this.seq;
  }

  async loadRepository(): Promise<void> {
    const seq = this.nextSeq();
    this.state.loading = true;
    this.state.connectionError = null;
    this.emit();
    try {
      const [instances, contexts] = await Promise.all([
        this.api.instances(),
        this.api.contexts(),
      ]);
      if (!this.fresh(seq)) return;
      this.state.instances = instances;
      this.state.contexts = contexts;
      this.state.loading = false;
      this.emit();
    } catch (err) {
      if (!this.fresh(seq)) return;
      this.state.loading = false;
      this.state.connectionError = String(err instanceof Error ? err.message : err);
      this.emit();
    }
  }

  async select(queryId: string, contextName: string): Promise<void> {
    const seq = this.nextSeq();
    this.state.queryId = queryId;
    this.state.contextName = contextName;
    this.state.breakdownFor = null;
    this.state.breakdown = null;
    this.state.rankingError = null;
    this.emit();
    try {
      const ranking = await this.api.rank(queryId, contextName);
      if (!this.fresh(seq)) return;
      this.state.ranking = ranking;
    } catch (err) {
      if (!this.fresh(seq)) return;
      this.state.ranking = null;
      this.state.rankingError = err instanceof ApiError ? err.detail : String(err);
    }
    this.emit();
  }

  async revealBreakdown(targetId: string): Promise<void> {
    const { queryId, contextName } = this.state;
    if (!queryId || !contextName) return;
    if (this.state.breakdownFor === targetId) {
      this.state.breakdownFor = null;
      this.state.breakdown = null;
      this.emit();
      return;
    }
    const seq = this.nextSeq();
    this.state.breakdownFor = targetId;
    this.state.breakdown = null;
    this.emit();
    try {
      const breakdown = await this.api.similarity(queryId, targetId, contextName);
      if (!this.fresh(seq)) return;
      this.state.breakdown = breakdown;
    } catch (err) {
      if (!this.fresh(seq)) return;
      this.state.breakdownFor = null;
      this.state.rankingError = err instanceof ApiError ? err.detail : String(err);
    }
    this.emit();
  }

  async toggleMatrix(): Promise<void> {
    if (this.state.matrixVisible) {
      this.state.matrixVisible = false;
      this.emit();
      return;
    }
    const contextName = this.state.contextName;
    if (!contextName) return;
    const seq = this.nextSeq();
    this.state.matrixVisible = true;
    this.state.matrix = null;
    this.emit();
    try {
      const matrix = await this.api.matrix(contextName);
      if (!this.fresh(seq)) return;
      this.state.matrix = matrix;
    } catch (err) {
      if (!this.fresh(seq)) return;
      this.state.matrixVisible = false;
      this.state.rankingError = err instanceof ApiError ? err.detail : String(err);
    }
    this.emit();
  }

  startDraft(): void {
    const context = this.state.contexts.find((c) => c.name === this.state.contextName);
    if (!context) return;
    this.state.draft = structuredClone(context);
    this.state.draftError = null;
    this.emit();
  }

  discardDraft(): void {
    this.state.draft = null;
    this.state.draftError = null;
    this.emit();
  }

  updateDraft(mutate: (draft: ContextDoc) => void): void {
    if (!this.state.draft) return;
    mutate(this.state.draft);
    this.emit();
  }

  /** POST the draft; on success refresh contexts and re-rank the current query. */
  async saveDraft(): Promise<boolean> {
    const draft = this.state.draft;
    if (!draft) return false;
    this.state.draftError = null;
    try {
      await this.api.saveContext(draft);
    } catch (err) {
      this.state.draftError = err instanceof ApiError ? err.detail : String(err);
      this.emit();
      return false;
    }
    this.state.contexts = await this.api.contexts();
    this.state.draft = null;
    this.emit();
    const { queryId } = this.state;
    if (queryId && this.state.contextName === draft.name) {
      await this.select(queryId, draft.name);
      if (this.state.matrixVisible) {
        this.state.matrixVisible = false;
        await this.toggleMatrix();
      }
    }
    return true;
  }
}
