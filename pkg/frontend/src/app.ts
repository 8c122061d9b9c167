// Wires the store to the views. One full re-render per state change; the
// page is small enough that diffing would be ceremony.

import { ApiClient } from "./api.js";
import { Store } from "./state.js";
import { renderEditor } from "./views/editor.js";
import { renderMatrix } from "./views/matrix.js";
import { renderRanking } from "./views/ranking.js";
import { renderRepository } from "./views/repository.js";

export interface App {
  store: Store;
  root: HTMLElement;
}

export function createApp(root: HTMLElement, api: ApiClient): App {
  const store = new Store(api);
  root.innerHTML = `
    <header>
      <h1>ctxsim — browse by similarity</h1>
      <div class="controls">
        <label>query
          <select id="query-select"></select>
        </label>
        <label>context
          <select id="context-select"></select>
        </label>
        <button type="button" id="matrix-toggle">matrix</button>
      </div>
    </header>
    <p id="banner" hidden></p>
    <main>
      <section id="repository"></section>
      <section id="results">
        <div id="ranking"></div>
        <div id="matrix"></div>
      </section>
      <section id="editor"></section>
    </main>
  `;

  const banner = root.querySelector<HTMLParagraphElement>("#banner")!;
  const querySelect = root.querySelector<HTMLSelectElement>("#query-select")!;
  const contextSelect = root.querySelector<HTMLSelectElement>("#context-select")!;
  const matrixToggle = root.querySelector<HTMLButtonElement>("#matrix-toggle")!;
  const repositoryEl = root.querySelector<HTMLElement>("#repository")!;
  const rankingEl = root.querySelector<HTMLElement>("#ranking")!;
  const matrixEl = root.querySelector<HTMLElement>("#matrix")!;
  const editorEl = root.querySelector<HTMLElement>("#editor")!;

  function selectionChanged(): void {
    if (querySelect.value && contextSelect.value) {
      void store.select(querySelect.value, contextSelect.value);
    }
  }
  querySelect.addEventListener("change", selectionChanged);
  contextSelect.addEventListener("change", selectionChanged);
  matrixToggle.addEventListener("click", () => void store.toggleMatrix());

  function fillSelect(select: HTMLSelectElement, values: string[], current: string | null): void {
    select.textContent = "";
    const placeholder = document.createElement("option");
    placeholder.value = "";
    placeholder.textContent = "—";
    select.appendChild(placeholder);
    for (const value of values) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = value;
      option.selected = value === current;
      select.appendChild(option);
    }
  }

  function slotSuggestions(): string[] {
    const state = store.state;
    const query = state.instances.find((i) => i.id === state.queryId);
    const pool = query ? [query] : state.instances;
    const names = new Set<string>();
    for (const inst of pool) {
      for (const name of Object.keys(inst.attrs)) names.add(name);
      for (const name of Object.keys(inst.rels)) names.add(name);
    }
    return [...names].sort();
  }

  function render(): void {
    const state = store.state;

    if (state.connectionError) {
      banner.hidden = false;
      banner.className = "error-banner";
      banner.textContent = "";
      banner.appendChild(
        document.createTextNode(`service unreachable: ${state.connectionError} `),
      );
      const retry = document.createElement("button");
      retry.type = "button";
      retry.id = "retry";
      retry.textContent = "retry";
      retry.addEventListener("click", () => void store.loadRepository());
      banner.appendChild(retry);
    } else if (state.loading) {
      banner.hidden = false;
      banner.className = "info-banner";
      banner.textContent = "loading repository…";
    } else {
      banner.hidden = true;
    }

    // the browsable repository: instances whose class some context anchors at
    const startClasses = new Set(
      state.contexts.flatMap((c) =>
        c.entries.filter((e) => e.path.relations.length === 0).map((e) => e.path.start),
      ),
    );
    const objects = state.instances.filter((i) => startClasses.has(i.class));
    fillSelect(querySelect, objects.map((i) => i.id), state.queryId);
    fillSelect(contextSelect, state.contexts.map((c) => c.name), state.contextName);
    matrixToggle.disabled = !state.contextName;
    matrixToggle.textContent = state.matrixVisible ? "hide matrix" : "matrix";

    renderRepository(repositoryEl, objects, state.queryId, (id) => {
      if (state.contextName) void store.select(id, state.contextName);
      else {
        store.state.queryId = id;
        render();
      }
    });
    renderRanking(
      rankingEl,
      state.ranking,
      state.rankingError,
      state.breakdownFor,
      state.breakdown,
      (target) => void store.revealBreakdown(target),
    );
    if (state.matrixVisible) renderMatrix(matrixEl, state.matrix);
    else matrixEl.textContent = "";
    renderEditor(editorEl, state.contextName, state.draft, state.draftError, slotSuggestions(), {
      onStart: () => store.startDraft(),
      onDiscard: () => store.discardDraft(),
      onSave: () => void store.saveDraft(),
      onRemoveTerm: (entry, kind, index) =>
        store.updateDraft((draft) => {
          draft.entries[entry][kind].splice(index, 1);
        }),
      onSwitchOp: (entry, kind, index, op) =>
        store.updateDraft((draft) => {
          draft.entries[entry][kind][index].op = op;
        }),
      onAddTerm: (entry, kind, name, op) =>
        store.updateDraft((draft) => {
          draft.entries[entry][kind].push({ name, op });
        }),
    });
  }

  store.subscribe(render);
  render();
  return { store, root };
}
