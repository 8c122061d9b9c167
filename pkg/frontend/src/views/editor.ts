// Form-based context editor over the declarative structure: add or remove
// (slot, operation) terms per recursion path, switch operations, save.
// Validation stays on the server; a 422 comes back as per-save diagnostics.

import { ContextDoc, ContextEntry } from "../api.js";

const OPERATIONS = ["count", "inter", "simil"];

export interface EditorHandlers {
  onStart: () => void;
  onDiscard: () => void;
  onSave: () => void;
  onRemoveTerm: (entry: number, kind: "attrs" | "rels", index: number) => void;
  onSwitchOp: (entry: number, kind: "attrs" | "rels", index: number, op: string) => void;
  onAddTerm: (entry: number, kind: "attrs" | "rels", name: string, op: string) => void;
}

export function renderEditor(
  container: HTMLElement,
  contextName: string | null,
  draft: ContextDoc | null,
  draftError: string | null,
  slotSuggestions: string[],
  handlers: EditorHandlers,
): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = "Context editor";
  container.appendChild(heading);

  if (!draft) {
    const button = document.createElement("button");
    button.type = "button";
    button.id = "edit-context";
    button.textContent = contextName ? `Edit context "${contextName}"` : "Select a context first";
    button.disabled = !contextName;
    button.addEventListener("click", handlers.onStart);
    container.appendChild(button);
    return;
  }

  const title = document.createElement("p");
  title.className = "editor-title";
  title.textContent = `editing "${draft.name}"`;
  container.appendChild(title);

  draft.entries.forEach((entry, entryIndex) => {
    container.appendChild(renderEntry(entry, entryIndex, slotSuggestions, handlers));
  });

  if (draftError) {
    const banner = document.createElement("p");
    banner.className = "error-banner";
    banner.id = "draft-error";
    banner.textContent = draftError;
    container.appendChild(banner);
  }

  const actions = document.createElement("div");
  actions.className = "editor-actions";
  const save = document.createElement("button");
  save.type = "button";
  save.id = "save-context";
  save.textContent = "Save and re-rank";
  save.addEventListener("click", handlers.onSave);
  const discard = document.createElement("button");
  discard.type = "button";
  discard.textContent = "Discard";
  discard.addEventListener("click", handlers.onDiscard);
  actions.append(save, discard);
  container.appendChild(actions);
}

function renderEntry(
  entry: ContextEntry,
  entryIndex: number,
  slotSuggestions: string[],
  handlers: EditorHandlers,
): HTMLElement {
  const box = document.createElement("fieldset");
  box.className = "entry";
  const legend = document.createElement("legend");
  const pathLabel = [entry.path.start, ...entry.path.relations].join(".");
  legend.textContent = `[${pathLabel}]`;
  box.appendChild(legend);

  for (const kind of ["attrs", "rels"] as const) {
    entry[kind].forEach((term, termIndex) => {
      const row = document.createElement("div");
      row.className = "term-row";
      row.dataset.term = term.name;

      const name = document.createElement("span");
      name.className = "term-name";
      name.textContent = `${term.name} (${kind === "attrs" ? "attribute" : "relation"})`;
      row.appendChild(name);

      const select = document.createElement("select");
      for (const op of OPERATIONS) {
        const option = document.createElement("option");
        option.value = op;
        option.textContent = op;
        option.selected = op === term.op;
        select.appendChild(option);
      }
      select.addEventListener("change", () =>
        handlers.onSwitchOp(entryIndex, kind, termIndex, select.value),
      );
      row.appendChild(select);

      const remove = document.createElement("button");
      remove.type = "button";
      remove.className = "remove-term";
      remove.textContent = "remove";
      remove.addEventListener("click", () => handlers.onRemoveTerm(entryIndex, kind, termIndex));
      row.appendChild(remove);

      box.appendChild(row);
    });
  }

  const add = document.createElement("div");
  add.className = "add-term";
  const nameInput = document.createElement("input");
  nameInput.placeholder = "slot name";
  nameInput.setAttribute("list", "slot-names");
  const datalist = document.createElement("datalist");
  datalist.id = "slot-names";
  for (const slot of slotSuggestions) {
    const option = document.createElement("option");
    option.value = slot;
    datalist.appendChild(option);
  }
  const kindSelect = document.createElement("select");
  for (const kind of ["attrs", "rels"]) {
    const option = document.createElement("option");
    option.value = kind;
    option.textContent = kind === "attrs" ? "attribute" : "relation";
    kindSelect.appendChild(option);
  }
  const opSelect = document.createElement("select");
  for (const op of OPERATIONS) {
    const option = document.createElement("option");
    option.value = op;
    option.textContent = op;
    opSelect.appendChild(option);
  }
  const addButton = document.createElement("button");
  addButton.type = "button";
  addButton.textContent = "add term";
  addButton.addEventListener("click", () => {
    if (nameInput.value.trim()) {
      handlers.onAddTerm(
        entryIndex,
        kindSelect.value as "attrs" | "rels",
        nameInput.value.trim(),
        opSelect.value,
      );
    }
  });
  add.append(nameInput, datalist, kindSelect, opSelect, addButton);
  box.appendChild(add);
  return box;
}
