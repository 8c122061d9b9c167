// Instance cards: id, class, attribute values, part structure.

import { InstanceInfo } from "../api.js";

function formatValue(value: unknown): string {
  if (Array.isArray(value)) return value.join(", ");
  return String(value);
}

export function renderRepository(
  container: HTMLElement,
  objects: InstanceInfo[],
  selectedId: string | null,
  onSelect: (id: string) => void,
): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = "Repository";
  container.appendChild(heading);

  if (objects.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "The repository is empty.";
    container.appendChild(empty);
    return;
  }

  const grid = document.createElement("div");
  grid.className = "card-grid";
  for (const inst of objects) {
    const card = document.createElement("article");
    card.className = "card" + (inst.id === selectedId ? " selected" : "");
    card.dataset.id = inst.id;

    const title = document.createElement("h3");
    title.textContent = inst.id;
    card.appendChild(title);

    const klass = document.createElement("p");
    klass.className = "card-class";
    klass.textContent = inst.class;
    card.appendChild(klass);

    const attrs = document.createElement("dl");
    for (const [name, value] of Object.entries(inst.attrs)) {
      const dt = document.createElement("dt");
      dt.textContent = name;
      const dd = document.createElement("dd");
      dd.textContent = formatValue(value);
      attrs.append(dt, dd);
    }
    card.appendChild(attrs);

    const parts = inst.rels.hasPart;
    if (parts !== undefined) {
      const partsLine = document.createElement("p");
      partsLine.className = "card-parts";
      partsLine.textContent = `${parts.length} part${parts.length === 1 ? "" : "s"}: ${parts.join(", ")}`;
      card.appendChild(partsLine);
    }

    card.addEventListener("click", () => onSelect(inst.id));
    grid.appendChild(card);
  }
  container.appendChild(grid);
}
