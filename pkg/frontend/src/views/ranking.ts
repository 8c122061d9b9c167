// Tie-grouped ranking with score bars; clicking a result reveals the
// per-term breakdown explaining why it scored what it scored.

import { Ranking, Similarity } from "../api.js";

export function formatScore(value: number): string {
  return value.toFixed(4);
}

export function renderRanking(
  container: HTMLElement,
  ranking: Ranking | null,
  error: string | null,
  breakdownFor: string | null,
  breakdown: Similarity | null,
  onReveal: (targetId: string) => void,
): void {
  container.textContent = "";
  if (error) {
    const banner = document.createElement("p");
    banner.className = "error-banner";
    banner.textContent = error;
    container.appendChild(banner);
    return;
  }
  if (!ranking) return;

  const heading = document.createElement("h2");
  heading.textContent = `Ranking for ${ranking.query} (${ranking.context})`;
  container.appendChild(heading);

  const list = document.createElement("ol");
  list.className = "ranking";
  const total = ranking.groups.reduce((n, g) => n + g.ids.length, 0);

  ranking.groups.forEach((group, index) => {
    const item = document.createElement("li");
    item.className = "tie-group";
    item.dataset.position = String(index + 1);
    item.dataset.score = formatScore(group.score);

    const header = document.createElement("div");
    header.className = "tie-group-header";

    const members = document.createElement("span");
    members.className = "tie-members";
    members.textContent =
      group.ids.length === total ? `ALL (${group.ids.join(", ")})` : group.ids.join(", ");
    header.appendChild(members);

    const score = document.createElement("span");
    score.className = "tie-score";
    score.textContent = formatScore(group.score);
    header.appendChild(score);

    const bar = document.createElement("div");
    bar.className = "score-bar";
    const fill = document.createElement("div");
    fill.className = "score-bar-fill";
    fill.style.width = `${(group.score * 100).toFixed(1)}%`;
    bar.appendChild(fill);

    item.append(header, bar);

    for (const id of group.ids) {
      const row = document.createElement("button");
      row.type = "button";
      row.className = "result" + (id === breakdownFor ? " open" : "");
      row.dataset.target = id;
      row.textContent = id;
      row.addEventListener("click", () => onReveal(id));
      item.appendChild(row);
      if (id === breakdownFor) {
        item.appendChild(renderBreakdown(breakdown));
      }
    }
    list.appendChild(item);
  });
  container.appendChild(list);
}

function renderBreakdown(breakdown: Similarity | null): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "breakdown";
  if (!breakdown) {
    panel.textContent = "loading…";
    return panel;
  }
  const summary = document.createElement("p");
  summary.textContent =
    `value ${formatScore(breakdown.value)} = external ${formatScore(breakdown.external)}` +
    ` × extensional ${formatScore(breakdown.extensional)}`;
  panel.appendChild(summary);

  const table = document.createElement("table");
  table.className = "terms";
  for (const term of breakdown.terms) {
    const row = table.insertRow();
    row.insertCell().textContent = term.entity;
    row.insertCell().textContent = term.op;
    row.insertCell().textContent = formatScore(term.score);
    if (term.elements && term.elements.length > 0) {
      const detail = table.insertRow();
      detail.className = "term-elements";
      const cell = detail.insertCell();
      cell.colSpan = 3;
      cell.textContent = term.elements
        .map((m) => `${m.element} → ${m.best_match ?? "∅"} (${formatScore(m.score)})`)
        .join("; ");
    }
  }
  panel.appendChild(table);
  return panel;
}
