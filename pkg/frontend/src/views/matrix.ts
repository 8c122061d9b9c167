// Grayscale similarity matrix: one DOM cell per directed pair, colored
// rgb(g,g,g) with g = round(255 * (1 - sim)) — darker means more similar.
// Hovering a cell shows (query, target, 4-decimal score).

import { MatrixData } from "../api.js";
import { formatScore } from "./ranking.js";

export function grayLevel(score: number): number {
  return Math.round(255 * (1 - score));
}

export function renderMatrix(container: HTMLElement, matrix: MatrixData | null): void {
  container.textContent = "";
  if (!matrix) {
    container.textContent = "loading…";
    return;
  }
  const heading = document.createElement("h2");
  heading.textContent = "Similarity matrix";
  container.appendChild(heading);

  const readout = document.createElement("p");
  readout.className = "matrix-readout";
  readout.textContent = "hover a cell";

  const n = matrix.ids.length;
  const grid = document.createElement("div");
  grid.className = "matrix-grid";
  grid.style.gridTemplateColumns = `repeat(${n}, 1fr)`;

  matrix.ids.forEach((rowId, i) => {
    matrix.ids.forEach((colId, j) => {
      const score = matrix.values[i][j];
      const cell = document.createElement("div");
      cell.className = "matrix-cell";
      const level = grayLevel(score);
      cell.style.backgroundColor = `rgb(${level}, ${level}, ${level})`;
      cell.dataset.row = rowId;
      cell.dataset.col = colId;
      cell.dataset.score = formatScore(score);
      cell.title = `${rowId} → ${colId}: ${formatScore(score)}`;
      cell.addEventListener("mouseover", () => {
        readout.textContent = `${rowId} → ${colId}: ${formatScore(score)}`;
      });
      grid.appendChild(cell);
    });
  });

  container.append(readout, grid);

  const legend = document.createElement("p");
  legend.className = "matrix-legend";
  legend.textContent = `${n} × ${n}, rows are queries — the darker the cell, the more similar`;
  container.appendChild(legend);
}
