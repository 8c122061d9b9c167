// End-to-end browsing flow against the real service spawned in globalSetup.
// The UI computes nothing itself, so every asserted number is compared with
// what the API says directly.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, type ContextDoc, type Ranking } from "../../src/api.js";
import { createApp, type App } from "../../src/app.js";
import { BASE, waitFor } from "../helpers.js";

let app: App;
let originalUsage: ContextDoc;

function $(selector: string): HTMLElement {
  const el = app.root.querySelector<HTMLElement>(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el;
}

function domGroups(): Array<{ ids: string[]; score: string }> {
  return [...app.root.querySelectorAll<HTMLElement>(".tie-group")].map((group) => ({
    ids: [...group.querySelectorAll<HTMLElement>(".result")].map((b) => b.textContent ?? ""),
    score: group.dataset.score ?? "",
  }));
}

async function selectViaControls(query: string, context: string): Promise<void> {
  const querySelect = $("#query-select") as HTMLSelectElement;
  const contextSelect = $("#context-select") as HTMLSelectElement;
  querySelect.value = query;
  contextSelect.value = context;
  contextSelect.dispatchEvent(new Event("change"));
  await waitFor(
    () =>
      app.store.state.ranking?.query === query &&
      app.store.state.ranking?.context === context,
    `ranking for (${query}, ${context})`,
  );
}

beforeAll(async () => {
  const api = new ApiClient(BASE);
  originalUsage = (await api.contexts()).find((c) => c.name === "usage")!;
  const root = document.createElement("div");
  document.body.appendChild(root);
  app = createApp(root, api);
  await app.store.loadRepository();
});

afterAll(async () => {
  // put the bundled usage context back for whoever runs next
  await new ApiClient(BASE).saveContext(originalUsage);
});

describe("repository view", () => {
  it("shows the nine container cards", () => {
    const cards = app.root.querySelectorAll(".card");
    expect(cards).toHaveLength(9);
  });

  it("the Kettles_19 card lists its six parts", () => {
    const card = app.root.querySelector<HTMLElement>('[data-id="Kettles_19"]')!;
    expect(card.querySelector(".card-parts")!.textContent).toContain("6 parts");
  });
});

describe("running a query", () => {
  it("(WateringCan_1, usage) puts the kettles tie group first at 0.8333", async () => {
    await selectViaControls("WateringCan_1", "usage");
    const groups = domGroups();
    expect(groups[0].ids).toEqual(["Kettles_19", "Kettles_20"]);
    expect(groups[0].score).toBe("0.8333");
  });

  it("(IceBucket_28, part) collapses to a single ALL group", async () => {
    await selectViaControls("IceBucket_28", "part");
    const groups = domGroups();
    expect(groups).toHaveLength(1);
    expect(groups[0].score).toBe("1.0000");
    expect($("#ranking").querySelector(".tie-members")!.textContent).toContain("ALL");
  });

  it("the query never appears among its own results", async () => {
    await selectViaControls("Jug_24", "usage");
    const shown = domGroups().flatMap((g) => g.ids);
    expect(shown).not.toContain("Jug_24");
    expect(shown).toHaveLength(8);
  });

  it("clicking a result reveals the term breakdown", async () => {
    await selectViaControls("WateringCan_1", "usage");
    app.root.querySelector<HTMLButtonElement>('.result[data-target="Kettles_19"]')!.click();
    await waitFor(() => app.store.state.breakdown !== null, "similarity breakdown");
    const breakdown = $("#ranking").querySelector(".breakdown")!;
    expect(breakdown.textContent).toContain("extensional");
    const rows = breakdown.querySelectorAll("table.terms tr");
    expect(rows.length).toBeGreaterThanOrEqual(3);
  });
});

describe("matrix view", () => {
  it("renders the 9x9 grid with a black diagonal and hover readout", async () => {
    await selectViaControls("WateringCan_1", "usage");
    ($("#matrix-toggle") as HTMLButtonElement).click();
    await waitFor(() => app.store.state.matrix !== null, "matrix data");
    const cells = app.root.querySelectorAll<HTMLElement>(".matrix-cell");
    expect(cells).toHaveLength(81);
    for (let i = 0; i < 9; i++) {
      expect(cells[i * 9 + i].style.backgroundColor).toBe("rgb(0, 0, 0)");
    }
    const offDiagonal = cells[1];
    offDiagonal.dispatchEvent(new Event("mouseover"));
    expect($("#matrix").querySelector(".matrix-readout")!.textContent).toMatch(
      /^FruitBowl_30 → IceBucket_28: 0\.9697$/,
    );
    ($("#matrix-toggle") as HTMLButtonElement).click();
  });
});

describe("editing the context", () => {
  it("dropping the capacity term re-ranks to match a direct API call", async () => {
    await selectViaControls("WateringCan_1", "usage");

    ($("#edit-context") as HTMLButtonElement).click();
    const capacityRow = $('[data-term="liquidCapacityInLiters"]');
    capacityRow.querySelector<HTMLButtonElement>(".remove-term")!.click();
    ($("#save-context") as HTMLButtonElement).click();

    await waitFor(
      () => app.store.state.draft === null && app.store.state.ranking !== null,
      "re-rank after save",
    );
    await waitFor(
      () => domGroups().length > 0 && domGroups()[0].score === "1.0000",
      "edited ranking rendered",
    );

    const response = await fetch(`${BASE}/api/rank?query=WateringCan_1&context=usage`);
    const direct = (await response.json()) as Ranking;
    const groups = domGroups();
    expect(groups.length).toBe(direct.groups.length);
    direct.groups.forEach((expected, i) => {
      expect(groups[i].ids).toEqual(expected.ids);
      expect(groups[i].score).toBe(expected.score.toFixed(4));
    });
    // the capacity term is really gone: two objects tie at 1.0 task+solid match
    expect(groups[0].ids).toContain("Kettles_19");
    expect(groups[0].ids).toContain("Jug_26");
  });

  it("an invalid edit surfaces the 422 diagnostics and keeps the draft open", async () => {
    ($("#edit-context") as HTMLButtonElement).click();
    const entryBox = $("#editor .entry");
    const addRow = entryBox.querySelector<HTMLElement>(".add-term")!;
    const nameInput = addRow.querySelector<HTMLInputElement>("input")!;
    const selects = addRow.querySelectorAll<HTMLSelectElement>("select");
    nameInput.value = "hasPart";
    selects[0].value = "rels";
    selects[1].value = "simil";
    addRow.querySelector<HTMLButtonElement>("button")!.click();
    ($("#save-context") as HTMLButtonElement).click();

    await waitFor(() => app.store.state.draftError !== null, "validation diagnostics");
    expect($("#draft-error").textContent).toContain("recursion closure");
    expect(app.store.state.draft).not.toBeNull();
    ($("#editor") as HTMLElement)
      .querySelectorAll<HTMLButtonElement>("button")
      .forEach((b) => {
        if (b.textContent === "Discard") b.click();
      });
  });

  it("a no-op save leaves the ranking unchanged", async () => {
    await selectViaControls("Jug_26", "usage");
    const before = domGroups();
    ($("#edit-context") as HTMLButtonElement).click();
    ($("#save-context") as HTMLButtonElement).click();
    await waitFor(
      () => app.store.state.draft === null && app.store.state.ranking?.query === "Jug_26",
      "no-op save round trip",
    );
    expect(domGroups()).toEqual(before);
  });
});
