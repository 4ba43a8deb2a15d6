// DOM wiring. Rendering only: the engine lives server-side and every
// displayed set is copied verbatim from a service response.

import { ApiClient, ApiError } from "./api.js";
import { DecisionBoard, LatestWins, ProfileDraft } from "./draft.js";
import { downloadReport } from "./export.js";
import type {
  DiffDoc,
  ProfilePayload,
  RecommendationDoc,
  TaxonomyDoc,
} from "./types.js";

const client = new ApiClient();
const gate = new LatestWins<RecommendationDoc>();
const board = new DecisionBoard();

let taxonomy: TaxonomyDoc;
let draft: ProfileDraft;
let comparisonBase: ProfilePayload | null = null;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function showBanner(message: string | null): void {
  const banner = byId("banner");
  banner.textContent = message ?? "";
  banner.hidden = message === null;
}

function renderPickers(): void {
  const root = byId("pickers");
  root.replaceChildren();

  const projectPanel = el("section", "panel");
  projectPanel.append(el("h2", undefined, "Project"));
  for (const attribute of taxonomy.dimensions.project) {
    const row = el("label", "picker-row", `${attribute.id} `);
    const select = el("select");
    select.append(el("option", undefined, "(unset)"));
    for (const value of attribute.values) {
      const option = el("option", undefined, value.id);
      option.value = value.id;
      select.append(option);
    }
    select.addEventListener("change", () => {
      draft.setProjectValue(attribute.id, select.value || null);
      void refresh();
    });
    row.append(select);
    projectPanel.append(row);
  }

  const peoplePanel = el("section", "panel");
  peoplePanel.append(el("h2", undefined, "People"));
  for (const role of taxonomy.dimensions.people) {
    const group = el("div", "picker-row", `${role.id}: `);
    for (const trait of role.values) {
      const label = el("label", "trait");
      const box = el("input");
      box.type = "checkbox";
      box.addEventListener("change", () => {
        draft.toggleTrait(role.id, trait.id, box.checked);
        void refresh();
      });
      label.append(box, document.createTextNode(trait.id));
      group.append(label);
    }
    peoplePanel.append(group);
  }

  const processPanel = el("section", "panel");
  processPanel.append(el("h2", undefined, "Process"));
  const modelAttr = taxonomy.dimensions.process.find((a) => a.id === "process-model");
  const select = el("select");
  select.append(el("option", undefined, "(none)"));
  for (const value of modelAttr?.values ?? []) {
    const option = el("option", undefined, value.id);
    option.value = value.id;
    select.append(option);
  }
  select.addEventListener("change", () => {
    draft.setProcessModel(select.value || null);
    void refresh();
  });
  processPanel.append(select);

  root.append(projectPanel, peoplePanel, processPanel);
}

function techniqueChip(technique: string, doc: RecommendationDoc): HTMLElement {
  const chip = el("details", "chip");
  chip.append(el("summary", undefined, technique));
  const evidence = doc.trace[technique] ?? [];
  const list = el("ul", "evidence");
  for (const entry of evidence) {
    list.append(el(
      "li", undefined,
      `${entry.matrix}: ${entry.attribute}=${entry.value} → ${entry.cell}`,
    ));
  }
  chip.append(list);
  return chip;
}

function renderResult(doc: RecommendationDoc): void {
  const root = byId("result");
  root.replaceChildren();
  board.setUnion(doc.union);

  const sets: [string, string[]][] = [
    ["Project matrix", doc.per_matrix.project],
    ["People matrix", doc.per_matrix.people],
    ["Process matrix", doc.per_matrix.process],
    [`Union (${doc.union.length})`, doc.union],
  ];
  for (const [title, members] of sets) {
    const row = el("div", "set-row");
    row.append(el("strong", undefined, `${title}: `));
    if (members.length === 0) {
      row.append(el("em", undefined, "(none)"));
    }
    for (const technique of members) {
      row.append(techniqueChip(technique, doc));
    }
    root.append(row);
  }

  root.append(renderBoard());

  const finalRow = el("div", "set-row final");
  finalRow.append(el("strong", undefined, `Final (${doc.final.length}): `));
  for (const technique of doc.final) {
    finalRow.append(techniqueChip(technique, doc));
  }
  root.append(finalRow);

  for (const warning of doc.warnings) {
    root.append(el("p", "warning", warning));
  }

  const exportButton = el("button", undefined, "Export report");
  exportButton.disabled = draft.dirty;
  exportButton.addEventListener("click", () => downloadReport(doc));
  root.append(exportButton);
}

function renderBoard(): HTMLElement {
  const panel = el("section", "panel board");
  panel.append(el("h2", undefined, "Feasibility"));
  for (const technique of board.unionMembers()) {
    const row = el("div", "board-row");
    row.append(el("span", "tech", technique));
    const reason = el("input");
    reason.type = "text";
    reason.placeholder = "reason (required to exclude)";
    const decider = el("select");
    for (const who of ["analyst-view", "user-view"]) {
      const option = el("option", undefined, who);
      option.value = who;
      decider.append(option);
    }
    const excludeButton = el("button", undefined,
      board.verdictFor(technique) === "exclude" ? "excluded" : "exclude");
    excludeButton.addEventListener("click", () => {
      try {
        if (board.verdictFor(technique) === "exclude") {
          board.reset(technique);
        } else {
          board.exclude(technique, reason.value,
            decider.value as "analyst-view" | "user-view");
        }
        showBanner(null);
        void refresh();
      } catch (error) {
        showBanner(String(error));
      }
    });
    row.append(reason, decider, excludeButton);
    panel.append(row);
  }
  return panel;
}

function renderDiff(diff: DiffDoc): void {
  const root = byId("whatif");
  root.replaceChildren(el("h2", undefined, "What-if vs snapshot"));
  const table = el("div", "diff");
  for (const [title, members] of [
    ["added", diff.added],
    ["removed", diff.removed],
    ["unchanged", diff.unchanged],
  ] as [string, string[]][]) {
    const column = el("div", "diff-col");
    column.append(el("h3", undefined, title));
    for (const technique of members) {
      column.append(el("div", "tech", technique));
    }
    table.append(column);
  }
  root.append(table);
}

async function refresh(): Promise<void> {
  const payload = draft.toPayload(board.list());
  try {
    const doc = await gate.run(() => client.recommend(payload));
    if (doc === null) {
      return; // a newer request superseded this one
    }
    draft.dirty = false;
    draft.lastResponse = doc;
    showBanner(null);
    renderResult(doc);
    if (comparisonBase) {
      renderDiff(await client.whatIf(comparisonBase, draft.toPayload()));
    }
  } catch (error) {
    if (error instanceof ApiError) {
      showBanner(`${error.detail.code}: ${error.detail.message}`);
    } else {
      showBanner("service unreachable");
      byId("pickers").classList.add("disabled");
    }
  }
}

export async function start(): Promise<void> {
  try {
    taxonomy = await client.getTaxonomy();
  } catch {
    showBanner("service unreachable");
    return;
  }
  byId("version").textContent = `dataset ${taxonomy.dataset_version}`;
  draft = new ProfileDraft(taxonomy);

  const labelInput = byId("label") as HTMLInputElement;
  labelInput.addEventListener("change", () => {
    draft.label = labelInput.value;
    void refresh();
  });
  byId("snapshot").addEventListener("click", () => {
    comparisonBase = draft.toPayload();
    void refresh();
  });
  byId("clear").addEventListener("click", () => {
    draft.clear();
    comparisonBase = null;
    byId("whatif").replaceChildren();
    void refresh();
  });

  renderPickers();
  await refresh();
}

if (typeof document !== "undefined" && document.getElementById("pickers")) {
  void start();
}
