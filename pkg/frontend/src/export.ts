// Report export. The exported document is the service response rendered
// with the same canonical JSON layout the CLI uses (2-space indent,
// trailing newline, key order as received), so the file is byte-identical
// to the CLI's structured output for the same profile and decisions.

import type { RecommendationDoc } from "./types.js";

export function renderReport(doc: RecommendationDoc): string {
  return JSON.stringify(doc, null, 2) + "\n";
}

export function reportFilename(doc: RecommendationDoc): string {
  const label = doc.label ? doc.label.toLowerCase().replace(/[^a-z0-9]+/g, "-") : "report";
  return `${label}.recommendation.json`;
}

export function downloadReport(doc: RecommendationDoc): void {
  const blob = new Blob([renderReport(doc)], { type: "application/json" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = reportFilename(doc);
  anchor.click();
  URL.revokeObjectURL(url);
}
