"""Rendering of recommendations, diffs and taxonomies.

The structured form is canonical JSON (stable key order, sorted set
members) shared verbatim by the CLI and the HTTP service, so the two
transports cannot drift apart.
"""

from __future__ import annotations

import json

from .dataset import Dataset
from .engine import Diff, Recommendation


def _sorted(techniques) -> list[str]:
    return sorted(techniques)


def recommendation_to_doc(recommendation: Recommendation, dataset: Dataset) -> dict:
    return {
        "label": recommendation.profile_label,
        "dataset_version": dataset.version,
        "per_matrix": {
            "project": _sorted(recommendation.per_matrix["project"]),
            "people": _sorted(recommendation.per_matrix["people"]),
            "process": _sorted(recommendation.per_matrix["process"]),
        },
        "union": _sorted(recommendation.union_set),
        "decisions": [
            {
                "technique": d.technique,
                "verdict": d.verdict,
                "decided_by": d.decided_by,
                "reason": d.reason,
            }
            for d in recommendation.feasibility
        ],
        "final": _sorted(recommendation.final_set),
        "trace": {
            technique: [
                {
                    "matrix": e.matrix,
                    "attribute": e.attribute,
                    "value": e.value,
                    "cell": e.cell,
                }
                for e in evidence
            ]
            for technique, evidence in sorted(recommendation.trace.items())
        },
        "warnings": list(recommendation.warnings),
    }


def diff_to_doc(diff: Diff, dataset: Dataset) -> dict:
    return {
        "dataset_version": dataset.version,
        "added": _sorted(diff.added),
        "removed": _sorted(diff.removed),
        "unchanged": _sorted(diff.unchanged),
    }


def taxonomy_to_doc(dataset: Dataset) -> dict:
    return {
        "dataset_version": dataset.version,
        "threshold": str(dataset.threshold),
        "techniques": [
            {
                "id": record.id,
                "display_name": record.display_name,
                "category": record.category,
                "description": record.description,
                "aliases": list(record.aliases),
            }
            for record in dataset.registry
        ],
        "dimensions": {
            dimension: [
                {
                    "id": attribute.id,
                    "kind": attribute.kind,
                    "values": [
                        {
                            "id": value.id,
                            **(
                                {"low": value.low, "high": value.high}
                                if value.low is not None else {}
                            ),
                        }
                        for value in attribute.values
                    ],
                }
                for attribute in dataset.taxonomies[dimension].attributes
            ]
            for dimension in ("project", "people", "process")
        },
    }


def render_structured(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_text(recommendation: Recommendation, dataset: Dataset) -> str:
    lines = []
    label = recommendation.profile_label or "(unlabeled)"
    lines.append(f"Recommendation for {label} (dataset {dataset.version})")
    lines.append("")
    for key, title in (("project", "Project matrix"),
                       ("people", "People matrix"),
                       ("process", "Process matrix")):
        members = _sorted(recommendation.per_matrix[key])
        lines.append(f"{title}: {', '.join(members) if members else '(none)'}")
    union = _sorted(recommendation.union_set)
    lines.append(f"Union ({len(union)}): {', '.join(union) if union else '(none)'}")
    if recommendation.feasibility:
        lines.append("")
        lines.append("Feasibility decisions:")
        for decision in recommendation.feasibility:
            lines.append(
                f"  {decision.verdict:7s} {decision.technique} "
                f"[{decision.decided_by}] {decision.reason}"
            )
    final = _sorted(recommendation.final_set)
    lines.append("")
    lines.append(f"Final ({len(final)}): {', '.join(final) if final else '(none)'}")
    for warning in recommendation.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"


def render_trace(recommendation: Recommendation, technique: str) -> str:
    """Human-readable evidence listing for one technique."""
    evidence = recommendation.trace.get(technique, [])
    if not evidence:
        return f"{technique}: not selected: no supporting cell\n"
    lines = [f"{technique}: supported by {len(evidence)} cell(s)"]
    for entry in evidence:
        lines.append(
            f"  {entry.matrix} matrix: {entry.attribute}={entry.value} -> {entry.cell}"
        )
    return "\n".join(lines) + "\n"
