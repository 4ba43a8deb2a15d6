"""Profile documents: one project's declared attributes plus feasibility log.

Profile files reuse the dataset file's section/comment conventions so
there is a single parsing stack. Sections:

    [profile]      label = ...
    [project]      attribute = value            (one line per attribute)
    [people]       role = trait, trait, ...
    [process]      model = <process model id>
    [feasibility]  technique | verdict | decided-by | reason

All sections except [profile] are optional; an omitted dimension simply
contributes the empty set.
"""

from __future__ import annotations

from typing import IO

from .dataset import Dataset
from .engine import FeasibilityDecision, ProjectProfile, validate_profile
from .errors import ElicitorError, ParseError
from .parsing import parse_sections, sections_by_name

_SECTIONS = {"profile", "project", "people", "process", "feasibility"}


def parse_profile(
    source: str | IO[bytes] | IO[str],
    name: str = "<profile>",
) -> tuple[ProjectProfile, list[FeasibilityDecision]]:
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    else:
        text = source
    sections = sections_by_name(parse_sections(text, name), _SECTIONS, name)

    label = ""
    if "profile" in sections:
        header = sections["profile"].pairs(name)
        for key in header:
            if key != "label":
                raise ParseError(f"unknown profile key {key!r}", source=name)
        label = header.get("label", "")

    project_values: set[tuple[str, str]] = set()
    if "project" in sections:
        for attribute, value in sections["project"].pairs(name).items():
            project_values.add((attribute, value))

    people_values: set[tuple[str, str]] = set()
    if "people" in sections:
        for role, traits in sections["people"].pairs(name).items():
            for trait in traits.split(","):
                trait = trait.strip()
                if trait:
                    people_values.add((role, trait))

    process_model: str | None = None
    if "process" in sections:
        pairs = sections["process"].pairs(name)
        for key in pairs:
            if key != "model":
                raise ParseError(f"unknown process key {key!r}", source=name)
        process_model = pairs.get("model") or None

    decisions: list[FeasibilityDecision] = []
    if "feasibility" in sections:
        for number, cells in sections["feasibility"].rows():
            if len(cells) != 4:
                raise ParseError(
                    "feasibility row needs 'technique | verdict | decided-by | reason'",
                    source=name, line=number,
                )
            technique, verdict, decided_by, reason = cells
            try:
                decisions.append(FeasibilityDecision(
                    technique=technique,
                    verdict=verdict,
                    reason=reason,
                    decided_by=decided_by,
                ))
            except ElicitorError as exc:
                raise ParseError(str(exc), source=name, line=number) from exc

    profile = ProjectProfile(
        label=label,
        project_values=frozenset(project_values),
        people_values=frozenset(people_values),
        process_model=process_model,
    )
    return profile, decisions


def profile_to_payload(
    profile: ProjectProfile,
    decisions: list[FeasibilityDecision] | None = None,
) -> dict:
    """Structured-object form of a profile, as the service accepts it."""
    people: dict[str, list[str]] = {}
    for role, trait in sorted(profile.people_values):
        people.setdefault(role, []).append(trait)
    return {
        "label": profile.label,
        "project": dict(sorted(profile.project_values)),
        "people": people,
        "process_model": profile.process_model,
        "feasibility": [
            {
                "technique": d.technique,
                "verdict": d.verdict,
                "decided_by": d.decided_by,
                "reason": d.reason,
            }
            for d in (decisions or [])
        ],
    }


def load_profile(
    path,
    dataset: Dataset | None = None,
) -> tuple[ProjectProfile, list[FeasibilityDecision]]:
    """Read a profile file; validate against a dataset when one is given."""
    with open(path, encoding="utf-8") as handle:
        profile, decisions = parse_profile(handle, name=str(path))
    if dataset is not None:
        validate_profile(profile, dataset)
        for decision in decisions:
            # Resolve names (aliases, capitalization) to registry ids early.
            resolved = dataset.registry.lookup(decision.technique)
            if resolved != decision.technique:
                decisions[decisions.index(decision)] = FeasibilityDecision(
                    technique=resolved,
                    verdict=decision.verdict,
                    reason=decision.reason,
                    decided_by=decision.decided_by,
                )
    return profile, decisions
