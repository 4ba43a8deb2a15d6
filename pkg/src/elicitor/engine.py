"""Selection engine: per-matrix selection, union, feasibility, tracing.

The pipeline is pure set arithmetic over an immutable dataset:

1. each declared project value selects the techniques marked ``R`` in its
   project-matrix column; the per-dimension result is the union over
   declared values,
2. likewise for people traits (``Y`` cells) and the process model
   (score >= threshold),
3. the three per-dimension sets are unioned,
4. recorded human feasibility judgments may exclude union members.

Every selected technique carries a trace of the matrix cells that put it
in the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dataset import Dataset, PeopleMatrix, ProcessMatrix, ProjectMatrix, is_process_selected
from .errors import ElicitorError, ExcludeAbsentError, TaxonomyError
from .taxonomy import PEOPLE_ROLES

VERDICTS = ("keep", "exclude")
DECIDERS = ("user-view", "analyst-view")


@dataclass(frozen=True)
class ProjectProfile:
    """One project's declared attribute values across the three dimensions."""

    label: str
    project_values: frozenset[tuple[str, str]] = frozenset()
    people_values: frozenset[tuple[str, str]] = frozenset()
    process_model: str | None = None

    def is_empty(self) -> bool:
        return (
            not self.project_values
            and not self.people_values
            and self.process_model is None
        )


@dataclass(frozen=True)
class FeasibilityDecision:
    technique: str
    verdict: str  # keep | exclude
    reason: str
    decided_by: str  # user-view | analyst-view

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ElicitorError(f"verdict must be one of {VERDICTS}: {self.verdict!r}")
        if self.decided_by not in DECIDERS:
            raise ElicitorError(f"decided_by must be one of {DECIDERS}: {self.decided_by!r}")
        if self.verdict == "exclude" and not self.reason.strip():
            raise ElicitorError(f"exclusion of {self.technique!r} requires a reason")


@dataclass(frozen=True)
class Evidence:
    """One matrix cell supporting a technique's selection."""

    matrix: str  # project | people | process
    attribute: str  # attribute id, role, or "process-model"
    value: str  # value id, trait, or model id
    cell: str  # "R", "Y", or the decimal score


@dataclass
class Recommendation:
    profile_label: str
    per_matrix: dict[str, set[str]]  # keys: project, people, process
    union_set: set[str]
    feasibility: list[FeasibilityDecision]
    final_set: set[str]
    trace: dict[str, list[Evidence]]
    warnings: list[str] = field(default_factory=list)


@dataclass
class Diff:
    added: set[str]
    removed: set[str]
    unchanged: set[str]


def validate_profile(profile: ProjectProfile, dataset: Dataset) -> None:
    """Reject values missing from the taxonomies or doubled ordinal values."""
    project_taxonomy = dataset.taxonomies["project"]
    seen_ordinal: dict[str, str] = {}
    for attribute_id, value_id in sorted(profile.project_values):
        attribute = project_taxonomy.attribute(attribute_id)
        if attribute is None:
            raise TaxonomyError(
                f"unknown project attribute {attribute_id!r}",
                field=f"project.{attribute_id}",
            )
        if value_id not in attribute.value_ids():
            raise TaxonomyError(
                f"unknown value {value_id!r} for project attribute {attribute_id!r}",
                field=f"project.{attribute_id}",
            )
        if attribute.kind == "ordinal":
            if attribute_id in seen_ordinal:
                raise TaxonomyError(
                    f"ordinal attribute {attribute_id!r} declared twice "
                    f"({seen_ordinal[attribute_id]!r} and {value_id!r})",
                    field=f"project.{attribute_id}",
                )
            seen_ordinal[attribute_id] = value_id

    people_taxonomy = dataset.taxonomies["people"]
    for role, trait in sorted(profile.people_values):
        if role not in PEOPLE_ROLES:
            raise TaxonomyError(f"unknown role {role!r}", field=f"people.{role}")
        if not people_taxonomy.has_value(role, trait):
            raise TaxonomyError(
                f"unknown trait {trait!r} for role {role!r}",
                field=f"people.{role}",
            )

    if profile.process_model is not None:
        if profile.process_model not in dataset.process_models():
            raise TaxonomyError(
                f"unknown process model {profile.process_model!r}",
                field="process.model",
            )


def select_by_project(
    values: frozenset[tuple[str, str]] | set[tuple[str, str]],
    a: ProjectMatrix,
) -> set[str]:
    selected: set[str] = set()
    for attribute_id, value_id in values:
        selected |= a.techniques_for(attribute_id, value_id)
    return selected


def select_by_people(
    values: frozenset[tuple[str, str]] | set[tuple[str, str]],
    b: PeopleMatrix,
) -> set[str]:
    selected: set[str] = set()
    for role, trait in values:
        selected |= b.techniques_for(role, trait)
    return selected


def select_by_process(
    model: str | None,
    c: ProcessMatrix,
    threshold,
) -> set[str]:
    if model is None:
        return set()
    return c.techniques_for(model, threshold)


def combine(a_set: set[str], b_set: set[str], c_set: set[str]) -> set[str]:
    """Exact three-way union; no ranking, no weighting, no duplicates."""
    return a_set | b_set | c_set


def apply_feasibility(
    union_set: set[str],
    decisions: list[FeasibilityDecision],
) -> set[str]:
    """Drop excluded techniques; keep decisions never alter membership."""
    excluded = set()
    for decision in decisions:
        if decision.technique not in union_set:
            raise ExcludeAbsentError(
                f"feasibility decision targets {decision.technique!r}, "
                f"which is not in the union set",
                field="feasibility",
            )
        if decision.verdict == "exclude":
            excluded.add(decision.technique)
    return union_set - excluded


def _build_trace(profile: ProjectProfile, dataset: Dataset) -> dict[str, list[Evidence]]:
    trace: dict[str, list[Evidence]] = {}

    def add(technique: str, evidence: Evidence) -> None:
        trace.setdefault(technique, []).append(evidence)

    for attribute_id, value_id in sorted(profile.project_values):
        for technique in sorted(dataset.a.techniques_for(attribute_id, value_id)):
            add(technique, Evidence("project", attribute_id, value_id, "R"))
    for role, trait in sorted(profile.people_values):
        for technique in sorted(dataset.b.techniques_for(role, trait)):
            add(technique, Evidence("people", role, trait, "Y"))
    if profile.process_model is not None:
        model = profile.process_model
        for technique in sorted(dataset.c.techniques_for(model, dataset.threshold)):
            score = dataset.c.score(technique, model)
            add(technique, Evidence("process", "process-model", model, str(score)))
    return trace


def recommend(
    profile: ProjectProfile,
    dataset: Dataset,
    decisions: list[FeasibilityDecision] | None = None,
) -> Recommendation:
    """Run the full pipeline for one profile. Deterministic and pure."""
    decisions = list(decisions or [])
    validate_profile(profile, dataset)

    per_matrix = {
        "project": select_by_project(profile.project_values, dataset.a),
        "people": select_by_people(profile.people_values, dataset.b),
        "process": select_by_process(profile.process_model, dataset.c, dataset.threshold),
    }
    union_set = combine(per_matrix["project"], per_matrix["people"], per_matrix["process"])
    final_set = apply_feasibility(union_set, decisions)

    warnings = []
    if profile.is_empty():
        warnings.append("empty profile: no attribute values declared")
    if not final_set:
        warnings.append("empty final set: no technique selected")

    return Recommendation(
        profile_label=profile.label,
        per_matrix=per_matrix,
        union_set=union_set,
        feasibility=decisions,
        final_set=final_set,
        trace=_build_trace(profile, dataset),
        warnings=warnings,
    )


def what_if_diff(p1: ProjectProfile, p2: ProjectProfile, dataset: Dataset) -> Diff:
    """Diff the pre-feasibility union sets of two profiles."""
    u1 = recommend(p1, dataset).union_set
    u2 = recommend(p2, dataset).union_set
    return Diff(added=u2 - u1, removed=u1 - u2, unchanged=u1 & u2)


def check_evidence(evidence: Evidence, technique: str, dataset: Dataset) -> bool:
    """Re-evaluate one trace entry against the dataset it cites."""
    if evidence.matrix == "project":
        return dataset.a.is_recommended(technique, evidence.attribute, evidence.value)
    if evidence.matrix == "people":
        return dataset.b.is_yes(technique, evidence.attribute, evidence.value)
    if evidence.matrix == "process":
        score = dataset.c.score(technique, evidence.value)
        return (
            score is not None
            and str(score) == evidence.cell
            and is_process_selected(score, dataset.threshold)
        )
    return False
