"""Load, validate, serialize and query the three knowledge matrices.

A dataset file is one sectioned UTF-8 document (see ``parsing``):
a ``[header]`` block (version, provenance, threshold), a ``[techniques]``
table, one ``[taxonomy <dimension>]`` table per dimension, and the three
matrix tables. Matrix cells: project ``R``/``-``, people ``Y``/``N``,
process decimal scores in [0, 1].

Matrices are stored sparsely; a missing project cell means
not-recommended and a missing people cell means N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import IO

from .errors import DomainError, IntegrityError, ParseError, RangeError
from .parsing import Section, parse_sections, sections_by_name
from .taxonomy import (
    CATEGORIES,
    Attribute,
    AttributeTaxonomy,
    TechniqueRecord,
    TechniqueRegistry,
    ValueDef,
)

DEFAULT_THRESHOLD = Decimal("0.5")

PROCESS_ATTRIBUTE = "process-model"

_SECTIONS = {
    "header",
    "techniques",
    "taxonomy project",
    "taxonomy people",
    "taxonomy process",
    "matrix project",
    "matrix people",
    "matrix process",
}

_VALUE_WITH_RANGE = re.compile(r"^(?P<id>[^()\s]+)\s*\((?P<low>[\d.]+)-(?P<high>[\d.]+)\)$")

_SCORE = re.compile(r"^(?:0|1)(?:\.\d{1,2})?$")


@dataclass
class ProjectMatrix:
    """Technique applicability marks per (project attribute, value)."""

    columns: list[tuple[str, str]]
    recommended: frozenset[tuple[str, str, str]]  # (technique, attribute, value)

    def is_recommended(self, technique: str, attribute: str, value: str) -> bool:
        return (technique, attribute, value) in self.recommended

    def techniques_for(self, attribute: str, value: str) -> set[str]:
        return {t for (t, a, v) in self.recommended if a == attribute and v == value}

    def techniques(self) -> set[str]:
        return {t for (t, _, _) in self.recommended}


@dataclass
class PeopleMatrix:
    """Y/N marks per (role, trait); only Y cells are stored."""

    columns: list[tuple[str, str]]
    yes: frozenset[tuple[str, str, str]]  # (technique, role, trait)

    def is_yes(self, technique: str, role: str, trait: str) -> bool:
        return (technique, role, trait) in self.yes

    def techniques_for(self, role: str, trait: str) -> set[str]:
        return {t for (t, r, v) in self.yes if r == role and v == trait}

    def techniques(self) -> set[str]:
        return {t for (t, _, _) in self.yes}


@dataclass
class ProcessMatrix:
    """Suitability scores in [0, 1] per (technique, process model)."""

    models: list[str]
    scores: dict[tuple[str, str], Decimal]

    def score(self, technique: str, model: str) -> Decimal | None:
        return self.scores.get((technique, model))

    def techniques_for(self, model: str, threshold: Decimal) -> set[str]:
        return {
            t for (t, m), score in self.scores.items()
            if m == model and score >= threshold
        }

    def techniques(self, threshold: Decimal) -> set[str]:
        return {t for (t, _), score in self.scores.items() if score >= threshold}


@dataclass
class Dataset:
    registry: TechniqueRegistry
    taxonomies: dict[str, AttributeTaxonomy]
    a: ProjectMatrix
    b: PeopleMatrix
    c: ProcessMatrix
    version: str
    provenance: str
    threshold: Decimal = DEFAULT_THRESHOLD

    def process_models(self) -> list[str]:
        attribute = self.taxonomies["process"].attribute(PROCESS_ATTRIBUTE)
        return attribute.value_ids() if attribute else []

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            list(self.registry) == list(other.registry)
            and self.taxonomies == other.taxonomies
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.version == other.version
            and self.provenance == other.provenance
            and self.threshold == other.threshold
        )


def is_process_selected(score, threshold=DEFAULT_THRESHOLD) -> bool:
    """Score >= threshold selects the technique; the boundary is included."""
    if not isinstance(score, Decimal):
        score = Decimal(str(score))
    if not isinstance(threshold, Decimal):
        threshold = Decimal(str(threshold))
    if score < 0 or score > 1:
        raise RangeError(f"process score {score} outside [0, 1]")
    return score >= threshold


def _parse_value_def(token: str, source: str, line: int) -> ValueDef:
    match = _VALUE_WITH_RANGE.match(token)
    if match:
        return ValueDef(
            id=match.group("id"),
            low=float(match.group("low")),
            high=float(match.group("high")),
        )
    if "(" in token or ")" in token:
        raise ParseError(f"malformed value token {token!r}", source=source, line=line)
    return ValueDef(id=token)


def _parse_taxonomy(section: Section, dimension: str, source: str) -> AttributeTaxonomy:
    attributes = []
    for number, cells in section.rows():
        if len(cells) != 3:
            raise ParseError(
                "taxonomy row needs 'attribute | kind | values'",
                source=source, line=number,
            )
        attribute_id, kind, values_text = cells
        values = tuple(
            _parse_value_def(token.strip(), source, number)
            for token in values_text.split(",") if token.strip()
        )
        if not values:
            raise ParseError(
                f"attribute {attribute_id!r} declares no values",
                source=source, line=number,
            )
        attributes.append(Attribute(id=attribute_id, kind=kind, values=values))
    return AttributeTaxonomy(dimension=dimension, attributes=attributes)


def _parse_techniques(section: Section, source: str) -> TechniqueRegistry:
    registry = TechniqueRegistry()
    for number, cells in section.rows():
        if not 3 <= len(cells) <= 5:
            raise ParseError(
                "technique row needs 'id | category | display name [| aliases [| description]]'",
                source=source, line=number,
            )
        cells = cells + [""] * (5 - len(cells))
        technique_id, category, display_name, aliases_text, description = cells
        aliases = tuple(a.strip() for a in aliases_text.split(";") if a.strip())
        registry.register(TechniqueRecord(
            id=technique_id,
            display_name=display_name,
            category=category,
            description=description,
            aliases=aliases,
        ))
    return registry


def _matrix_table(
    section: Section,
    registry: TechniqueRegistry,
    source: str,
) -> tuple[list[str], list[tuple[int, str, list[str]]]]:
    """Split a matrix section into header columns and (line, technique, cells) rows."""
    rows = section.rows()
    if not rows:
        raise ParseError(
            f"section [{section.name}] is empty",
            source=source, line=section.header_line,
        )
    header_line, header = rows[0]
    if header[0] != "technique":
        raise ParseError(
            "matrix header must start with 'technique'",
            source=source, line=header_line,
        )
    columns = header[1:]
    body = []
    for number, cells in rows[1:]:
        if len(cells) != len(header):
            raise ParseError(
                f"row has {len(cells)} cells, header has {len(header)}",
                source=source, line=number,
            )
        technique_id = cells[0]
        if technique_id not in registry:
            raise IntegrityError(
                f"{source}:{number}: unknown technique {technique_id!r} "
                f"in [{section.name}]"
            )
        body.append((number, technique_id, cells[1:]))
    return columns, body


def _parse_project_matrix(
    section: Section,
    registry: TechniqueRegistry,
    taxonomy: AttributeTaxonomy,
    source: str,
) -> ProjectMatrix:
    raw_columns, body = _matrix_table(section, registry, source)
    columns: list[tuple[str, str]] = []
    for column in raw_columns:
        if "=" not in column:
            raise ParseError(
                f"project matrix column must be 'attribute=value', got {column!r}",
                source=source, line=section.header_line,
            )
        attribute, _, value = column.partition("=")
        if not taxonomy.has_value(attribute, value):
            raise IntegrityError(
                f"{source}: project matrix column {column!r} not in taxonomy"
            )
        if (attribute, value) in columns:
            raise ParseError(
                f"duplicate project matrix column {column!r}",
                source=source, line=section.header_line,
            )
        columns.append((attribute, value))
    recommended = set()
    for number, technique_id, cells in body:
        for (attribute, value), cell in zip(columns, cells):
            if cell == "R":
                recommended.add((technique_id, attribute, value))
            elif cell != "-":
                raise ParseError(
                    f"project cell must be 'R' or '-', got {cell!r}",
                    source=source, line=number,
                )
    return ProjectMatrix(columns=columns, recommended=frozenset(recommended))


def _parse_people_matrix(
    section: Section,
    registry: TechniqueRegistry,
    taxonomy: AttributeTaxonomy,
    source: str,
) -> PeopleMatrix:
    raw_columns, body = _matrix_table(section, registry, source)
    columns: list[tuple[str, str]] = []
    for column in raw_columns:
        if ":" not in column:
            raise ParseError(
                f"people matrix column must be 'role:trait', got {column!r}",
                source=source, line=section.header_line,
            )
        role, _, trait = column.partition(":")
        if not taxonomy.has_value(role, trait):
            raise IntegrityError(
                f"{source}: people matrix column {column!r} not in taxonomy"
            )
        if (role, trait) in columns:
            raise ParseError(
                f"duplicate people matrix column {column!r}",
                source=source, line=section.header_line,
            )
        columns.append((role, trait))
    yes = set()
    for number, technique_id, cells in body:
        for (role, trait), cell in zip(columns, cells):
            if cell == "Y":
                yes.add((technique_id, role, trait))
            elif cell != "N":
                raise DomainError(
                    f"{source}:{number}: people cell must be 'Y' or 'N', got {cell!r}"
                )
    return PeopleMatrix(columns=columns, yes=frozenset(yes))


def _parse_process_matrix(
    section: Section,
    registry: TechniqueRegistry,
    taxonomy: AttributeTaxonomy,
    source: str,
) -> ProcessMatrix:
    raw_columns, body = _matrix_table(section, registry, source)
    models: list[str] = []
    for model in raw_columns:
        if not taxonomy.has_value(PROCESS_ATTRIBUTE, model):
            raise IntegrityError(
                f"{source}: process matrix column {model!r} not in taxonomy"
            )
        if model in models:
            raise ParseError(
                f"duplicate process matrix column {model!r}",
                source=source, line=section.header_line,
            )
        models.append(model)
    scores: dict[tuple[str, str], Decimal] = {}
    for number, technique_id, cells in body:
        for model, cell in zip(models, cells):
            if cell == "-":
                continue
            if not _SCORE.match(cell):
                raise ParseError(
                    f"process score must be a decimal in [0, 1] with at most "
                    f"2 fraction digits, got {cell!r}",
                    source=source, line=number,
                )
            try:
                score = Decimal(cell)
            except InvalidOperation:  # pragma: no cover - regex rules this out
                raise ParseError(f"bad decimal {cell!r}", source=source, line=number)
            if score < 0 or score > 1:
                raise RangeError(
                    f"{source}:{number}: process score {cell} outside [0, 1]"
                )
            scores[(technique_id, model)] = score
    return ProcessMatrix(models=models, scores=scores)


def load_dataset(source: str | IO[bytes] | IO[str], name: str = "<dataset>") -> Dataset:
    """Parse and fully validate a dataset document.

    Loading is total: any invariant violation raises instead of producing
    a repaired dataset.
    """
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    else:
        text = source
    sections = sections_by_name(parse_sections(text, name), _SECTIONS, name)
    for required in _SECTIONS:
        if required not in sections:
            raise ParseError(f"missing section [{required}]", source=name)

    header = sections["header"].pairs(name)
    for key in header:
        if key not in ("version", "provenance", "threshold"):
            raise ParseError(f"unknown header key {key!r}", source=name)
    version = header.get("version", "")
    if not version:
        raise ParseError("header must declare a non-empty version", source=name)
    provenance = header.get("provenance", "")
    threshold_text = header.get("threshold", str(DEFAULT_THRESHOLD))
    if not _SCORE.match(threshold_text):
        raise ParseError(f"bad threshold {threshold_text!r}", source=name)
    threshold = Decimal(threshold_text)

    registry = _parse_techniques(sections["techniques"], name)
    taxonomies = {
        dimension: _parse_taxonomy(sections[f"taxonomy {dimension}"], dimension, name)
        for dimension in ("project", "people", "process")
    }
    process_attr = taxonomies["process"].attribute(PROCESS_ATTRIBUTE)
    if process_attr is None:
        raise IntegrityError(
            f"{name}: process taxonomy must declare attribute {PROCESS_ATTRIBUTE!r}"
        )

    return Dataset(
        registry=registry,
        taxonomies=taxonomies,
        a=_parse_project_matrix(sections["matrix project"], registry,
                                taxonomies["project"], name),
        b=_parse_people_matrix(sections["matrix people"], registry,
                               taxonomies["people"], name),
        c=_parse_process_matrix(sections["matrix process"], registry,
                                taxonomies["process"], name),
        version=version,
        provenance=provenance,
        threshold=threshold,
    )


def serialize_dataset(dataset: Dataset) -> str:
    """Render a dataset back into the sectioned text format.

    Reloading the output yields a structurally identical dataset.
    """
    lines = ["[header]"]
    lines.append(f"version = {dataset.version}")
    lines.append(f"provenance = {dataset.provenance}")
    lines.append(f"threshold = {dataset.threshold}")

    lines.append("")
    lines.append("[techniques]")
    for record in dataset.registry:
        lines.append(" | ".join([
            record.id, record.category, record.display_name,
            "; ".join(record.aliases), record.description,
        ]))

    for dimension in ("project", "people", "process"):
        lines.append("")
        lines.append(f"[taxonomy {dimension}]")
        for attribute in dataset.taxonomies[dimension].attributes:
            tokens = []
            for value in attribute.values:
                if value.low is not None and value.high is not None:
                    tokens.append(f"{value.id}({value.low:g}-{value.high:g})")
                else:
                    tokens.append(value.id)
            lines.append(f"{attribute.id} | {attribute.kind} | {', '.join(tokens)}")

    lines.append("")
    lines.append("[matrix project]")
    lines.append("technique | " + " | ".join(f"{a}={v}" for a, v in dataset.a.columns))
    for technique_id in sorted(dataset.a.techniques()):
        cells = [
            "R" if dataset.a.is_recommended(technique_id, a, v) else "-"
            for a, v in dataset.a.columns
        ]
        lines.append(f"{technique_id} | " + " | ".join(cells))

    lines.append("")
    lines.append("[matrix people]")
    lines.append("technique | " + " | ".join(f"{r}:{t}" for r, t in dataset.b.columns))
    for technique_id in sorted(dataset.b.techniques()):
        cells = [
            "Y" if dataset.b.is_yes(technique_id, r, t) else "N"
            for r, t in dataset.b.columns
        ]
        lines.append(f"{technique_id} | " + " | ".join(cells))

    lines.append("")
    lines.append("[matrix process]")
    lines.append("technique | " + " | ".join(dataset.c.models))
    scored = sorted({t for (t, _) in dataset.c.scores})
    for technique_id in scored:
        cells = []
        for model in dataset.c.models:
            score = dataset.c.score(technique_id, model)
            cells.append("-" if score is None else str(score))
        lines.append(f"{technique_id} | " + " | ".join(cells))

    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Finding:
    code: str  # UNREACHABLE, DEAD_VALUE or CATEGORY_GAP
    message: str


@dataclass
class ValidationReport:
    errors: list[Finding] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_dataset(dataset: Dataset) -> ValidationReport:
    """Lint a loaded dataset. Findings are warnings, never errors.

    Integrity violations cannot normally occur in a loaded dataset (the
    loader rejects them), but are re-checked so hand-built datasets get
    the same report.
    """
    report = ValidationReport()

    known = set(dataset.registry.ids())
    referenced = (
        dataset.a.techniques()
        | dataset.b.techniques()
        | {t for (t, _) in dataset.c.scores}
    )
    for technique_id in sorted(referenced - known):
        report.errors.append(Finding(
            "DANGLING", f"matrix references unregistered technique {technique_id!r}"
        ))
    for (technique_id, model), score in sorted(dataset.c.scores.items()):
        if score < 0 or score > 1:
            report.errors.append(Finding(
                "RANGE", f"score {score} for {technique_id!r} in {model!r} outside [0, 1]"
            ))

    reachable = (
        dataset.a.techniques()
        | dataset.b.techniques()
        | dataset.c.techniques(dataset.threshold)
    )
    for technique_id in dataset.registry.ids():
        if technique_id not in reachable:
            report.findings.append(Finding(
                "UNREACHABLE", f"unreachable: {technique_id}"
            ))

    for attribute, value in dataset.taxonomies["project"].keys():
        if not dataset.a.techniques_for(attribute, value):
            report.findings.append(Finding(
                "DEAD_VALUE", f"project value selects nothing: {attribute}={value}"
            ))
    for role, trait in dataset.taxonomies["people"].keys():
        if not dataset.b.techniques_for(role, trait):
            report.findings.append(Finding(
                "DEAD_VALUE", f"people value selects nothing: {role}:{trait}"
            ))
    for _, model in dataset.taxonomies["process"].keys():
        if not dataset.c.techniques_for(model, dataset.threshold):
            report.findings.append(Finding(
                "DEAD_VALUE", f"process model selects nothing: {model}"
            ))

    present = {record.category for record in dataset.registry}
    for category in CATEGORIES:
        if category not in present:
            report.findings.append(Finding(
                "CATEGORY_GAP", f"no techniques registered in category {category!r}"
            ))

    return report
