"""Technique registry and attribute taxonomies.

The registry is the canonical list of elicitation techniques; every
matrix cell and profile value must resolve against it. Taxonomies
declare the legal attribute vocabularies for the three dimensions
(project, people, process).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    AmbiguousAliasError,
    DuplicateTechniqueError,
    ElicitorError,
    UnknownTechniqueError,
)

CATEGORIES = ("traditional", "collaborative", "cognitive", "observational", "other")

DIMENSIONS = ("project", "people", "process")

PEOPLE_ROLES = ("stakeholder", "analyst")

_WS = re.compile(r"\s+")


def normalize_name(name: str) -> str:
    """Lowercase, trim, and collapse internal whitespace for matching."""
    return _WS.sub(" ", name.strip().lower())


@dataclass(frozen=True)
class TechniqueRecord:
    id: str
    display_name: str
    category: str
    description: str = ""
    aliases: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id or self.id != self.id.strip().lower():
            raise ElicitorError(f"technique id must be a lowercase slug: {self.id!r}")
        if self.category not in CATEGORIES:
            raise ElicitorError(
                f"technique {self.id!r}: category {self.category!r} "
                f"not one of {CATEGORIES}"
            )


class TechniqueRegistry:
    """Immutable-after-load registry; lookup by id, display name, or alias."""

    def __init__(self):
        self._records: dict[str, TechniqueRecord] = {}
        self._names: dict[str, str] = {}  # normalized name -> technique id

    def register(self, record: TechniqueRecord) -> str:
        if record.id in self._records:
            raise DuplicateTechniqueError(f"technique {record.id!r} already registered")
        names = {record.id, normalize_name(record.display_name)}
        names.update(normalize_name(alias) for alias in record.aliases)
        for name in names:
            owner = self._names.get(name)
            if owner is not None and owner != record.id:
                raise AmbiguousAliasError(
                    f"name {name!r} would resolve to both {owner!r} and {record.id!r}"
                )
        self._records[record.id] = record
        for name in names:
            self._names[name] = record.id
        return record.id

    def lookup(self, name: str) -> str:
        technique_id = self._names.get(normalize_name(name))
        if technique_id is None:
            raise UnknownTechniqueError(f"unknown technique: {name!r}")
        return technique_id

    def get(self, technique_id: str) -> TechniqueRecord:
        try:
            return self._records[technique_id]
        except KeyError:
            raise UnknownTechniqueError(f"unknown technique id: {technique_id!r}") from None

    def __contains__(self, technique_id: str) -> bool:
        return technique_id in self._records

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self):
        return iter(self.list())

    def list(self, category: str | None = None) -> list[TechniqueRecord]:
        """Records sorted by id, optionally filtered to one category."""
        if category is not None and category not in CATEGORIES:
            raise ElicitorError(f"unknown category: {category!r}")
        return sorted(
            (r for r in self._records.values()
             if category is None or r.category == category),
            key=lambda r: r.id,
        )

    def ids(self) -> list[str]:
        return sorted(self._records)


@dataclass(frozen=True)
class ValueDef:
    """One legal value of an attribute, with optional numeric-range metadata.

    The range is unit-free annotation only; it never participates in matching.
    """

    id: str
    low: float | None = None
    high: float | None = None


@dataclass
class Attribute:
    id: str
    kind: str  # "ordinal" (values totally ordered as listed) or "nominal"
    values: tuple[ValueDef, ...]

    def __post_init__(self):
        if self.kind not in ("ordinal", "nominal"):
            raise ElicitorError(f"attribute {self.id!r}: kind must be ordinal or nominal")
        seen = set()
        for value in self.values:
            if value.id in seen:
                raise ElicitorError(f"attribute {self.id!r}: duplicate value {value.id!r}")
            seen.add(value.id)

    def value_ids(self) -> list[str]:
        return [v.id for v in self.values]


@dataclass
class AttributeTaxonomy:
    """Attribute vocabulary for one dimension.

    For the people dimension, attribute ids are the roles (stakeholder,
    analyst) and values are the traits. For the process dimension there
    is a single attribute whose values are the process models.
    """

    dimension: str
    attributes: list[Attribute] = field(default_factory=list)

    def __post_init__(self):
        if self.dimension not in DIMENSIONS:
            raise ElicitorError(f"unknown dimension: {self.dimension!r}")
        seen = set()
        for attribute in self.attributes:
            if attribute.id in seen:
                raise ElicitorError(
                    f"{self.dimension} taxonomy: duplicate attribute {attribute.id!r}"
                )
            seen.add(attribute.id)
        if self.dimension == "people":
            for attribute in self.attributes:
                if attribute.id not in PEOPLE_ROLES:
                    raise ElicitorError(
                        f"people attribute must be a role in {PEOPLE_ROLES}, "
                        f"got {attribute.id!r}"
                    )

    def attribute(self, attribute_id: str) -> Attribute | None:
        for attribute in self.attributes:
            if attribute.id == attribute_id:
                return attribute
        return None

    def has_value(self, attribute_id: str, value_id: str) -> bool:
        attribute = self.attribute(attribute_id)
        return attribute is not None and value_id in attribute.value_ids()

    def keys(self) -> list[tuple[str, str]]:
        """All legal (attribute_id, value_id) pairs, in declaration order."""
        return [
            (attribute.id, value.id)
            for attribute in self.attributes
            for value in attribute.values
        ]
