from __future__ import annotations

import pytest

from elicitor.errors import (
    AmbiguousAliasError,
    DuplicateTechniqueError,
    ElicitorError,
    UnknownTechniqueError,
)
from elicitor.taxonomy import (
    Attribute,
    AttributeTaxonomy,
    TechniqueRecord,
    TechniqueRegistry,
    ValueDef,
    normalize_name,
)


def make_registry():
    registry = TechniqueRegistry()
    registry.register(TechniqueRecord(
        id="interview", display_name="Interview", category="traditional",
    ))
    registry.register(TechniqueRecord(
        id="focus-group", display_name="Focus Group", category="collaborative",
        aliases=("focus groups",),
    ))
    return registry


def test_register_returns_id():
    registry = make_registry()
    assert registry.register(TechniqueRecord(
        id="survey", display_name="Survey", category="traditional",
    )) == "survey"


def test_lookup_by_alias_and_display_name():
    registry = make_registry()
    assert registry.lookup("Focus Group") == "focus-group"
    assert registry.lookup("focus groups") == "focus-group"


def test_lookup_normalizes_case_and_whitespace():
    registry = make_registry()
    assert registry.lookup("  INTERVIEW ") == "interview"
    assert registry.lookup("Focus   Group") == "focus-group"


def test_lookup_unknown_is_an_error():
    registry = make_registry()
    with pytest.raises(UnknownTechniqueError):
        registry.lookup("telepathy")


def test_duplicate_id_rejected():
    registry = make_registry()
    with pytest.raises(DuplicateTechniqueError):
        registry.register(TechniqueRecord(
            id="interview", display_name="Interview 2", category="traditional",
        ))


def test_ambiguous_alias_rejected():
    registry = make_registry()
    with pytest.raises(AmbiguousAliasError):
        registry.register(TechniqueRecord(
            id="group-session", display_name="Group Session",
            category="collaborative", aliases=("focus group",),
        ))


def test_id_must_be_lowercase_slug():
    with pytest.raises(ElicitorError):
        TechniqueRecord(id="Interview", display_name="x", category="traditional")
    with pytest.raises(ElicitorError):
        TechniqueRecord(id="", display_name="x", category="traditional")


def test_category_closed_set():
    with pytest.raises(ElicitorError):
        TechniqueRecord(id="x", display_name="x", category="contextual")


def test_list_sorted_and_filtered():
    registry = make_registry()
    assert [r.id for r in registry.list()] == ["focus-group", "interview"]
    assert [r.id for r in registry.list("traditional")] == ["interview"]
    assert registry.list("cognitive") == []


def test_normalize_name():
    assert normalize_name("  Foo   Bar ") == "foo bar"


# -- default registry contents ------------------------------------------------

def test_default_registry_size(dataset):
    assert len(dataset.registry) >= 20


def test_traditional_category_contents(dataset):
    assert {r.id for r in dataset.registry.list("traditional")} == {
        "interview", "questionnaire", "data-from-existing-system", "survey",
    }


def test_observational_category_contents(dataset):
    assert {r.id for r in dataset.registry.list("observational")} == {
        "observation", "ethnography",
    }


def test_case_study_only_techniques_are_other(dataset):
    for technique_id in ("introspection", "concept-mind-mapping",
                         "analysis-of-existing-domain"):
        assert dataset.registry.get(technique_id).category == "other"


def test_slash_names_resolve(dataset):
    assert dataset.registry.lookup("Ethnography/Social analysis") == "ethnography"
    assert dataset.registry.lookup("Use cases/Scenarios") == "use-cases-scenarios"
    assert dataset.registry.lookup("use cases") == "use-cases-scenarios"
    assert dataset.registry.lookup("scenarios") == "use-cases-scenarios"


def test_registry_roundtrip_all_aliases(dataset):
    for record in dataset.registry:
        assert dataset.registry.lookup(record.id) == record.id
        assert dataset.registry.lookup(record.display_name) == record.id
        for alias in record.aliases:
            assert dataset.registry.lookup(alias) == record.id


def test_category_partition(dataset):
    from elicitor.taxonomy import CATEGORIES
    everything = [r.id for r in dataset.registry.list()]
    by_category = [r.id for c in CATEGORIES for r in dataset.registry.list(c)]
    assert sorted(by_category) == sorted(everything)
    assert len(by_category) == len(set(by_category))


# -- attribute taxonomies -----------------------------------------------------

def test_attribute_rejects_duplicate_values():
    with pytest.raises(ElicitorError):
        Attribute(id="size", kind="ordinal",
                  values=(ValueDef("small"), ValueDef("small")))


def test_people_taxonomy_requires_role_attributes():
    with pytest.raises(ElicitorError):
        AttributeTaxonomy(dimension="people", attributes=[
            Attribute(id="manager", kind="nominal", values=(ValueDef("novice"),)),
        ])


def test_ordinal_values_keep_declared_order(dataset):
    size = dataset.taxonomies["project"].attribute("size")
    assert size.kind == "ordinal"
    assert size.value_ids() == ["small", "medium", "large", "very-large"]


def test_size_range_metadata_is_annotation_only(dataset):
    size = dataset.taxonomies["project"].attribute("size")
    large = next(v for v in size.values if v.id == "large")
    assert (large.low, large.high) == (1000.0, 4000.0)
