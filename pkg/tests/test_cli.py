from __future__ import annotations

import io
import json

import pytest

from elicitor import default_dataset_path, fixture_path
from elicitor.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_recommend_ipos_text():
    code, out, _ = invoke("recommend", str(fixture_path("ipos")))
    assert code == 0
    assert "Final (7)" in out
    assert "workshop" in out


def test_recommend_structured_final_sets():
    for name, expected in (
        ("ipos", 7),
        ("osm", 6),
        ("bhoomi", 11),
    ):
        code, out, _ = invoke("recommend", str(fixture_path(name)),
                              "--format", "structured")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["final"]) == expected
        assert set(doc["final"]) <= set(doc["union"])


def test_structured_output_is_deterministic():
    _, first, _ = invoke("recommend", str(fixture_path("osm")), "--format", "structured")
    _, second, _ = invoke("recommend", str(fixture_path("osm")), "--format", "structured")
    assert first == second


def test_text_and_structured_report_same_sets():
    _, text, _ = invoke("recommend", str(fixture_path("bhoomi")))
    _, structured, _ = invoke("recommend", str(fixture_path("bhoomi")),
                              "--format", "structured")
    doc = json.loads(structured)
    for technique in doc["final"]:
        assert technique in text
    for technique in doc["union"]:
        assert technique in text


def test_recommend_unknown_value_exits_2(tmp_path):
    bad = tmp_path / "bad.profile"
    bad.write_text("[profile]\nlabel = bad\n\n[project]\ncomplexity = galactic\n")
    code, _, err = invoke("recommend", str(bad))
    assert code == 2
    assert "galactic" in err


def test_recommend_missing_file_exits_2():
    code, _, err = invoke("recommend", "no/such/file.profile")
    assert code == 2
    assert "FILE_NOT_FOUND" in err


def test_empty_profile_exits_0_with_warning(tmp_path):
    empty = tmp_path / "empty.profile"
    empty.write_text("[profile]\nlabel = nothing\n")
    code, out, _ = invoke("recommend", str(empty))
    assert code == 0
    assert "warning" in out


def test_validate_default_dataset():
    code, out, _ = invoke("validate")
    assert code == 0
    assert out.startswith("ok:")


def test_validate_range_error(tmp_path):
    text = default_dataset_path().read_text()
    corrupted = tmp_path / "corrupt.dataset"
    corrupted.write_text(text.replace("interview | 0.90 | 0.85 | 0.90 | 0.80",
                                      "interview | 0.90 | 0.85 | 1.3 | 0.80"))
    code, out, _ = invoke("validate", "--dataset", str(corrupted))
    assert code == 2
    assert "RANGE" in out


def test_validate_dangling_error(tmp_path):
    text = default_dataset_path().read_text()
    # drop interview from the registry while the matrices still use it
    lines = [l for l in text.splitlines()
             if not l.startswith("interview | traditional")]
    corrupted = tmp_path / "corrupt.dataset"
    corrupted.write_text("\n".join(lines) + "\n")
    code, out, _ = invoke("validate", "--dataset", str(corrupted))
    assert code == 2
    assert "DANGLING" in out


def test_validate_domain_error(tmp_path):
    text = default_dataset_path().read_text()
    corrupted = tmp_path / "corrupt.dataset"
    corrupted.write_text(text.replace(
        "observation | Y | N | N | N | Y | Y | N | N",
        "observation | Y | N | N | N | Y | Y | N | 0.7",
    ))
    code, out, _ = invoke("validate", "--dataset", str(corrupted))
    assert code == 2
    assert "DOMAIN" in out


def test_explain_selected_technique():
    code, out, _ = invoke("explain", str(fixture_path("ipos")), "ethnography")
    assert code == 0
    assert "project matrix" in out
    assert "process-model=agile" in out


def test_explain_not_selected():
    code, out, _ = invoke("explain", str(fixture_path("ipos")), "laddering")
    assert code == 0
    assert "not selected: no supporting cell" in out


def test_explain_unknown_technique():
    code, _, err = invoke("explain", str(fixture_path("ipos")), "xyzzy")
    assert code == 2
    assert "UNKNOWN_TECHNIQUE" in err


def test_explain_resolves_aliases():
    code, out, _ = invoke("explain", str(fixture_path("ipos")), "Focus Group")
    assert code == 0
    assert out.startswith("focus-group:")


def test_taxonomy_lists_dimensions():
    code, out, _ = invoke("taxonomy")
    assert code == 0
    for heading in ("Project attributes:", "People attributes:", "Process attributes:"):
        assert heading in out
    assert "process-model (nominal): waterfall, prototyping, agile, spiral" in out


def test_diff_structured():
    code, out, _ = invoke("diff", str(fixture_path("ipos")), str(fixture_path("osm")),
                          "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"dataset_version", "added", "removed", "unchanged"}


def test_diff_self_is_empty():
    code, out, _ = invoke("diff", str(fixture_path("ipos")), str(fixture_path("ipos")))
    assert code == 0
    assert "added: (none)" in out
    assert "removed: (none)" in out


def test_usage_error_exits_1():
    code, _, err = invoke("frobnicate")
    assert code == 1
    assert "usage error" in err


@pytest.mark.parametrize("name", ["ipos", "osm", "bhoomi"])
def test_exit_code_zero_for_all_fixtures(name):
    code, _, _ = invoke("recommend", str(fixture_path(name)))
    assert code == 0
