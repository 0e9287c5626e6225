"""End-to-end command-line checks, run in-process."""

import json

import pytest

from twistlab.cli import main, parse_hh_tsv
from twistlab.fields import GF, QQ
from twistlab.twisting import parse_census_tsv
from twistlab.classify import parse_orbit_tsv
from twistlab.quivers import standard_quiver
from twistlab.algebra import standard_algebra


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_census_f3_tsv(capsys):
    code, out, err = run(capsys, "census", "--field", "F3")
    assert code == 0
    rows = parse_census_tsv(out, GF(3))
    assert len(rows) == 8
    assert "census-line-family-form" in err
    assert "census-isolated-v-parameter" in err


def test_census_f2_rows(capsys):
    code, out, _ = run(capsys, "census", "--field", "F2")
    assert code == 0
    assert len(parse_census_tsv(out, GF(2))) == 3


def test_census_q_descriptors(capsys):
    code, out, _ = run(capsys, "census", "--field", "Q")
    assert code == 0
    rows = parse_census_tsv(out, QQ)
    assert len(rows) == 6
    assert [r["family"] for r in rows] == [
        "flip", "line_char_ne_2",
        "isolated_iii", "isolated_iv", "isolated_v", "isolated_vi",
    ]
    assert rows[1]["p"] == "alpha"


def test_census_structured_includes_errata(capsys):
    code, out, _ = run(capsys, "census", "--field", "F3",
                       "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 8
    assert [e["id"] for e in doc["errata"]] == [
        "census-line-family-form", "census-isolated-v-parameter",
    ]


def test_census_bad_field_fails(capsys):
    code, _, err = run(capsys, "census", "--field", "F4")
    assert code == 2
    assert "error:" in err


def test_classify_f5_counts(capsys):
    code, out, _ = run(capsys, "classify", "--field", "F5",
                       "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["class_counts"] == {"I": 1, "IIa": 3, "IIb": 2, "III": 4}


def test_classify_f3_tsv_roundtrip(capsys):
    code, out, _ = run(capsys, "classify", "--field", "F3")
    assert code == 0
    entries = parse_orbit_tsv(out)
    assert len(entries) == 8
    assert sum(1 for e in entries if e.label == "III") == 4


def test_classify_f2_unknown_with_note(capsys):
    code, out, err = run(capsys, "classify", "--field", "F2")
    assert code == 0
    entries = parse_orbit_tsv(out)
    assert all(e.label == "unknown" for e in entries)
    assert "characteristic != 2" in err


def test_hh_quiver_roundtrip(capsys):
    code, out, _ = run(capsys, "hh", "--quiver", "roundtrip", "--N", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == [1] * 11
    assert doc["method"] == "rsz-complex"


def test_hh_qtilde_emits_erratum(capsys):
    code, out, err = run(capsys, "hh", "--quiver", "qtilde", "--N", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == [2, 0, 0, 0, 0, 0]
    assert doc["errata"][0]["id"] == "isolated-vertex-hh0"
    assert "isolated-vertex-hh0" in err


def test_hh_algebra_bar_tsv(capsys):
    code, out, _ = run(capsys, "hh", "--algebra", "matrix2", "--N", "3",
                       "--method", "bar", "--format", "tsv")
    assert code == 0
    assert parse_hh_tsv(out) == [1, 0, 0, 0]


def test_hh_quiver_file_and_algebra_file(tmp_path, capsys):
    qpath = tmp_path / "loop.quiver"
    qpath.write_text(standard_quiver("loop").to_json())
    code, out, _ = run(capsys, "hh", "--quiver", str(qpath), "--N", "4")
    assert code == 0
    assert json.loads(out)["dims"] == [2, 1, 1, 1, 1]

    apath = tmp_path / "matrix2.alg"
    apath.write_text(standard_algebra("matrix2", QQ).to_json())
    code, out, _ = run(capsys, "hh", "--algebra", str(apath), "--N", "3")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 0, 0, 0]


def test_hh_method_e_complex(capsys):
    code, out, _ = run(capsys, "hh", "--quiver", "kronecker", "--N", "4",
                       "--method", "e-complex")
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == [1, 3, 0, 0, 0]
    assert doc["method"] == "e-complex"
    code, out, _ = run(capsys, "hh", "--algebra", "truncated_roundtrip",
                       "--N", "4", "--method", "e-complex")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 1, 1, 1, 1]


def test_hh_input_validation(capsys):
    code, _, err = run(capsys, "hh", "--N", "3")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "hh", "--quiver", "roundtrip",
                       "--algebra", "matrix2", "--N", "3")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "hh", "--algebra", "matrix2", "--N", "3",
                       "--method", "rsz")
    assert code == 2 and "needs a quiver" in err


def test_hh_budget_error_surfaces(capsys, monkeypatch):
    monkeypatch.setenv("TWISTLAB_BUDGET", "100")
    code, _, err = run(capsys, "hh", "--algebra", "matrix2", "--N", "3",
                       "--method", "bar")
    assert code == 2
    assert "budget" in err.lower()


def test_hh_output_file(tmp_path, capsys):
    target = tmp_path / "profile.json"
    code, out, _ = run(capsys, "hh", "--quiver", "four_points", "--N", "3",
                       "-o", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["dims"] == [4, 0, 0, 0]


def test_counterexample_verb(capsys):
    code, out, _ = run(capsys, "counterexample", "--N", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "counterexample confirmed"
    assert doc["rsz_dims"] == [1] * 5
    code, _, err = run(capsys, "counterexample", "--N", "4", "--field", "F2")
    assert code == 2
    assert "error:" in err


def test_reproduce_paper_passes(capsys):
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0
    lines = out.strip().split("\n")
    assert not any(line.startswith("FAIL") for line in lines)
    assert sum(1 for line in lines if line.startswith("pass")) == 28
    assert lines[-1] == "summary: 28/28 checks pass, 3 errata"
    erratum_lines = [l for l in lines if l.lstrip().startswith("erratum[")]
    assert len(erratum_lines) == 3


def test_reproduce_paper_structured_and_stability(capsys):
    code, out1, _ = run(capsys, "reproduce-paper", "--format", "structured",
                        "--skip-bar")
    assert code == 0
    doc = json.loads(out1)
    assert doc["ok"] is True
    assert doc["passed"] == doc["total"] == 28
    assert [e["id"] for e in doc["errata"]] == [
        "census-line-family-form",
        "census-isolated-v-parameter",
        "isolated-vertex-hh0",
    ]
    routes = [c for c in doc["checks"] if c["id"].startswith("hh-three-routes")]
    assert all("bar" not in c["detail"] for c in routes)
    code, out2, _ = run(capsys, "reproduce-paper", "--format", "structured",
                        "--skip-bar")
    assert out1 == out2


def test_reproduce_paper_extra_field_f7(capsys):
    code, out, _ = run(capsys, "reproduce-paper", "--field", "F7",
                       "--skip-bar")
    assert code == 0
    assert "census-count-F7: 12 rows" in out
    assert "summary: 37/37" in out
