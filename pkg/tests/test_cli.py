import json

import pytest

from gemforge.cli import EXIT_DISAGREE, EXIT_USAGE, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gem_check(capsys):
    code, out, _ = run(capsys, "gem-check", 3, 4, 1, 1)
    assert code == 0
    assert out.strip() == "gem: true (parametric), true (direct)"
    code, out, _ = run(capsys, "gem-check", 4, 3, 1, 1, "--format", "json")
    assert json.loads(out) == {"params": [4, 3, 1, 1], "parametric": False, "direct": False}


def test_census(capsys):
    code, out, _ = run(capsys, "census", 3, 4, 1, 1, "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["match"] is True
    assert rec["census"]["12"] == [8, 8, 8]


def test_build_degenerate(capsys):
    code, out, _ = run(capsys, "build", 1, 1, 0, 0, "--format", "json")
    assert code == 0
    assert json.loads(out)["involutions"] == [[1, 0]] * 4
    code, _, err = run(capsys, "build", 0, 2, 1, 1)
    assert code == EXIT_USAGE and "error" in err


def test_build_text(capsys):
    code, out, _ = run(capsys, "build", 3, 4, 1, 1)
    assert code == 0 and out.startswith("G(3,4,1,1): 24 vertices")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["iso", "3", "4"])
    assert exc.value.code == EXIT_USAGE


def test_iso(capsys):
    code, out, _ = run(capsys, "iso", 5, 8, 3, 2, 5, 8, 3, 3, "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["brute_force"] is True
    assert set(rec["witness"]) == {"phi", "f"}
    assert rec["theorem1"]["isomorphic"] is True
    code, out, _ = run(capsys, "iso", 3, 4, 1, 1, 3, 4, 1, 2)
    assert code == 0 and "not isomorphic" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", 5, 8, 3)
    assert code == 0 and out.strip() == "m-classes: {1,4} {2,3}"
    code, out, _ = run(capsys, "classify", 5, 8, 3, 2, 5, 8, 3, 3, "--format", "json")
    assert json.loads(out)["rule"] == "A-double-prime"
    code, _, _ = run(capsys, "classify", 1, 2)
    assert code == EXIT_USAGE


def test_homology(capsys):
    code, out, _ = run(capsys, "homology", 3, 4, 1, 1)
    assert out.strip() == "H1(S(3,4,1,1)) = Z_2 + Z_6"


def test_covering(capsys):
    code, out, _ = run(capsys, "covering", 5, 8, 3, 2, "--m2", 3, "--format", "json")
    rec = json.loads(out)
    assert rec["compare"] == {"m2": 3, "theorem3": True, "theorem2": True}
    assert rec["covering"]["type"] == "meridian-cyclic"


def test_survey_empty_range(capsys):
    code, out, _ = run(capsys, "survey", 2, 2, "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec) == {"range", "tuples", "pairs", "discrepancies", "conjecture_hits"}
    assert rec["tuples"] == [] and rec["pairs"] == []


def test_survey_ceiling(capsys, monkeypatch):
    monkeypatch.setenv("GEMFORGE_CEILING", "4")
    code, _, err = run(capsys, "survey", "--max-n", 5, "--max-p", 3)
    assert code == EXIT_USAGE and "ceiling" in err


def test_survey_small(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "survey", 3, 4, "--format", "json", "--out", path)
    rec = json.loads(path.read_text())
    assert code == 0
    assert rec["discrepancies"] == []
    pair = rec["pairs"][0]
    assert {"a", "b", "brute_force", "theorem1", "rule", "condition", "agree", "witness"} <= set(pair)
    assert EXIT_DISAGREE == 3
