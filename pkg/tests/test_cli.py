import json
import shutil
import subprocess

import pytest

from equising.cli import IRRATIONAL, MISMATCH, OK, PARSE, VALIDATION, main
from equising.report import GermDocument, Report
from equising.space import validate_germ

MIXED_POLY = "(Y^5+X^2)*Y*(Y^2-X^4)"
CUSP_TRIPLE = "Y^7 + X*Y^4 + X^2*Y^2 - 2*X^3"
TANGENT_PAIR = "Y^4 - X^2"
TANGENT_PAIR_TWIN = "Y^4 - X^2 + X^2*Y"

MIXED_DOC = {
    "abstract": {
        "branches": [
            {"label": "f1", "semigroup": [2, 5]},
            {"label": "f2", "smooth": True},
            {"label": "f3", "smooth": True},
            {"label": "f4", "smooth": True},
        ],
        "contacts": [
            {"pair": ["f1", "f2"], "value": "1"},
            {"pair": ["f1", "f3"], "value": "1"},
            {"pair": ["f1", "f4"], "value": "1"},
            {"pair": ["f2", "f3"], "value": "2"},
            {"pair": ["f2", "f4"], "value": "2"},
            {"pair": ["f3", "f4"], "value": "2"},
        ],
    },
    "lambdas": [{"label": "generic", "transversal": True}],
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == OK, err
    return json.loads(out)


@pytest.fixture
def mixed_file(tmp_path):
    path = tmp_path / "mixed.json"
    path.write_text(json.dumps(MIXED_DOC))
    return str(path)


def _quotients(entry):
    return {q["value"]: q["multiplicity"] for q in entry}


# ------------------------------------------------------------------ analyze


@pytest.mark.parametrize("source", ["poly", "document"])
def test_analyze_mixed_germ(capsys, mixed_file, source):
    argv = ["analyze", "--poly", MIXED_POLY] if source == "poly" else ["analyze", mixed_file]
    d = run_json(capsys, *argv)
    assert _quotients(d["polar_invariants"]) == {"5": 1, "8": 3}
    assert d["L0"] == "7"
    assert d["special_direction"] == "none"
    assert [c["M"] for c in d["components"]] == ["7", "7"]
    black = [v for v in d["tree"]["vertices"] if v["black"]]
    assert sorted((v["d"], v["order"], v["q"], v["m"]) for v in black) == [
        ("1", 5, "5", 1),
        ("2", 3, "8", 2),
        ("5/2", 2, "8", 1),
    ]
    assert sum(e["style"] == "solid" for e in d["tree"]["edges"]) == 1


def test_analyze_cusp_with_transversal_parameter(capsys):
    d = run_json(capsys, "analyze", "--poly", "Y^5+X^2", "--lambda", "transversal")
    assert d["L0"] == "4"
    assert d["special_direction"].startswith("tangent:")
    (lam,) = d["lambdas"]
    assert lam["is_special"] is False and lam["transversal"] is True


def test_analyze_class_dependent_exponent(capsys):
    d = run_json(capsys, "analyze", "--poly", TANGENT_PAIR, "--lambda", "X")
    (lam,) = d["lambdas"]
    assert lam["L_on_polar"] == {"class_dependent": True, "upper": "2", "lower": "1"}
    assert lam["q0"] == "2" and lam["tilde_L"] == "2"


def test_analyze_axis_parameter_of_cusp_triple(capsys):
    d = run_json(capsys, "analyze", "--poly", CUSP_TRIPLE, "--lambda", "X")
    (lam,) = d["lambdas"]
    assert _quotients(lam["quotients"]) == {"7/3": 3, "3": 3}
    assert lam["q0"] == "3"
    assert lam["L_on_polar"] == {"class_dependent": False, "value": "4"}
    assert lam["left_strict"] and lam["right_strict"]
    assert sorted(b["m"] for b in lam["balls"]) == [3, 3]


def test_analyze_morse_with_axis(capsys):
    d = run_json(capsys, "analyze", "--poly", "X*Y", "--lambda", "X")
    (lam,) = d["lambdas"]
    assert lam["quotients"] == [] and lam["q0"] == "-inf"
    assert lam["L_on_polar"]["value"] == "1"


def test_analyze_smooth_germ(capsys):
    d = run_json(capsys, "analyze", "--poly", "Y - X^3")
    assert d["L0"] == "0" and d["lambdas"] == [] and d["notes"]


def test_analyze_text_output(capsys, mixed_file):
    code, out, _ = run(capsys, "analyze", mixed_file)
    assert code == OK and "7" in out


def test_analyze_with_verification(capsys):
    d = run_json(capsys, "analyze", "--poly", MIXED_POLY, "--verify")
    assert d["verify"]["passed"] is True
    assert d["ledger"]["total"] == 7


def test_partial_report_on_irrational_track(capsys):
    code, out, _ = run(capsys, "analyze", "--poly", "(Y^2-2*X^3)^2-X^7", "--partial", "--json")
    assert code == IRRATIONAL
    d = json.loads(out)
    assert d["ledger"]["partial"] is True and d["ledger"]["total"] == 3
    assert d["error"]


def test_report_roundtrip(capsys):
    code, out, _ = run(capsys, "analyze", "--poly", MIXED_POLY, "--lambda", "X", "--verify", "--json")
    assert code == OK
    R = Report.loads(out)
    assert Report.loads(R.dumps()) == R
    assert json.loads(R.dumps()) == json.loads(out)


def test_identical_germ_data_for_twins(capsys):
    a = run_json(capsys, "analyze", "--poly", TANGENT_PAIR, "--lambda", "X")
    b = run_json(capsys, "analyze", "--poly", TANGENT_PAIR_TWIN, "--lambda", "X")
    strip = lambda d: (d["L0"], d["polar_invariants"], [(l["q0"], l["L_on_polar"]) for l in d["lambdas"]])
    assert strip(a) == strip(b)


# --------------------------------------------------------------------- tree


def test_tree_dot_of_mixed_germ(capsys, mixed_file):
    code, out, _ = run(capsys, "tree", mixed_file, "--dot")
    assert code == OK
    assert out.count("[label=") == 7
    assert out.count("->") == 6
    assert out.count("style=solid") == 1


def test_tree_dot_of_smooth_branch(capsys):
    code, out, _ = run(capsys, "tree", "--poly", "Y", "--dot")
    assert code == OK and out.count("[label=") == 1 and "->" not in out


def test_tree_dot_of_tangent_pair(capsys):
    _, out, _ = run(capsys, "tree", "--poly", TANGENT_PAIR, "--dot")
    assert out.count("[label=") == 3
    assert 'v0 [label="2"' in out


# ------------------------------------------------------------------- verify


@pytest.mark.parametrize(
    "poly, lam",
    [
        (CUSP_TRIPLE, "X"),
        ("X*(Y^2+X)", "X"),
        (TANGENT_PAIR, "X"),
        (TANGENT_PAIR_TWIN, "transversal"),
        (TANGENT_PAIR_TWIN, "Y"),
        (MIXED_POLY, "linear:1,1"),
    ],
)
def test_verify_passes(capsys, poly, lam):
    d = run_json(capsys, "verify", "--poly", poly, "--lambda", lam)
    assert d["schema_version"] == 1
    assert all(r["passed"] for r in d["results"])


def test_verify_notes_parameter_branch(capsys):
    d = run_json(capsys, "verify", "--poly", "X*(Y^2+X)")
    (r,) = d["results"]
    assert r["delta_X"] == 1 and any("delta = 1" in n for n in r["notes"])


def test_verify_fails_on_a_corrupted_germ(capsys, tmp_path):
    path = tmp_path / "bad.json"
    doc = dict(MIXED_DOC)
    doc["poly"] = MIXED_POLY
    bad = json.loads(json.dumps(MIXED_DOC["abstract"]))
    bad["branches"][1]["label"] = "Y"
    bad["branches"][2]["label"] = "Y - X^2"
    bad["branches"][3]["label"] = "Y + X^2"
    bad["branches"][0]["label"] = "Y^5 + X^2"
    for c in bad["contacts"]:
        c["pair"] = [{"f1": "Y^5 + X^2", "f2": "Y", "f3": "Y - X^2", "f4": "Y + X^2"}[p] for p in c["pair"]]
        if set(c["pair"]) == {"Y", "Y - X^2"}:
            c["value"] = "3"
        if set(c["pair"]) == {"Y - X^2", "Y + X^2"}:
            c["value"] = "2"
    doc["abstract"] = bad
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == MISMATCH
    (r,) = json.loads(out)["results"]
    assert not r["passed"]
    assert any(not c["passed"] for c in r["checks"])


# --------------------------------------------------------------- random-germ


def test_random_germ_is_deterministic_and_valid(capsys, tmp_path):
    _, first, _ = run(capsys, "random-germ", "2")
    _, second, _ = run(capsys, "random-germ", "2")
    assert first == second
    for seed in range(1, 30):
        code, out, _ = run(capsys, "random-germ", str(seed), "--max-branches", "3")
        assert code == OK
        doc = GermDocument.loads(out)
        assert validate_germ(doc.germ) == []
        path = tmp_path / f"g{seed}.json"
        path.write_text(out)
        assert run(capsys, "analyze", str(path), "--json")[0] == OK


# ---------------------------------------------------------------- exit codes


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "--poly", "X^+"], PARSE),
        (["analyze", "--poly", "(Y^2-X^3)^2"], VALIDATION),
        (["analyze", "--poly", "1+X"], VALIDATION),
        (["analyze", "--poly", "Y^2-X^3", "--lambda", "branch:nope"], VALIDATION),
        (["analyze", "--poly", "(Y^2-2*X^3)^2-X^7"], IRRATIONAL),
        (["verify", "--poly", "Y^2-X^3", "--lambda", "linear:0,0"], PARSE),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_exit_code_for_bad_documents(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "analyze", str(broken))[0] == PARSE
    invalid = tmp_path / "invalid.json"
    doc = json.loads(json.dumps(MIXED_DOC))
    doc["abstract"]["contacts"][0]["value"] = "3"
    invalid.write_text(json.dumps(doc))
    assert run(capsys, "analyze", str(invalid))[0] == VALIDATION
    semigroup = tmp_path / "semigroup.json"
    doc = json.loads(json.dumps(MIXED_DOC))
    doc["abstract"]["branches"][0]["semigroup"] = [2, 4]
    semigroup.write_text(json.dumps(doc))
    assert run(capsys, "analyze", str(semigroup))[0] == VALIDATION


@pytest.mark.skipif(shutil.which("equising") is None, reason="console script not installed")
def test_console_script(tmp_path):
    done = subprocess.run(
        ["equising", "tree", "--poly", TANGENT_PAIR, "--dot"], capture_output=True, text=True, timeout=60
    )
    assert done.returncode == 0 and done.stdout.startswith("digraph")
