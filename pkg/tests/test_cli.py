import io
import json
import subprocess
import sys

import pytest

from sumset_growth import cli

from conftest import EXAMPLE_G, EXAMPLE_G_HAT


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    return code, json.loads(out), out


def test_bound_upper():
    code, rec, _ = run_json("bound", "--upper", "1000", "6")
    assert code == 0 and rec["value"] == 1827
    assert rec["representation"] == [[12, 6], [8, 5], [6, 4], [4, 3], [2, 2], [0, 1]]
    code, out, _ = run("bound", "--upper", "1000", "6")
    assert "= 1827" in out and "C(12,6)" in out


def test_bound_lower_inverse():
    code, rec, _ = run_json("bound", "--lower-inverse", "1000", "5")
    assert code == 0 and rec["value"] == 511
    assert rec["upper_at_value"] == 1000 and rec["upper_below_value"] < 1000


def test_bound_plunnecke():
    assert run_json("bound", "--plunnecke", "1000", "6", "7")[1]["value"] == 3162
    assert run_json("bound", "--plunnecke", "1000", "6", "5")[1]["value"] == 317


@pytest.mark.parametrize("argv", [
    ("bound", "--upper", "x", "6"),
    ("bound", "--upper", "10"),
    ("bound", "--lower-inverse", "0", "5"),
    ("validate", "1,a"),
    ("additive-check", "4", "4"),
    ("oracle", "1,2", "3"),
    ("frobnicate",),
])
def test_malformed_exit_2(argv):
    assert run(*argv)[0] == 2


def test_validate():
    assert run("validate", "1,5,13,25,42,63")[0] == 0
    code, out, _ = run("validate", "1,3,3,4,4,4")
    assert code == 0 and "monotone: yes" in out
    code, rec, _ = run_json("validate", "1,2,4")
    assert code == 1
    assert rec == {"valid": False, "violation_index": 2, "lhs": 4, "rhs": 3,
                   "all_positive": True, "monotone": True}


def test_realize_example():
    code, rec, _ = run_json("realize", "1,5,13,25,42,63", "--deform")
    assert code == 0
    assert [g for i in sorted(rec["generators"], key=int) for g in rec["generators"][i]] == EXAMPLE_G
    assert sorted(rec["deformed"]) == sorted(EXAMPLE_G_HAT)
    assert rec["certificate"]["passed"] is True
    assert rec["segment_sizes"] == [0, 0, 2, 10, 28, 63]


def test_realize_small_and_errors():
    code, rec, _ = run_json("realize", "1,2")
    assert code == 0 and rec["generators"] == {"1": []}
    assert run("realize", "1,2,4")[0] == 1
    assert run("realize", "1,3,0,0", "--deform")[0] == 3
    assert run("realize", "1,3,0,0")[0] == 0


def test_verify():
    code, rec, _ = run_json("verify", "1,5,13,25,42,63")
    assert code == 0
    assert [r["binomial_quotient"] for r in rec["rows"]] == [1, 5, 13, 25, 42, 63]
    code, rec, _ = run_json("verify", "1,5,13,25,42,63", "--mode", "almost")
    assert code == 0
    assert [r["monomial_quotient"] for r in rec["rows"]] == [1, 5, 14, 26, 43, 64]
    code, rec, _ = run_json("verify", "1,1,1,1")
    assert code == 0 and [r["binomial_quotient"] for r in rec["rows"]] == [1, 1, 1, 1]
    assert run("verify", "1,2,4")[0] == 1
    assert run("verify", "1,3,0,0")[0] == 3
    assert run("verify", "1,3,0,0", "--mode", "almost")[0] == 0


def test_verify_max_degree():
    code, rec, _ = run_json("verify", "1,5,13,25,42,63", "--max-degree", "3")
    assert code == 0 and len(rec["rows"]) == 4


def test_verify_certificate_failure_exit_4(monkeypatch):
    from sumset_growth import groebner

    real = groebner.buchberger_check

    def failing(basis, skip_coprime=False):
        rep = real(basis, skip_coprime)
        return groebner.BuchbergerReport(False, (0, 1), None, None, rep.pairs_checked)

    monkeypatch.setattr(groebner, "buchberger_check", failing)
    monkeypatch.setattr(groebner, "buchberger_complete", lambda b: groebner.BinomialBasis((), "completed", True))
    assert run("verify", "1,5,13,25,42,63")[0] == 4


def test_additive_check():
    code, rec, _ = run_json("additive-check", "2", "3", "--exhaustive")
    assert code == 0 and rec["tested"] == 16 and rec["violations"] == 0
    code, rec, _ = run_json("additive-check", "3", "2")
    assert code == 0 and rec["tested"] == 64
    code, rec, _ = run_json("additive-check", "4", "3", "--samples", "50", "--seed", "9")
    assert code == 0 and rec["seed"] == 9
    code, rec, _ = run_json("additive-check", "4", "3", "--samples", "5")
    assert isinstance(rec["seed"], int)


def test_oracle():
    code, rec, _ = run_json("oracle", "-D", "2", "0", "1", "3")
    assert code == 0 and rec["sizes"] == [1, 3, 6]
    code, rec, _ = run_json("oracle", "-D", "3", "1,0", "0,1")
    assert rec["sizes"] == [1, 2, 3, 4]
    code, rec, _ = run_json("oracle", "-D", "2", "-1", "4")
    assert rec["sizes"] == [1, 2, 3]


@pytest.mark.parametrize("argv", [
    ("bound", "--upper", "1000", "6"),
    ("validate", "1,2,4"),
    ("realize", "1,5,13,25,42,63", "--deform"),
    ("verify", "1,5,13,25,42,63"),
    ("additive-check", "2", "2"),
    ("oracle", "0", "1", "3"),
])
def test_json_round_trip(argv):
    _, rec, raw = run_json(*argv)
    assert cli.dump_json(json.loads(raw)) == raw


def test_width_env(monkeypatch):
    monkeypatch.setenv("SUMSET_WIDTH", "40")
    _, out, _ = run("realize", "1,5,13,25,42,63")
    g_lines = out[out.index("G: "):].splitlines()
    assert len(g_lines) > 1 and all(len(line) <= 40 for line in g_lines)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sumset_growth", "bound", "--upper", "13", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "= 26" in proc.stdout
