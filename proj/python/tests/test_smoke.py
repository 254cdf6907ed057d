import pytest

import zetagamma as zg


def test_multdep():
    assert zg.mult_independent([2, 3, 5]) is None
    assert zg.mult_independent([4, 8]) == [3, -2]
    assert zg.factor(360) == [(2, 3), (3, 2), (5, 1)]


def test_canonicalize_and_classify():
    assert zg.canonicalize("logratio:9/4") == ("logratio:3/2", "1")
    v = zg.classify("logratio:3/2", 8)
    assert (v["status"], v["rule"], v["condition"]) == ("Algebraic", "R4", "Unconditional")
    assert zg.classify("const:pi", 5)["status"] == "Unknown"
    assert zg.classify("const:pi", 5, assume_schanuel=True)["condition"] == "Schanuel"


def test_exceptional_set_round_trip():
    report = zg.exceptional_set("logratio:3/2", 100)
    alg = [v["n"] for v in report["verdicts"] if v["status"] == "Algebraic"]
    assert alg == [1, 2, 4, 8, 16, 32, 64]
    assert zg.representant(report) == (2, "Conditional")
    assert zg.check(report) == {"prop3": None, "closure": []}

    report["verdicts"][1].update(status="Unknown", rule="none", witness=None)
    assert ("root", [4, 2]) in zg.check(report)["closure"]
    with pytest.raises(zg.Error) as info:
        zg.representant(report)
    assert info.value.kind == "internal-inconsistency"


def test_probe_and_carlitz():
    p = zg.probe("logratio:3/2", 8, degree=1, height=100)
    assert p["outcome"] == "AgreesAlgebraic"
    assert p["relation"] == [-27, 1]
    assert zg.carlitz_kernel_dimension(2, 3, 64) == 0


def test_errors_carry_kind():
    with pytest.raises(zg.Error) as info:
        zg.classify("rat:1/0", 2)
    assert info.value.kind == "parse-error"


def test_cli_entry():
    code, out, err = zg.run_cli(["multdep", "4", "8"])
    assert (code, out, err) == (0, "dependent certificate=(3,-2)\n", "")
    assert zg.run_cli(["frobnicate"])[0] == 2
