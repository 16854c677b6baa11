import json

import pytest

from gammatrace import verify as vf
from gammatrace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gamma(capsys):
    assert run(capsys, "gamma", "--p", "7", "--prec", "2", "--x", "8")[:2] == (0, "34\n")
    assert run(capsys, "gamma", "--p", "5", "--prec", "1", "--x", "1/2")[1] == "3\n"


def test_g_eval(capsys):
    code, out, _ = run(capsys, "g-eval", "--p", "5", "--prec", "2", "--upper", "1/4,3/4", "--lower", "1/3,2/3", "--t", "2")
    assert code == 0
    assert "valuation -1" in out and "unit 22" in out


@pytest.mark.parametrize("method", ["g", "c6", "gauss", "enumerate", "legendre"])
def test_ap_methods(capsys, method):
    assert run(capsys, "ap", "--p", "5", "--curve", "1,1", "--method", method)[:2] == (0, "-3\n")


def test_ap_general_model(capsys):
    # a model isomorphic to y^2 = x^3 + 3x + 4 over F_11
    code, out, _ = run(capsys, "ap", "--p", "11", "--curve", "1,2,3,4,5", "--method", "enumerate")
    expected = out
    for method in ("c6", "g", "legendre"):
        assert run(capsys, "ap", "--p", "11", "--curve", "1,2,3,4,5", "--method", method)[1] == expected


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--p", "5", "--curve", "1,1")
    assert code == 0 and "c4 2" in out and "delta 4" in out and "j 2" in out


def test_f_eval(capsys):
    a = run(capsys, "f-eval", "--p", "13", "--upper=-1,-5", "--lower", "0", "--x", "3")[1]
    b = run(capsys, "f-eval", "--p", "13", "--upper", "11,7", "--lower", "0", "--x", "3")[1]
    assert a == b


def test_modform(capsys):
    assert run(capsys, "modform", "coeff", "--n", "11")[1] == "-43\n"


def test_usage_errors(capsys):
    assert run(capsys, "ap", "--p", "7", "--curve", "0,1")[0] == 2
    assert run(capsys, "ap", "--p", "7", "--curve", "1,2,3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_env_precision(capsys, monkeypatch):
    monkeypatch.setenv("GAMMATRACE_PREC", "3")
    # 68 is the root of -1 mod 125 that is 3 mod 5
    assert run(capsys, "gamma", "--p", "5", "--x", "1/2")[1] == "68\n"
    monkeypatch.setenv("GAMMATRACE_PREC", "zero")
    assert run(capsys, "gamma", "--p", "5", "--x", "1/2")[0] == 2


def test_verify_trace_json(capsys):
    code, out, _ = run(capsys, "verify", "trace", "--p-range", "5..13", "--sample", "4", "--seed", "3", "--json")
    assert code == 0
    lines = [json.loads(s) for s in out.splitlines()]
    summary = lines[-1]
    assert summary["summary"] and summary["status"] == "pass" and summary["seed"] == 3
    assert summary["records"] == len(lines) - 1 == 16
    assert all("elapsed" not in r for r in lines)


def test_verify_deterministic(capsys):
    argv = ("verify", "trace", "--p-range", "5..31", "--sample", "5", "--seed", "9", "--json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_workers_do_not_change_report(capsys):
    argv = ["verify", "trace", "--p-range", "5..19", "--json"]
    serial = run(capsys, *argv)[1]
    assert run(capsys, *argv, "--workers", "2")[1] == serial


def test_verify_csv_and_output(capsys, tmp_path):
    out = tmp_path / "r.csv"
    assert run(capsys, "verify", "p3", "--csv", "--output", str(out))[0] == 0
    text = out.read_text().splitlines()
    assert text[0].startswith("task,prime,subject") and len(text) == 5


def test_verify_timing(capsys):
    code, out, _ = run(capsys, "verify", "trace", "--p-range", "5..5", "--json", "--timing")
    assert all("elapsed" in json.loads(s) for s in out.splitlines()[:-1])


def test_mismatch_exit_code(capsys, monkeypatch):
    def broken(N=2):
        return [vf.Record("anchor", 5, "forced", "1", "2", False)]

    monkeypatch.setattr(vf, "verify_anchor", broken)
    code, out, _ = run(capsys, "verify", "anchor")
    assert code == 1 and "BAD" in out and "fail" in out


def test_small_suites(capsys):
    for suite in ("p3", "anchor"):
        assert run(capsys, "verify", suite)[0] == 0
    assert run(capsys, "verify", "lemma-gf", "--primes", "13", "--count", "4")[0] == 0
    assert run(capsys, "verify", "identities", "--p-max", "13")[0] == 0
    assert run(capsys, "verify", "modform", "--p-max", "23")[0] == 0
    assert run(capsys, "verify", "delta", "--count", "10")[0] == 0
    assert run(capsys, "verify", "corollary", "--p-range", "5..11", "--curves", "2", "--transforms", "3")[0] == 0
    assert run(capsys, "verify", "gauss", "--p-max", "11", "--primes", "5")[0] == 0
    assert run(capsys, "verify", "lennon", "--primes", "13,37", "--sample", "3")[0] == 0
    assert run(capsys, "verify", "gamma", "--p-max", "13", "--lemma-p-max", "7")[0] == 0


def test_verify_range_edges():
    assert vf.verify_range(24, 28) == []
    assert vf.overall_pass([])
    recs = vf.verify_range(5, 5)
    assert len(recs) == 12 and all(r.match for r in recs)
