import json
import subprocess
import sys
from fractions import Fraction

import pytest

from denumerant import cli
from denumerant.cyclotomic import _PHI_CACHE, cyclotomic_poly
from denumerant.poly import Poly
from denumerant.selftest import run_selftest
from denumerant.waves import all_waves


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_waves_golden_text(capsys):
    code, out, _ = run(capsys, "waves", "-a", "1,3,6")
    assert code == 0
    assert "W_1(t) [period 1] = [t^2/36 + 5*t/18 + 127/216]" in out
    assert "W_2(t) [period 2] = [-1/24, 1/24]" in out
    assert "W_3(t) [period 3] = [-1/54, -t/18 - 29/108, t/18 + 31/108]" in out
    assert "W_6(t) [period 6] = [1/6, 1/12, -1/12, -1/6, -1/12, 1/12]" in out


def test_waves_trivial(capsys):
    code, out, _ = run(capsys, "waves", "-a", "1")
    assert code == 0 and "W_1(t) [period 1] = [1]" in out


@pytest.mark.parametrize("seq,msg", [("2,4", "gcd(a) must be 1"), ("1,1,2", "distinct"),
                                     ("0,1", "positive"), ("1,x", "cannot parse")])
def test_validation_exit_code(capsys, seq, msg):
    code, out, err = run(capsys, "waves", "-a", seq)
    assert code == 2
    assert msg in err and out == ""


@pytest.mark.parametrize("t,value", [("14", "9"), ("1789682", "88971554961"), ("0", "1")])
def test_eval(capsys, t, value):
    code, out, _ = run(capsys, "eval", "-a", "1,3,6", "-t", t)
    assert code == 0 and out.strip() == value


def test_eval_float(capsys):
    code, out, _ = run(capsys, "eval", "-a", "1,3,6", "-t", "14", "--backend", "float", "--json")
    doc = json.loads(out)
    assert abs(float(doc["value"]) - 9) < 1e-9
    assert float(doc["max_imag"]) < 1e-12


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "waves", "--upto", "7", "--json")
    doc = json.loads(out)
    assert doc["sequence"] == list(range(1, 8)) and doc["backend"] == "exact"
    assert cli.waves_from_json(out) == all_waves(range(1, 8))
    comb = doc["combined"]
    assert comb["period"] == 420
    assert [c["residue"] for c in comb["components"]] == list(range(1, 421))
    for w in doc["waves"]:
        for c in w["components"]:
            assert all("/" in s for s in c["coeffs"])


def test_json_round_trip_preserves_exactness():
    waves = all_waves((5, 7, 11, 13))
    doc = json.loads(json.dumps(cli.waves_to_json((5, 7, 11, 13), "exact", waves)))
    assert doc["combined"] is None  # lcm 5005 is over the cap
    back = cli.waves_from_json(doc)
    for f in waves:
        for p, q in zip(waves[f].components, back[f].components):
            assert p.coeffs == q.coeffs


def test_float_json_has_17_digits(capsys):
    code, out, _ = run(capsys, "waves", "-a", "1,3,6", "--backend", "float", "--json")
    doc = json.loads(out)
    w2 = next(w for w in doc["waves"] if w["f"] == 2)
    assert w2["components"][0]["coeffs"] == [format(-1 / 24, ".17g")]
    assert "max_imag" in w2


def test_threads_do_not_change_output(capsys):
    _, one, _ = run(capsys, "waves", "--upto", "9", "--json", "--threads", "1")
    _, many, _ = run(capsys, "waves", "--upto", "9", "--json", "--threads", "3")
    assert one == many


def test_bench_rows(capsys):
    code, out, _ = run(capsys, "bench", "-k", "12", "--backend", "exact", "--json")
    doc = json.loads(out)
    assert code == 0
    assert [r["k"] for r in doc["rows"]] == list(range(2, 13))
    assert all(r["status"] == "OK" for r in doc["rows"])


def test_bench_empty(capsys):
    code, out, _ = run(capsys, "bench", "-k", "1")
    assert code == 0 and "no rows" in out


def test_bench_float_spot_check(capsys):
    code, out, _ = run(capsys, "bench", "-k", "8", "--backend", "float", "--digits", "60",
                       "--check-upto", "8", "--json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 7
    assert all(r["abs_err"] < 1.0 for r in rows)


def test_bench_timeout_marks_row(capsys, monkeypatch):
    import time

    real = cli._bench_row

    def slow(cfg, k, t, check):
        if k == 3:
            time.sleep(5)
        return real(cfg, k, t, check)

    monkeypatch.setattr(cli, "_bench_row", slow)
    code, out, _ = run(capsys, "bench", "-k", "4", "--time-limit", "1", "--json")
    rows = json.loads(out)["rows"]
    assert [r["status"] for r in rows] == ["OK", "TIMEOUT", "OK"]


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")
    assert "25 random sequences" in out


def test_selftest_reports_counts():
    report = run_selftest()
    assert report.passed
    assert all(c.count > 0 for c in report.checks)


def test_selftest_fault_injection(capsys, monkeypatch):
    good = cyclotomic_poly(7)
    monkeypatch.setitem(_PHI_CACHE, 7, good + Poly([0, 0, 0, 1]))
    code, out, err = run(capsys, "selftest", "--random", "0")
    assert code == 1
    assert "FAIL  cyclotomic identity" in out
    assert "cyclotomic identity" in err and "n=7" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "denumerant", "eval", "-a", "2,4", "-t", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "gcd(a) must be 1" in proc.stderr


def test_parse_sequence():
    assert cli.parse_sequence("1, 3,6") == (1, 3, 6)
    with pytest.raises(cli.InputError):
        cli.parse_sequence("1;3")
    assert Fraction("-29/108") == Fraction(-29, 108)
