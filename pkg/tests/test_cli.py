"""Command-line contract: payloads, exit codes, formats, determinism."""

import json
import subprocess
import sys

import pytest

from ozaki import __version__
from ozaki.cli import main, run


def invoke(*argv):
    code, text = run(list(argv))
    return code, json.loads(text)


def test_extremal_payload():
    code, env = invoke("extremal", "f1", "--order", "4")
    assert code == 0
    assert env["tool_version"] == __version__
    assert env["status"] == "ok"
    assert env["payload"]["coefficients"] == [0, 1, 1.5, 2, 2.5]
    assert env["payload"]["label"] == "F"
    assert "seed" not in env


def test_coeffs_from_schwarz():
    code, env = invoke("coeffs", "--class", "F", "--schwarz", "1")
    assert code == 0
    p = env["payload"]
    assert p["a2"] == 1.5 and p["a3"] == 2 and p["a4"] == 2.5
    assert p["direct_formula"] == {"a2": 1.5, "a3": 2, "a4": 2.5}
    assert p["source"] == "schwarz"


def test_coeffs_from_caratheodory():
    code, env = invoke("coeffs", "--class", "G", "--caratheodory", "0:0,2:0,0:0")
    assert code == 0
    p = env["payload"]
    assert p["a2"] == 0
    assert p["a3"] == pytest.approx(-1 / 6, abs=1e-15)
    assert p["a4"] == 0


def test_report_on_extremal():
    code, env = invoke("report", "--extremal", "g1")
    assert code == 0
    p = env["payload"]
    assert p["S4"] == -6
    assert p["T21_log"] == pytest.approx(15 / 256)
    assert p["Gamma3"] == pytest.approx(5 / 24)
    assert p["extremal"] == "g1"


def test_report_complex_values_as_pairs():
    code, env = invoke("report", "--class", "F", "--schwarz", "0:0.5")
    assert code == 0
    a2 = env["payload"]["a2"]
    assert isinstance(a2, list) and len(a2) == 2  # genuinely complex


def test_verify_all_classes():
    code, env = invoke("verify", "--class", "all")
    assert code == 0
    assert env["status"] == "ok"
    p = env["payload"]
    assert p["entry_count"] == 13
    assert len(p["entries"]) == 13
    assert p["failures"] == 0
    assert p["max_abs_residual"] <= 1e-12
    t21 = [e for e in p["entries"]
           if e["functional"] == "T21_log" and e["label"] == "F"][0]
    assert t21["kind"] == "two_sided"
    assert [c["bound"] for c in t21["checks"]] == ["-1/16", "95/256"]
    assert all(c["ok"] for e in p["entries"] for c in e["checks"])


def test_verify_single_class():
    code, env = invoke("verify", "--class", "G")
    assert code == 0
    assert env["payload"]["entry_count"] == 6


def test_optimize_single_objective():
    code, env = invoke("optimize", "--objective", "SG",
                       "--resolution", "300", "--refine", "1")
    assert code == 0
    res = env["payload"]["results"][0]
    assert res["objective"] == "SG"
    assert res["paper"] == "5/24"
    assert res["value"] == pytest.approx(5 / 24, abs=1e-6)
    assert res["gap"] <= 1e-6


def test_optimize_upsilon_reports_true_maximum():
    # the search finds 45/121 on the x = 1 edge, above the tabulated 95/256
    code, env = invoke("optimize", "--objective", "UpsilonF",
                       "--resolution", "2000", "--refine", "3")
    assert code == 0
    res = env["payload"]["results"][0]
    assert res["value"] == pytest.approx(45 / 121, abs=1e-6)
    assert res["paper"] == "95/256"
    assert res["gap"] == pytest.approx(45 / 121 - 95 / 256, abs=1e-6)


def test_optimize_csv_format():
    code, text = run(["optimize", "--objective", "SG", "--resolution", "300",
                      "--refine", "1", "--format", "csv"])
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0].startswith("objective,mode,value")
    assert lines[1].startswith("SG,max,")


def test_sample_ok_and_exit_zero():
    code, env = invoke("sample", "--class", "G", "--samples", "3000",
                       "--seed", "5")
    assert code == 0
    assert env["status"] == "ok"
    assert env["seed"] == 5
    assert env["payload"]["total_violations"] == 0


def test_sample_violation_exit_two():
    code, env = invoke("sample", "--class", "F", "--samples", "100000",
                       "--seed", "42")
    assert code == 2
    assert env["status"] == "bound_violation"
    over = [c for c in env["payload"]["checks"]
            if c["functional"] == "T21_log" and c["side"] == "upper"][0]
    assert over["violations"] > 0


def test_sample_csv_format():
    code, text = run(["sample", "--class", "G", "--samples", "2000",
                      "--seed", "5", "--format", "csv"])
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0] == "name,empirical_min,empirical_max,bound,margin"
    names = [ln.split(",")[0] for ln in lines[1:]]
    assert "T21_log_lower" in names and "T21_log_upper" in names
    assert "A2_abs" in names  # unbounded functionals get empty bound columns
    row = [ln for ln in lines[1:] if ln.startswith("A2_abs")][0]
    assert row.endswith(",,")


def test_verify_csv_rejected():
    assert main(["verify", "--format", "csv"]) == 1


def test_usage_errors_exit_one(capsys):
    assert main(["optimize", "--objective", "Bogus"]) == 1
    assert main(["coeffs", "--class", "F", "--schwarz", "nope"]) == 1
    assert main(["coeffs", "--class", "F"]) == 1
    assert main(["extremal", "f9"]) == 1
    err = capsys.readouterr().err
    assert "ozaki:" in err


def test_invalid_input_exit_one(capsys):
    # Schwarz prefix violating the coefficient bounds
    assert main(["coeffs", "--class", "F", "--schwarz", "2"]) == 1
    assert "ozaki:" in capsys.readouterr().err


def test_main_prints_envelope(capsys):
    assert main(["extremal", "g2", "--order", "5"]) == 0
    out = capsys.readouterr().out
    env = json.loads(out)
    assert env["payload"]["coefficients"][3] == pytest.approx(-1 / 6)


def test_seventeen_digit_floats():
    code, text = run(["report", "--extremal", "g2"])
    assert code == 0
    env = json.loads(text)
    # -1/144 round-trips exactly through the printed representation
    assert env["payload"]["T21_log"] == -1 / 144


def test_repeat_same_command_byte_identical():
    argv = ["sample", "--class", "G", "--samples", "4000", "--seed", "11"]
    assert run(argv) == run(argv)


def test_subprocess_determinism_and_thread_invariance():
    import os
    cmd = [sys.executable, "-m", "ozaki.cli", "sample", "--class", "G",
           "--samples", "20000", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0 and first.stdout == second.stdout
    env = dict(os.environ, OZAKI_THREADS="3")
    third = subprocess.run(cmd, capture_output=True, env=env)
    assert third.stdout == first.stdout
