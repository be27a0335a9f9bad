"""Command-line harness: exit codes, report schema, output round-trips."""

from __future__ import annotations

import json
import subprocess
import sys

from helmlab import cli


def run_main(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_passes_for_n7(capsys):
    code, out, _ = run_main(capsys, "verify", "--n", "7")
    assert code == 0
    assert "result: OK" in out
    assert "inertia=(1,11,1)" in out


def test_verify_reports_even_determinant(capsys):
    code, out, _ = run_main(capsys, "verify", "--n", "6")
    assert code == 0
    assert "det(D) = 480" in out


def test_verify_rejects_small_n(capsys):
    code, _, err = run_main(capsys, "verify", "--n", "3")
    assert code == 2
    assert "n must be >= 4" in err


def test_verify_json_round_trips(capsys):
    code, out, _ = run_main(capsys, "verify", "--n", "5", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"n", "parity", "checks", "summary"}
    assert report["n"] == 5
    assert report["parity"] == "odd"
    assert set(report["summary"]) == {"det", "rank", "inertia", "rank_L", "elapsed_ms"}
    assert report["summary"]["det"] == "0"
    assert report["summary"]["rank"] == 8
    assert report["summary"]["inertia"] == [1, 7, 1]
    assert report["summary"]["rank_L"] == 7
    for check in report["checks"]:
        assert set(check) == {"name", "pass", "detail"}
        assert check["pass"] is True
    # re-encoding the parsed structure is lossless
    assert json.loads(json.dumps(report)) == report


def test_report_is_deterministic_for_fixed_n():
    first = cli.run_verification(6).to_dict()
    second = cli.run_verification(6).to_dict()
    first["summary"].pop("elapsed_ms")
    second["summary"].pop("elapsed_ms")
    assert first == second


def test_exit_code_zero_iff_all_checks_pass(capsys, monkeypatch):
    report = cli.run_verification(5)
    report.checks[0].passed = False
    monkeypatch.setattr(cli, "run_verification", lambda n: report)
    code, out, _ = run_main(capsys, "verify", "--n", "5")
    assert code == 1
    assert "result: FAILED" in out


def test_sweep_range_validation(capsys):
    code, _, err = run_main(capsys, "sweep", "--min", "5", "--max", "4")
    assert code == 2
    assert "min <= max" in err


def test_sweep_text_table(capsys):
    code, out, _ = run_main(capsys, "sweep", "--min", "4", "--max", "6")
    assert code == 0
    assert "3/3 parameter values fully verified" in out


def test_sweep_json_is_sorted_by_n(capsys):
    code, out, _ = run_main(capsys, "sweep", "--min", "4", "--max", "7", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert [r["n"] for r in reports] == [4, 5, 6, 7]
    assert all(c["pass"] for r in reports for c in r["checks"])


def test_sweep_parallel_matches_sequential(capsys):
    code, out, _ = run_main(
        capsys, "sweep", "--min", "4", "--max", "6", "--parallel", "--format", "json"
    )
    assert code == 0
    parallel = json.loads(out)
    sequential = [cli.run_verification(n).to_dict() for n in (4, 5, 6)]
    for a, b in zip(parallel, sequential):
        a["summary"].pop("elapsed_ms")
        b["summary"].pop("elapsed_ms")
    assert parallel == sequential


def test_eig_s_matches_analytic_values(capsys):
    code, out, _ = run_main(capsys, "eig", "--matrix", "S", "--n", "7")
    assert code == 0
    max_dev = float(out.splitlines()[-1].split("=")[1].split()[0])
    assert max_dev < 1e-9


def test_eig_b_values_for_n9(capsys):
    code, out, _ = run_main(capsys, "eig", "--matrix", "B", "--n", "9")
    assert code == 0
    assert "max deviation" in out


def test_eig_a_uses_derived_analytic_form(capsys):
    code, out, _ = run_main(capsys, "eig", "--matrix", "A", "--n", "11")
    assert code == 0


def test_eig_rejects_even_n_for_coupling_block(capsys):
    code, _, err = run_main(capsys, "eig", "--matrix", "B", "--n", "8")
    assert code == 2
    assert "odd n" in err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "helmlab.cli", "verify", "--n", "4", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["summary"]["det"] == "72"
