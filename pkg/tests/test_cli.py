"""Command line behaviour and exit codes."""

import json
import subprocess
import sys

import pytest

from stanleygrid import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_convert_to_digits(capsys):
    code, out, _ = run_cli(capsys, "convert", "--value", "12")
    assert code == 0 and out.strip() == "2120"


def test_convert_from_digits(capsys):
    code, out, _ = run_cli(capsys, "convert", "--from-digits", "212021")
    assert code == 0 and out.strip() == "31"
    code, out, _ = run_cli(capsys, "convert", "--from-digits", "11")
    assert code == 0 and out.strip() == "5/2"
    code, out, _ = run_cli(capsys, "convert", "--base", "3", "--from-digits", "2120")
    assert code == 0 and out.strip() == "69"


def test_convert_bad_digit(capsys):
    code, _, err = run_cli(capsys, "convert", "--from-digits", "31")
    assert code == 2 and "digit" in err


def test_sequence_methods_agree(capsys):
    code, out_greedy, _ = run_cli(capsys, "sequence", "--row", "1", "--limit", "84")
    assert code == 0
    code, out_grid, _ = run_cli(capsys, "sequence", "--row", "1", "--limit", "84",
                                "--method", "grid")
    assert code == 0
    assert out_greedy == out_grid
    assert [int(x) for x in out_greedy.split()] == [2, 5, 6, 11, 14, 15, 18, 29, 32,
                                                    33, 38, 41, 42, 45, 54, 83]


def test_sequence_empty_row(capsys):
    code, out, _ = run_cli(capsys, "sequence", "--row", "2", "--limit", "1")
    assert code == 0 and out == ""
    code, out, _ = run_cli(capsys, "sequence", "--row", "2", "--limit", "1",
                           "--method", "grid")
    assert code == 0 and out == ""


def test_sequence_json(capsys):
    code, out, _ = run_cli(capsys, "sequence", "--row", "0", "--limit", "5", "--json")
    assert code == 0 and json.loads(out) == [0, 1, 3, 4]


def test_cross_text(capsys):
    code, out, _ = run_cli(capsys, "cross", "--count", "5")
    assert code == 0
    assert out.splitlines() == ["0 0", "2 2", "7 21", "21 210", "23 212"]


def test_cross_json(capsys):
    code, out, _ = run_cli(capsys, "cross", "--count", "10", "--json",
                           "--method", "greedy")
    assert code == 0
    doc = json.loads(out)
    assert [d["value"] for d in doc] == [0, 2, 7, 21, 23, 64, 69, 71, 193, 207]
    assert doc[9]["digits"] == "21200"


def test_cross_cap(capsys):
    code, _, err = run_cli(capsys, "cross", "--count", "300")
    assert code == 4 and "cap" in err


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("STANLEY_GRID_CAP", "50")
    code, _, err = run_cli(capsys, "sequence", "--row", "0", "--limit", "100")
    assert code == 4
    monkeypatch.setenv("STANLEY_GRID_CAP", "1000000")
    code, out, _ = run_cli(capsys, "cross", "--count", "250", "--method", "grid")
    assert code == 0 and len(out.splitlines()) == 250


def test_grid_text_and_csv(capsys):
    code, out, _ = run_cli(capsys, "grid", "--rows", "4", "--cols", "6")
    assert code == 0
    assert "2010" in out
    code, out, _ = run_cli(capsys, "grid", "--rows", "2", "--cols", "3",
                           "--format", "csv")
    assert code == 0 and out == "0,1,10\n2,20,12\n"


def test_grid_json_to_file(capsys, tmp_path):
    target = tmp_path / "win.json"
    code, out, _ = run_cli(capsys, "grid", "--rows", "2", "--cols", "2",
                           "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == [["0", "1"], ["2", "20"]]


def test_witness_json(capsys):
    code, out, _ = run_cli(capsys, "witness", "212", "--target-row", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["c"] == "12" and doc["d"] == "112"
    assert doc["values_base3"] == [5, 14, 23]
    assert doc["trace"] == ["row1-case0"]


def test_witness_row0(capsys):
    code, out, _ = run_cli(capsys, "witness", "212", "--target-row", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["c"] == "10" and doc["d"] == "111"


def test_witness_not_applicable(capsys):
    code, _, err = run_cli(capsys, "witness", "1", "--target-row", "0")
    assert code == 2 and "row" in err


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "refdata", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "refdata" and doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_verify_reports_failures(capsys, monkeypatch):
    from stanleygrid import verify as vmod

    def fake_suite(max_value):
        return [vmod.CheckResult(name="always-wrong", passed=False, checked=1, detail="boom")]

    monkeypatch.setattr(vmod, "suite_refdata", fake_suite)
    code, out, _ = run_cli(capsys, "verify", "--suite", "refdata")
    assert code == 1 and "FAIL" in out


def test_verify_timings_on_stderr(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "refdata", "--timings")
    assert code == 0
    assert "took" in err and "took" not in out


def test_verify_runs_are_identical():
    cmd = [sys.executable, "-m", "stanleygrid.cli", "verify", "--suite", "refdata"]
    r1 = subprocess.run(cmd, capture_output=True, timeout=120)
    r2 = subprocess.run(cmd, capture_output=True, timeout=120)
    assert r1.returncode == 0 and r2.returncode == 0
    assert r1.stdout == r2.stdout


def test_render_svg(capsys):
    code, out, _ = run_cli(capsys, "render", "--levels", "2", "--rows", "6",
                           "--cols", "8")
    assert code == 0
    assert out.startswith("<svg") or out.startswith("<?xml") or "<svg" in out
    assert out.count("<circle") == 48
    assert "<polyline" in out


def test_render_figure_layout(capsys):
    code, out, _ = run_cli(capsys, "render", "--levels", "1", "--rows", "18",
                           "--cols", "16")
    assert code == 0
    # 96 complete triples in an 18 x 16 window, one polyline each
    assert out.count("<polyline") == 96


def test_render_ascii(capsys):
    code, out, _ = run_cli(capsys, "render", "--levels", "1", "--rows", "4",
                           "--cols", "4", "--format", "ascii")
    assert code == 0
    assert out.count("o") == 16
    assert "-" in out and "/" in out


def test_usage_errors(capsys):
    assert cli.main(["no-such-command"]) == 2
    captured = capsys.readouterr()
    assert cli.main(["sequence", "--row", "1"]) == 2  # missing --limit
    capsys.readouterr()


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "stanleygrid.cli", "convert", "--value", "5"],
        capture_output=True, text=True, timeout=60,
    )
    assert out.returncode == 0 and out.stdout.strip() == "22"
