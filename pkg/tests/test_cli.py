"""End-to-end tests for the command-line interface."""

import json
import math
import subprocess
import sys

import pytest

from spinpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_json(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--two-j", "2", "--k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "two_j": 2,
        "k": 2,
        "epsilon": 0,
        "terms": [{"power": 2, "num": "1", "den": "1"}],
    }


def test_coeffs_half_spin(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--two-j", "1", "--k", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["epsilon"] == 1
    assert payload["terms"] == [{"power": 0, "num": "1", "den": "1"}]


def test_coeffs_csv(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--two-j", "3", "--k", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["power,num,den", "1,1,1", "3,1,6"]


def test_coeffs_invalid_index(capsys):
    code, _, err = run_cli(capsys, "coeffs", "--two-j", "2", "--k", "5")
    assert code == 2
    assert "outside" in err


def test_rotate_json(capsys):
    code, out, _ = run_cli(
        capsys, "rotate", "--two-j", "1", "--theta", "1.0", "--axis", "0,0,1"
    )
    assert code == 0
    payload = json.loads(out)
    entry = payload["matrix"][0][0]
    assert float(entry[0]) == pytest.approx(math.cos(0.5))
    assert float(entry[1]) == pytest.approx(math.sin(0.5))


def test_rotate_csv_header(capsys):
    code, out, _ = run_cli(
        capsys, "rotate", "--two-j", "1", "--theta", "0.5", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "row,col,re,im"


def test_rotate_bad_axis(capsys):
    code, _, err = run_cli(
        capsys, "rotate", "--two-j", "1", "--theta", "0.5", "--axis", "1,1,1"
    )
    assert code == 2
    assert "unit" in err


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "duals", "--max-two-j", "4")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["counts"]["fail"] == 0
    names = [c["name"] for c in report["checks"]]
    assert "small_spin_reference_matrices" in names


def test_verify_rotation_reports_deviation(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "rotation", "--max-two-j", "6")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert float(report["max_deviation"]) <= 1e-9 * 7


def test_verify_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--suite", "nonsense"])
    assert excinfo.value.code == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    failing = {
        "suite": "cfn",
        "max_two_j": 4,
        "checks": [
            {"name": "x", "status": "fail", "count": 1, "max_deviation": None}
        ],
        "counts": {"pass": 0, "fail": 1},
        "max_deviation": None,
        "status": "fail",
    }
    monkeypatch.setattr("spinpoly.cli.run_suite", lambda s, m: failing)
    code, out, _ = run_cli(capsys, "verify", "--suite", "cfn")
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_plotdata_grid(capsys):
    code, out, _ = run_cli(
        capsys,
        "plotdata",
        "--two-j", "4",
        "--k-list", "0,2",
        "--theta-min", "0",
        "--theta-max", "3.141592653589793",
        "--samples", "3",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "theta,A_0,A_2"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == 1.0


def test_plotdata_default_k_selection(capsys):
    code, out, _ = run_cli(capsys, "plotdata", "--two-j", "2", "--samples", "2")
    assert code == 0
    assert out.splitlines()[0] == "theta,A_0,A_1,A_2"


def test_plotdata_rejects_bad_inputs(capsys):
    code, _, err = run_cli(capsys, "plotdata", "--two-j", "2", "--samples", "1")
    assert code == 2
    code, _, err = run_cli(
        capsys, "plotdata", "--two-j", "2", "--theta-min", "2", "--theta-max", "1"
    )
    assert code == 2
    code, _, err = run_cli(capsys, "plotdata", "--two-j", "2", "--k-list", "3")
    assert code == 2
    assert "outside" in err


def test_plotdata_writes_file_and_figure(tmp_path, capsys):
    csv_path = tmp_path / "data.csv"
    fig_path = tmp_path / "coeffs.png"
    code, out, _ = run_cli(
        capsys,
        "plotdata",
        "--two-j", "4",
        "--samples", "32",
        "--output", str(csv_path),
        "--figure", str(fig_path),
    )
    assert code == 0
    assert out == ""
    text = csv_path.read_text()
    assert text.startswith("theta,A_0")
    assert text.endswith("\n") and "\r" not in text
    assert fig_path.stat().st_size > 1000


def test_plotdata_deterministic_output():
    cmd = [
        sys.executable, "-m", "spinpoly",
        "plotdata", "--two-j", "3", "--samples", "17",
    ]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.count(b"\r") == 0


def test_bench_empty_list(capsys):
    code, out, _ = run_cli(capsys, "bench", "--two-j-list", "")
    assert code == 0
    assert json.loads(out)["results"] == []


def test_bench_small(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--two-j-list", "0,2", "--repetitions", "2"
    )
    assert code == 0
    report = json.loads(out)
    assert [row["two_j"] for row in report["results"]] == [0, 2]
    for row in report["results"]:
        bound = 1e-8 * (row["two_j"] + 1)
        assert float(row["polynomial"]["max_deviation"]) <= bound
        assert float(row["eigendecomposition"]["max_deviation"]) <= bound


def test_bench_bad_repetitions(capsys):
    code, _, _ = run_cli(capsys, "bench", "--two-j-list", "2", "--repetitions", "0")
    assert code == 2


def test_duals_output(capsys):
    code, out, _ = run_cli(capsys, "duals", "--two-j", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["nodes"] == [1, -1]
    assert payload["V_inv"] == [
        [{"num": "1", "den": "2"}, {"num": "1", "den": "2"}],
        [{"num": "1", "den": "2"}, {"num": "-1", "den": "2"}],
    ]
    assert payload["T"] == payload["V_inv"]


def test_thread_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("SPINPOLY_THREADS", "2")
    code, out, _ = run_cli(capsys, "verify", "--suite", "cfn", "--max-two-j", "4")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_thread_cap_env_invalid(monkeypatch, capsys):
    monkeypatch.setenv("SPINPOLY_THREADS", "0")
    code, _, err = run_cli(capsys, "verify", "--suite", "cfn", "--max-two-j", "4")
    assert code == 2
    assert "SPINPOLY_THREADS" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "spinpoly", "coeffs", "--two-j", "2", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["k"] == 2
