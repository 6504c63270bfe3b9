"""End-to-end command-line behavior, exit codes, JSON emission."""

import json
import subprocess
import sys

import pytest

from diracsplit.cli import (
    EXIT_CHECK_FAILURES,
    EXIT_JSON_UNWRITABLE,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def test_passing_run(capsys):
    assert main(["weyl", "--trials", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("run: ")
    assert "[PASS]" in out
    assert "summary: passed=" in out
    assert "[FAIL]" not in out


def test_failing_run_exits_one(capsys):
    code = main(["split", "--trials", "2", "--tol", "1e-30"])
    assert code == EXIT_CHECK_FAILURES
    out = capsys.readouterr().out
    assert "[FAIL]" in out
    assert "failed=" in out


def test_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["spectral"])
    assert exc.value.code == EXIT_USAGE


def test_invalid_trials_is_usage_error(capsys):
    assert main(["weyl", "--trials", "0"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_human_output_marks_exact_and_raise_records(capsys):
    main(["split", "--trials", "2"])
    out = capsys.readouterr().out
    assert "exact-zero" in out
    assert "raised-as-expected" in out


def test_json_report_schema(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert main(["projectors", "--trials", "2", "--json", str(path)]) == EXIT_OK
    capsys.readouterr()
    data = json.loads(path.read_text())
    assert list(data.keys()) == ["config", "checks", "summary", "wall_ms"]
    assert data["config"]["suite"] == "projectors"
    assert data["config"]["trials"] == 2
    assert data["summary"]["failed"] == 0
    assert data["summary"]["passed"] == len(data["checks"])
    for check in data["checks"]:
        assert list(check.keys()) == [
            "id", "paper_eq", "backend", "residual", "exact_zero", "pass",
        ]
        if check["exact_zero"]:
            assert check["residual"] is None


def test_json_determinism_modulo_wall_ms(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    main(["majorana", "--trials", "3", "--json", str(p1)])
    main(["majorana", "--trials", "3", "--json", str(p2)])
    capsys.readouterr()
    d1 = json.loads(p1.read_text())
    d2 = json.loads(p2.read_text())
    d1.pop("wall_ms")
    d2.pop("wall_ms")
    assert d1 == d2


def test_unwritable_json_path(tmp_path, capsys):
    path = tmp_path / "missing-dir" / "report.json"
    assert main(["weyl", "--trials", "2", "--json", str(path)]) == EXIT_JSON_UNWRITABLE
    captured = capsys.readouterr()
    assert "cannot write JSON report" in captured.err
    assert "summary:" in captured.out  # report still rendered


# -- config files ---------------------------------------------------------------


def test_config_file_applies(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"trials": 4, "seed": 99, "momentum_range": [0.0, 5.0]}))
    out_json = tmp_path / "out.json"
    assert main(["weyl", "--config", str(cfg), "--json", str(out_json)]) == EXIT_OK
    capsys.readouterr()
    data = json.loads(out_json.read_text())
    assert data["config"]["trials"] == 4
    assert data["config"]["seed"] == 99
    assert data["config"]["momentum_range"] == [0.0, 5.0]


def test_flags_override_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"trials": 4, "tol": 1e-8}))
    out_json = tmp_path / "out.json"
    code = main(["weyl", "--config", str(cfg), "--trials", "2", "--json", str(out_json)])
    assert code == EXIT_OK
    capsys.readouterr()
    data = json.loads(out_json.read_text())
    assert data["config"]["trials"] == 2
    assert data["config"]["tol"] == 1e-8


@pytest.mark.parametrize(
    "content",
    ["not json at all", json.dumps([1, 2]), json.dumps({"cadence": 3})],
)
def test_bad_config_files(tmp_path, capsys, content):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(content)
    assert main(["weyl", "--config", str(cfg)]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    assert main(["weyl", "--config", str(tmp_path / "absent.json")]) == EXIT_USAGE
    assert "cannot read config file" in capsys.readouterr().err


def test_bad_range_shape_in_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"mass_range": [1.0]}))
    assert main(["weyl", "--config", str(cfg)]) == EXIT_USAGE
    assert "two-element" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "diracsplit", "clifford", "--trials", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "summary:" in proc.stdout
