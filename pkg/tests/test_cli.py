"""CLI: subcommands, exit codes, config precedence, deterministic reports."""

import json

import pytest

from thetamoments.cli import WORKERS_ENV, load_config, run
from thetamoments.errors import DomainError


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# exit codes


def test_help_exits_zero(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0
    assert "subcommand" in out or "usage" in out


def test_unknown_subcommand_and_flag(capsys, tmp_path):
    code, _, _ = invoke(capsys, "no-such-thing")
    assert code == 2
    code, _, _ = invoke(capsys, "theta-moment", "--q", "5", "--k", "1",
                        "--parity", "even", "--badflag", "--out", str(tmp_path))
    assert code == 2


def test_domain_error_exits_two(capsys, tmp_path):
    code, _, err = invoke(capsys, "theta-moment", "--q", "0", "--k", "1",
                          "--parity", "even", "--out", str(tmp_path))
    assert code == 2
    assert "q >= 3" in err


def test_bound_eval_names_constraint(capsys, tmp_path):
    code, _, err = invoke(capsys, "bound-eval", "--q", "15", "--shifts", "0,0.3",
                          "--out", str(tmp_path))
    assert code == 2
    assert "q must be >= 17" in err


def test_unreachable_tol_exits_one(capsys, tmp_path):
    code, _, err = invoke(capsys, "l-moment", "--q", "13", "--k", "1",
                          "--tol", "1e-30", "--out", str(tmp_path))
    assert code == 1
    assert "precision" in err


# ---------------------------------------------------------------------------
# golden determinism


def test_theta_moment_csv_byte_identical(capsys, tmp_path):
    args = ("theta-moment", "--q", "5", "--k", "1", "--parity", "even")
    code, out1, _ = invoke(capsys, *args, "--out", str(tmp_path / "a"))
    assert code == 0
    code, out2, _ = invoke(capsys, *args, "--out", str(tmp_path / "b"))
    assert code == 0
    assert out1 == out2
    fa = (tmp_path / "a" / "theta-moment.csv").read_bytes()
    fb = (tmp_path / "b" / "theta-moment.csv").read_bytes()
    assert fa == fb and fa.decode() == out1


def test_csv_independent_of_worker_count(capsys, tmp_path):
    args = ("shifted-moment", "--q", "17", "--shifts", "0.5,-0.5")
    _, out1, _ = invoke(capsys, *args, "--workers", "1", "--out", str(tmp_path / "a"))
    _, out2, _ = invoke(capsys, *args, "--workers", "4", "--out", str(tmp_path / "b"))
    assert out1 == out2


def test_theta_moment_csv_content(capsys, tmp_path):
    code, out, _ = invoke(capsys, "theta-moment", "--q", "5", "--k", "1",
                          "--parity", "even", "--out", str(tmp_path))
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0] == "q,k,parity,raw,normalization,ratio,eps,family_size"
    fields = lines[1].split(",")
    assert fields[0] == "5" and fields[2] == "even" and fields[7] == "1"
    assert float(fields[3]) == pytest.approx(0.2016262452927956, abs=1e-11)


def test_large_values_row_per_grid_point(capsys, tmp_path):
    code, out, _ = invoke(capsys, "large-values", "--q", "17", "--shifts", "0,0",
                          "--vmin", "-1", "--vmax", "1", "--vsteps", "5",
                          "--out", str(tmp_path))
    assert code == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")][1:]
    assert len(rows) == 5
    counts = [int(r.split(",")[2]) for r in rows]
    assert counts == sorted(counts, reverse=True)


def test_theta_scan_row_per_prime(capsys, tmp_path):
    code, out, _ = invoke(capsys, "theta-scan", "--prime-range", "5:30",
                          "--k", "1", "--out", str(tmp_path))
    assert code == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")][1:]
    assert [r.split(",")[0] for r in rows] == ["5", "7", "11", "13", "17", "19", "23", "29"]


def test_mellin_check_csv(capsys, tmp_path):
    code, out, _ = invoke(capsys, "mellin-check", "--q", "5", "--height", "4",
                          "--step", "0.0625", "--out", str(tmp_path))
    assert code == 0
    header, row = [l for l in out.splitlines() if not l.startswith("#")][:2]
    assert header.startswith("q,char_index,series_re")
    assert float(row.split(",")[6]) < 1e-3  # residual at modest height


def test_char_table_rows(capsys, tmp_path):
    code, out, _ = invoke(capsys, "char-table", "--q", "5", "--out", str(tmp_path))
    assert code == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")][1:]
    assert len(rows) == 4
    assert rows[0].split(",") == ["0", "0", "even", "1", "0"]  # trivial char


# ---------------------------------------------------------------------------
# json reports


def test_bound_eval_json_payload(capsys, tmp_path):
    code, out, _ = invoke(capsys, "bound-eval", "--q", "101", "--shifts", "0,0.3",
                          "--V", "6.0", "--out", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    payload = doc["payload"]
    assert payload["q"] == 101 and payload["k"] == 1
    assert len(payload["pairs"]) == 1
    assert payload["moment_bound"] > 0
    assert payload["large_value_bound"]["regime"] in ("I", "II", "III")
    assert (tmp_path / "bound-eval.json").exists()


def test_rand_model_json_reproducible_payload(capsys, tmp_path):
    args = ("rand-model", "--q", "101", "--k", "1", "--samples", "150",
            "--seed", "5")
    code, out1, _ = invoke(capsys, *args, "--out", str(tmp_path / "a"))
    assert code == 0
    code, out2, _ = invoke(capsys, *args, "--out", str(tmp_path / "b"))
    p1, p2 = json.loads(out1)["payload"], json.loads(out2)["payload"]
    assert p1 == p2  # envelope timestamps may differ; the payload never does
    assert p1["estimate"] >= 0 and p1["seed"] == 5


def test_json_format_flag_and_workers_visibility(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "2")
    code, out, _ = invoke(capsys, "theta-moment", "--q", "5", "--k", "1",
                          "--parity", "even", "--format", "json",
                          "--workers", "3", "--out", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["workers"] == 3  # flag beats environment
    assert doc["payload"]["raw"] > 0


def test_env_workers_applies_without_flag(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "2")
    code, out, _ = invoke(capsys, "theta-moment", "--q", "5", "--k", "1",
                          "--parity", "even", "--format", "json",
                          "--out", str(tmp_path))
    assert code == 0
    assert json.loads(out)["config"]["workers"] == 2


# ---------------------------------------------------------------------------
# config files


def test_load_config_empty_is_defaults(tmp_path):
    path = tmp_path / "empty.cfg"
    path.write_text("")
    cfg = load_config(str(path))
    assert cfg.tol == 1e-10 and cfg.format == "csv" and cfg.workers is None


def test_load_config_values_and_comments(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# comment\n\ntol=1e-12\nworkers=2\nformat=json\nseed=9\n")
    cfg = load_config(str(path))
    assert cfg.tol == 1e-12 and cfg.workers == 2
    assert cfg.format == "json" and cfg.seed == 9


def test_load_config_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("tol=1e-9\nnot a pair\n")
    with pytest.raises(DomainError, match=r":2:"):
        load_config(str(path))
    path.write_text("mystery=1\n")
    with pytest.raises(DomainError, match=r":1:.*mystery"):
        load_config(str(path))
    path.write_text("workers=0\n")
    with pytest.raises(DomainError, match="workers"):
        load_config(str(path))
    path.write_text("tol=banana\n")
    with pytest.raises(DomainError, match=r":1:"):
        load_config(str(path))


def test_config_file_overridden_by_flag(capsys, tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("tol=1e-9\n")
    code, out, _ = invoke(capsys, "l-moment", "--q", "13", "--k", "1",
                          "--config", str(path), "--out", str(tmp_path))
    assert code == 0 and "# tol=1e-09" in out
    code, out, _ = invoke(capsys, "l-moment", "--q", "13", "--k", "1",
                          "--config", str(path), "--tol", "1e-8",
                          "--out", str(tmp_path))
    assert code == 0 and "# tol=1e-08" in out
