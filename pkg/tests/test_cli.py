"""Command-line interface: flags, outputs, and exit codes."""

import json
import math
import subprocess

import numpy as np
import pytest

from pnumrad.cli import main
from pnumrad.matio import save_config, save_matrix
from pnumrad.campaign import CampaignConfig
from pnumrad.transforms import FunctionPair, aluthge_fg

from conftest import draw


@pytest.fixture
def j2_file(tmp_path, j2):
    path = tmp_path / "j2.json"
    save_matrix(path, j2)
    return str(path)


def obj_to_matrix(obj):
    n = obj["n"]
    out = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            re, im = obj["data"][i][j]
            out[i, j] = complex(re, im)
    return out


# ------------------------------------------------------------------ compute

def test_compute_schatten(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "1",
                 "--quantity", "schatten"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1.0, abs=1e-14)


def test_compute_wp_prints_both_ends(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "wp"]) == 0
    lower, upper = map(float, capsys.readouterr().out.split())
    target = 2.0 ** (1.0 / 2.0 - 1.0)
    assert lower <= target * (1 + 1e-12) and target <= upper * (1 + 1e-12)
    assert upper - lower < 5e-6


def test_compute_wp_grid_and_refine_flags(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "inf",
                 "--quantity", "wp", "--grid", "64", "--no-refine"]) == 0
    lower, upper = map(float, capsys.readouterr().out.split())
    assert lower <= 0.5 * (1 + 1e-12) and 0.5 <= upper * (1 + 1e-12)
    assert upper - lower < 0.01


def test_compute_w2(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "w2"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(math.sqrt(0.5))


def test_compute_w2_rejects_other_p(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "3",
                 "--quantity", "w2"]) == 1
    assert "error" in capsys.readouterr().err


def test_compute_aluthge_classical(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "aluthge", "--t", "0.5"]) == 0
    out = obj_to_matrix(json.loads(capsys.readouterr().out))
    assert np.max(np.abs(out)) < 1e-12


def test_compute_aluthge_scaled_pair(tmp_path, capsys):
    m = draw("ginibre", 3, "cli", "pair")
    path = tmp_path / "m.json"
    save_matrix(path, m)
    assert main(["compute", "--matrix", str(path), "--p", "2",
                 "--quantity", "aluthge", "--pair", "0.25,2.0"]) == 0
    got = obj_to_matrix(json.loads(capsys.readouterr().out))
    want = aluthge_fg(m, FunctionPair(a=0.25, c=2.0))
    assert np.max(np.abs(got - want)) < 1e-12


def test_compute_aluthge_needs_t_or_pair(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "aluthge"]) == 1
    assert "aluthge" in capsys.readouterr().err


def test_compute_aluthge_rejects_both_t_and_pair(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "aluthge", "--t", "0.5",
                 "--pair", "0.5,1.0"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_compute_bad_pair_text(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "2",
                 "--quantity", "aluthge", "--pair", "0.5"]) == 1
    assert "--pair expects" in capsys.readouterr().err


def test_compute_missing_matrix_file(tmp_path, capsys):
    assert main(["compute", "--matrix", str(tmp_path / "nope.json"),
                 "--p", "2", "--quantity", "schatten"]) == 1
    assert "error" in capsys.readouterr().err


def test_compute_invalid_p(j2_file, capsys):
    assert main(["compute", "--matrix", j2_file, "--p", "0.5",
                 "--quantity", "schatten"]) == 1
    assert "error" in capsys.readouterr().err


def test_compute_corrupt_matrix_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["compute", "--matrix", str(bad), "--p", "2",
                 "--quantity", "schatten"]) == 1
    assert "error" in capsys.readouterr().err


# ----------------------------------------------------------------- campaign

def test_campaign_json_end_to_end(tmp_path, capsys):
    cfg = CampaignConfig.from_dict(
        {"checks": ["SCH-MONO", "WP-SA"], "dims": [2, 3],
         "p_grid": ["2", "inf"], "trials": 2})
    cfg_path = tmp_path / "cfg.json"
    save_config(cfg_path, cfg)
    out_path = tmp_path / "report.json"
    code = main(["campaign", "--config", str(cfg_path),
                 "--out", str(out_path)])
    captured = capsys.readouterr().out
    assert code == 0
    assert out_path.exists()
    report = json.loads(out_path.read_text(encoding="utf-8"))
    assert report["config"]["trials"] == 2
    assert len(report["records"]) == 16
    assert "records: 16" in captured
    assert captured.splitlines()[0].split()[0] == "check"


def test_campaign_csv_format(tmp_path, capsys):
    cfg = CampaignConfig.from_dict(
        {"checks": ["WP-BASIC"], "dims": [2], "p_grid": ["2"], "trials": 2})
    cfg_path = tmp_path / "cfg.json"
    save_config(cfg_path, cfg)
    out_path = tmp_path / "report.csv"
    assert main(["campaign", "--config", str(cfg_path),
                 "--out", str(out_path), "--format", "csv",
                 "--threads", "2"]) == 0
    lines = out_path.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0].startswith("id,variant,n,p")
    assert len(lines) == 3
    capsys.readouterr()


def test_campaign_requires_config_flag(capsys):
    assert main(["campaign", "--out", "x.json"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_campaign_missing_config_file(tmp_path, capsys):
    assert main(["campaign", "--config", str(tmp_path / "nope.json"),
                 "--out", str(tmp_path / "r.json")]) == 1
    assert "error" in capsys.readouterr().err


def test_campaign_bad_config_contents(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"trial": 3}), encoding="utf-8")
    assert main(["campaign", "--config", str(cfg_path),
                 "--out", str(tmp_path / "r.json")]) == 1
    assert "unknown config fields" in capsys.readouterr().err


# ------------------------------------------------------------------- replay

def test_replay_witness_row(capsys):
    assert main(["replay", "--check", "SCH-MONO", "--seed", "11",
                 "--params", "n=2", "p=2", "witness=J2"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["id"] == "SCH-MONO"
    assert record["params"] == {"witness": "J2"}
    assert record["verdict"] in {"certified_holds", "indeterminate"}


def test_replay_random_row_with_controls(capsys):
    assert main(["replay", "--check", "THM1", "--seed", "4242",
                 "--params", "n=3", "p=inf", "t=0.5", "kinds=ginibre",
                 "grid_points=256", "refine=true"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["t"] == 0.5
    assert record["verdict"] != "certified_violated"


def test_replay_printed_variant_violation_still_exits_zero(capsys):
    """Erratum reproductions are labelled, so they are not the alarm case."""
    assert main(["replay", "--check", "REM-POSREF", "--seed", "1",
                 "--params", "n=2", "p=inf", "witness=I2,I2",
                 "variant=as_printed"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["verdict"] == "certified_violated"
    assert record["variant"] == "as_printed"


def test_replay_bad_param_token(capsys):
    assert main(["replay", "--check", "SCH-MONO", "--seed", "1",
                 "--params", "n2"]) == 1
    assert "k=v" in capsys.readouterr().err


def test_replay_unknown_check(capsys):
    assert main(["replay", "--check", "NOPE", "--seed", "1",
                 "--params", "n=2", "p=2"]) == 1
    assert "error" in capsys.readouterr().err


# -------------------------------------------------------------- list-checks

def test_list_checks_table(capsys):
    assert main(["list-checks"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 35
    assert lines[0].split()[:3] == ["id", "rel", "arity"]
    assert lines[1].startswith("SCH-MONO")


def test_list_checks_json(capsys):
    assert main(["list-checks", "--format", "json"]) == 0
    entries = json.loads(capsys.readouterr().out)
    assert len(entries) == 34
    by_id = {e["id"]: e for e in entries}
    assert by_id["THM1"]["params"] == ["t"]
    assert by_id["REM-POSREF"]["variants"] == ["as_printed", "as_derived"]


# ---------------------------------------------------------------- top level

def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_missing_subcommand(capsys):
    assert main([]) == 1
    capsys.readouterr()


def test_installed_script_smoke():
    proc = subprocess.run(["pnumrad", "list-checks", "--format", "json"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)) == 34
