"""Campaign configuration, determinism, replay, and report files."""

import json
import math

import jsonschema
import pytest

from pnumrad.campaign import (
    CampaignConfig,
    build_operands,
    default_config,
    has_theorem_violation,
    replay,
    run_campaign,
    summarize_text,
)
from pnumrad.inequalities import REGISTRY
from pnumrad.linalg import DomainError
from pnumrad.matio import (
    CSV_COLUMNS,
    load_config,
    load_report,
    report_schema,
    save_config,
    write_report_csv,
    write_report_json,
)


def tiny(**kw):
    base = {"checks": ["SCH-MONO", "WP-BASIC"], "dims": [2, 3],
            "p_grid": ["2", "inf"], "trials": 3}
    base.update(kw)
    return CampaignConfig.from_dict(base)


# ------------------------------------------------------------------- config

class TestConfig:
    def test_defaults(self):
        cfg = default_config()
        assert cfg.checks == tuple(REGISTRY)
        assert cfg.dims == (2, 3, 4, 6, 8)
        assert cfg.p_grid == (1.0, 1.5, 2.0, 3.0, math.inf)
        assert cfg.t_grid == (0.0, 0.25, 0.5, 0.75, 1.0)
        assert cfg.nu_grid == (0.25, 0.5, 0.75)
        assert cfg.trials == 200
        assert cfg.base_seed == 20250101
        assert cfg.grid_points == 720
        assert cfg.refine is True
        assert cfg.variants == "both"

    def test_round_trip_with_inf_token(self):
        cfg = tiny()
        d = cfg.to_dict()
        assert d["p_grid"] == ["2", "inf"]
        again = CampaignConfig.from_dict(d)
        assert again == cfg

    def test_checks_all_token(self):
        assert CampaignConfig.from_dict({"checks": "all"}).checks == tuple(REGISTRY)
        assert CampaignConfig.from_dict({"checks": ["all"]}).checks == tuple(REGISTRY)

    def test_check_order_normalized_to_registry_order(self):
        cfg = CampaignConfig.from_dict({"checks": ["THM1", "SCH-MONO"]})
        assert cfg.checks == ("SCH-MONO", "THM1")

    def test_unknown_config_field(self):
        with pytest.raises(DomainError, match="unknown config fields"):
            CampaignConfig.from_dict({"trial": 5})

    def test_unknown_check_id(self):
        with pytest.raises(DomainError, match="unknown check ids"):
            CampaignConfig.from_dict({"checks": ["SCH-MONO", "NOPE"]})

    def test_non_object_config(self):
        with pytest.raises(DomainError):
            CampaignConfig.from_dict([1, 2])

    @pytest.mark.parametrize("bad", [
        {"dims": []},
        {"dims": [0, 2]},
        {"trials": 0},
        {"grid_points": 4},
        {"t_grid": [0.5, 1.5]},
        {"nu_grid": []},
        {"variants": "sometimes"},
        {"p_grid": [0.5]},
    ])
    def test_invalid_values(self, bad):
        with pytest.raises(DomainError):
            CampaignConfig.from_dict(bad)

    def test_config_file_round_trip(self, tmp_path):
        cfg = tiny()
        path = tmp_path / "cfg.json"
        save_config(path, cfg)
        assert load_config(path) == cfg

    def test_config_file_bad_json(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text("{nope", encoding="utf-8")
        with pytest.raises(DomainError, match="not valid JSON"):
            load_config(path)


# ------------------------------------------------------------------ running

def test_self_adjoint_cell_block():
    """Frozen cell: 3x3 self-adjoint draws across three exponents."""
    cfg = CampaignConfig.from_dict(
        {"checks": ["WP-SA"], "dims": [3], "p_grid": ["1", "2", "inf"],
         "trials": 5})
    report = run_campaign(cfg)
    assert len(report["records"]) == 15
    assert all(r["verdict"] == "certified_holds" for r in report["records"])
    assert all(r["equality_attained"] for r in report["records"])
    s = report["summary"]["WP-SA"]
    assert s["count"] == 15
    assert s["certified_holds"] == 15
    assert s["equality_attained_count"] == 15
    assert s["skipped"] == 0


def test_rerun_is_byte_identical():
    cfg = tiny()
    a = run_campaign(cfg)
    b = run_campaign(cfg)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_threads_match_serial():
    cfg = tiny(trials=2)
    serial = run_campaign(cfg, threads=1)
    parallel = run_campaign(cfg, threads=2)
    assert json.dumps(serial, sort_keys=True) == json.dumps(parallel, sort_keys=True)


def test_witness_rows_substitute_first_trials_at_n2():
    cfg = tiny(checks=["SCH-MONO"], dims=[2], p_grid=["2"], trials=3)
    report = run_campaign(cfg)
    recs = report["records"]
    assert len(recs) == 3
    assert recs[0]["params"] == {"witness": "I2"}
    assert recs[1]["params"] == {"witness": "J2"}
    assert recs[2]["params"] == {"kinds": "ginibre"}
    assert recs[0]["operands"][0]["kind"] == "witness:I2"
    assert recs[2]["operands"][0]["kind"] == "ginibre"


def test_rank_deficient_swap_every_fourth_trial_at_n4():
    cfg = tiny(checks=["SCH-MONO"], dims=[4], p_grid=["2"], trials=8)
    report = run_campaign(cfg)
    kinds = [r["params"]["kinds"] for r in report["records"]]
    assert kinds == ["ginibre", "ginibre", "ginibre", "rank_deficient"] * 2


def test_square_zero_cells_skip_odd_dimensions():
    cfg = CampaignConfig.from_dict(
        {"checks": ["W2-SQZERO"], "dims": [2, 3], "p_grid": ["2"],
         "trials": 2})
    report = run_campaign(cfg)
    assert len(report["records"]) == 2
    assert {r["n"] for r in report["records"]} == {2}
    assert report["summary"]["W2-SQZERO"]["skipped"] == 2


def test_unsupported_p_cells_are_not_expanded():
    cfg = CampaignConfig.from_dict(
        {"checks": ["YAM"], "dims": [3], "p_grid": ["2", "inf"], "trials": 2})
    report = run_campaign(cfg)
    assert {r["p"] for r in report["records"]} == {"inf"}
    assert report["summary"]["YAM"]["count"] == 2


def test_variant_mode_filter():
    base = {"checks": ["REM-POSREF"], "dims": [3], "p_grid": ["inf"],
            "trials": 2}
    both = run_campaign(CampaignConfig.from_dict(dict(base, variants="both")))
    printed = run_campaign(
        CampaignConfig.from_dict(dict(base, variants="as_printed")))
    assert set(both["summary"]) == {
        "REM-POSREF[as_printed]", "REM-POSREF[as_derived]"}
    assert set(printed["summary"]) == {"REM-POSREF[as_printed]"}


def test_theorem_violation_flag():
    holds = {"records": [
        {"verdict": "certified_holds", "variant": None},
        {"verdict": "certified_violated", "variant": "as_printed"},
    ]}
    assert not has_theorem_violation(holds)
    alarm = {"records": [{"verdict": "certified_violated", "variant": None}]}
    assert has_theorem_violation(alarm)


def test_summary_min_slack_tracks_seed():
    cfg = tiny(checks=["WP-BASIC"], dims=[3], p_grid=["2"], trials=4)
    report = run_campaign(cfg)
    s = report["summary"]["WP-BASIC"]
    worst = min(report["records"], key=lambda r: r["slack"])
    assert s["min_slack"] == worst["slack"]
    assert s["min_slack_witness_seed"] == worst["seed"]


# ------------------------------------------------------------------- replay

def _replay_params(report, rec):
    params = {"n": rec["n"], "p": rec["p"],
              "grid_points": report["config"]["grid_points"],
              "refine": report["config"]["refine"]}
    params.update(rec["params"])
    for key in ("t", "nu", "variant"):
        if rec[key] is not None:
            params[key] = rec[key]
    return params


def test_replay_reproduces_random_and_witness_rows():
    cfg = tiny(checks=["SCH-MONO"], dims=[2, 3], p_grid=["2"], trials=3)
    report = run_campaign(cfg)
    for rec in report["records"]:
        again = replay(rec["id"], rec["seed"], _replay_params(report, rec))
        for key in ("lhs", "rhs", "slack", "verdict", "equality_attained"):
            assert again[key] == rec[key], key


def test_replay_reproduces_generator_and_parametrized_rows():
    cfg = CampaignConfig.from_dict(
        {"checks": ["LEM-RE", "THM1"], "dims": [3], "p_grid": ["2"],
         "trials": 2, "t_grid": [0.25, 0.75]})
    report = run_campaign(cfg)
    gens = [r for r in report["records"] if "gen" in r["params"]]
    assert {r["params"]["gen"] for r in gens} == {"adjoint-pair",
                                                 "hermitian-cube"}
    for rec in report["records"]:
        again = replay(rec["id"], rec["seed"], _replay_params(report, rec))
        for key in ("lhs", "rhs", "slack", "verdict"):
            assert again[key] == rec[key], key


def test_replay_validation():
    with pytest.raises(DomainError, match="needs at least n and p"):
        replay("SCH-MONO", 1, {"p": "2"})
    with pytest.raises(DomainError, match="unrecognized replay params"):
        replay("SCH-MONO", 1, {"n": 3, "p": "2", "bogus": 1})
    with pytest.raises(DomainError, match="unknown check id"):
        replay("NOPE", 1, {"n": 3, "p": "2"})


def test_replay_defaults_to_registry_kinds():
    rec = replay("WP-SA", 99, {"n": 3, "p": "2"})
    assert rec["operands"][0]["kind"] == "hermitian"
    assert rec["verdict"] == "certified_holds"


def test_build_operands_witness_and_kind_paths():
    ops, digests, extra = build_operands("SCH-MULT", 2, 5,
                                         witness=("I2", "J2"))
    assert extra == {"witness": "I2,J2"}
    assert digests[0]["seed"] is None
    assert ops[0].shape == (2, 2)
    with pytest.raises(DomainError, match="unknown generator"):
        build_operands("LEM-RE", 3, 5, gen="mystery")
    with pytest.raises(DomainError, match="operand kinds"):
        build_operands("SCH-MULT", 3, 5, kinds=("ginibre",))


# ------------------------------------------------------------------ reports

def test_report_files_round_trip(tmp_path):
    report = run_campaign(tiny(trials=2))
    jpath = tmp_path / "report.json"
    write_report_json(report, jpath)
    assert load_report(jpath) == report

    cpath = tmp_path / "report.csv"
    write_report_csv(report, cpath)
    lines = cpath.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + len(report["records"])
    first = lines[1].split(",")
    assert first[0] == report["records"][0]["id"]
    assert first[12] in {"certified_holds", "indeterminate",
                         "certified_violated"}


def test_report_validates_against_shipped_schema():
    report = run_campaign(tiny(trials=1))
    schema = report_schema()
    jsonschema.validate(instance=report, schema=schema)


def test_summarize_text_layout():
    report = run_campaign(tiny(trials=1))
    text = summarize_text(report)
    lines = text.splitlines()
    assert lines[0].split() == ["check", "count", "holds", "violated",
                                "indet", "eq", "skipped", "min_slack"]
    assert any(line.startswith("SCH-MONO") for line in lines[1:])
    assert any(line.startswith("WP-BASIC") for line in lines[1:])
