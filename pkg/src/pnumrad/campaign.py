"""Seeded verification campaigns over the check registry.

A campaign is a grid: checks x dimensions x exponents x entry parameters x
trials. Every cell derives its own seed from the base seed and the cell
coordinates, so any record can be rebuilt in isolation and the report is
identical no matter how the work is scheduled. Workers return plain dicts;
the parent concatenates them in task order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._version import __version__
from .ensembles import EnsembleSpec, derive_seed, sample
from .inequalities import (
    REGISTRY,
    HypothesisError,
    check,
    witness_matrix,
)
from .linalg import DomainError
from .schatten import p_token, parse_p

_SEED_PREFIX = "pnumrad"
_VARIANT_MODES = ("as_printed", "as_derived", "both")


@dataclass(frozen=True)
class CampaignConfig:
    """Full description of a campaign; serializes 1:1 to the config file."""

    checks: tuple = ()
    dims: tuple = (2, 3, 4, 6, 8)
    p_grid: tuple = (1.0, 1.5, 2.0, 3.0, math.inf)
    t_grid: tuple = (0.0, 0.25, 0.5, 0.75, 1.0)
    nu_grid: tuple = (0.25, 0.5, 0.75)
    trials: int = 200
    base_seed: int = 20250101
    grid_points: int = 720
    refine: bool = True
    variants: str = "both"

    def __post_init__(self):
        if not self.checks:
            object.__setattr__(self, "checks", tuple(REGISTRY))
        unknown = [c for c in self.checks if c not in REGISTRY]
        if unknown:
            raise DomainError(f"unknown check ids {unknown}")
        if not self.dims or any(int(n) < 1 for n in self.dims):
            raise DomainError("dims must be a non-empty list of positive integers")
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))
        object.__setattr__(self, "p_grid", tuple(parse_p(p) for p in self.p_grid))
        if not self.p_grid:
            raise DomainError("p_grid must be non-empty")
        for name in ("t_grid", "nu_grid"):
            vals = tuple(float(v) for v in getattr(self, name))
            if not vals or any(not 0.0 <= v <= 1.0 for v in vals):
                raise DomainError(f"{name} must be non-empty with values in [0, 1]")
            object.__setattr__(self, name, vals)
        if int(self.trials) < 1:
            raise DomainError("trials must be >= 1")
        object.__setattr__(self, "trials", int(self.trials))
        if int(self.grid_points) < 8:
            raise DomainError("grid_points must be >= 8")
        object.__setattr__(self, "grid_points", int(self.grid_points))
        object.__setattr__(self, "refine", bool(self.refine))
        if self.variants not in _VARIANT_MODES:
            raise DomainError(f"variants must be one of {_VARIANT_MODES}")

    @staticmethod
    def from_dict(d: dict) -> "CampaignConfig":
        if not isinstance(d, dict):
            raise DomainError("config must be an object")
        allowed = {"checks", "dims", "p_grid", "t_grid", "nu_grid", "trials",
                   "base_seed", "grid_points", "refine", "variants"}
        unknown = sorted(set(d) - allowed)
        if unknown:
            raise DomainError(f"unknown config fields {unknown}")
        kw = dict(d)
        checks = kw.get("checks", "all")
        if checks == "all" or checks == ["all"]:
            kw["checks"] = ()
        else:
            # preserve registry order regardless of how the file lists them
            requested = set(checks)
            bad = sorted(requested - set(REGISTRY))
            if bad:
                raise DomainError(f"unknown check ids {bad}")
            kw["checks"] = tuple(cid for cid in REGISTRY if cid in requested)
        if "base_seed" in kw:
            kw["base_seed"] = int(kw["base_seed"])
        return CampaignConfig(**{k: v for k, v in kw.items()})

    def to_dict(self) -> dict:
        return {
            "checks": list(self.checks),
            "dims": list(self.dims),
            "p_grid": [p_token(p) for p in self.p_grid],
            "t_grid": list(self.t_grid),
            "nu_grid": list(self.nu_grid),
            "trials": self.trials,
            "base_seed": self.base_seed,
            "grid_points": self.grid_points,
            "refine": self.refine,
            "variants": self.variants,
        }


def default_config() -> CampaignConfig:
    return CampaignConfig()


def _variants_for(cd, mode: str):
    if not cd.variants:
        return (None,)
    if mode == "both":
        return cd.variants
    return tuple(v for v in cd.variants if v == mode)


def _expand_tasks(cfg: CampaignConfig):
    """Deterministic task list; one task per (check, variant, n, p)."""
    tasks = []
    for cid in cfg.checks:
        cd = REGISTRY[cid]
        for variant in _variants_for(cd, cfg.variants):
            for n in cfg.dims:
                for p in cfg.p_grid:
                    if cd.supports_p(p):
                        tasks.append((cfg, cid, variant, n, p))
    return tasks


def build_operands(check_id: str, n: int, seed: int, kinds=None,
                   witness=None, gen=None):
    """Materialize operands for a cell; shared by the runner and replay.

    Exactly one of witness / gen / kinds describes the recipe. Per-operand
    seeds hang off the cell seed so the cell is self-contained.
    """
    cd = REGISTRY[check_id]
    if witness is not None:
        ops = [witness_matrix(w) for w in witness]
        digests = [{"kind": f"witness:{w}", "seed": None} for w in witness]
        return ops, digests, {"witness": ",".join(witness)}
    if gen is not None:
        if gen == "adjoint-pair":
            a = sample(EnsembleSpec("ginibre", n, derive_seed(seed, 0)))
            ops = [a, a.conj().T]
        elif gen == "hermitian-cube":
            h = sample(EnsembleSpec("hermitian", n, derive_seed(seed, 0)))
            ops = [h, h @ h]
        else:
            raise DomainError(f"unknown generator {gen!r}")
        digests = [{"kind": f"gen:{gen}", "seed": derive_seed(seed, 0)}]
        return ops, digests, {"gen": gen}
    kinds = tuple(kinds if kinds is not None else cd.kinds)
    if len(kinds) != cd.arity:
        raise DomainError(f"{check_id} expects {cd.arity} operand kinds")
    ops, digests = [], []
    for i, kind in enumerate(kinds):
        op_seed = derive_seed(seed, i)
        ops.append(sample(EnsembleSpec(kind, n, op_seed)))
        digests.append({"kind": kind, "seed": op_seed})
    return ops, digests, {"kinds": ",".join(kinds)}


def _cell_recipe(cd, n: int, trial: int):
    """Choose the operand recipe for one cell: witness, generator, or draws."""
    if n == 2 and trial < len(cd.witnesses):
        return {"witness": cd.witnesses[trial]}
    if cd.builder == "lem_re_pairs":
        return {"gen": "adjoint-pair" if trial % 2 == 0 else "hermitian-cube"}
    kinds = cd.kinds
    # below n = 4 a half-rank draw is rank one, and several radius bounds
    # are exact equalities on rank-one operands; an interval check cannot
    # certify an equality, so those cells would all land indeterminate
    if cd.rank_swap and n >= 4 and trial % 4 == 3:
        kinds = tuple("rank_deficient" if k == "ginibre" else k for k in kinds)
    return {"kinds": kinds}


def _run_task(payload):
    cfg, check_id, variant, n, p = payload
    cd = REGISTRY[check_id]
    ptok = p_token(p)
    t_values = cfg.t_grid if cd.needs_t else (None,)
    nu_values = cfg.nu_grid if cd.needs_nu else (None,)
    records, skipped = [], []

    def skip(reason):
        skipped.append({"id": check_id, "variant": variant, "n": n,
                        "p": ptok, "reason": reason})

    for t in t_values:
        for nu in nu_values:
            for trial in range(cfg.trials):
                seed = derive_seed(
                    _SEED_PREFIX, cfg.base_seed, check_id, variant or "-",
                    n, ptok,
                    "-" if t is None else format(float(t), "g"),
                    "-" if nu is None else format(float(nu), "g"),
                    trial)
                recipe = _cell_recipe(cd, n, trial)
                kinds = recipe.get("kinds", ())
                if "square_zero" in kinds and n % 2:
                    skip("square-zero ensemble needs an even dimension")
                    continue
                ops, digests, extra = build_operands(check_id, n, seed, **recipe)
                params = {
                    "grid_points": cfg.grid_points,
                    "refine": cfg.refine,
                    "seed": seed,
                    "operands_digest": digests,
                    "extra": extra,
                }
                if cd.needs_t:
                    params["t"] = t
                if cd.needs_nu:
                    params["nu"] = nu
                if variant is not None:
                    params["variant"] = variant
                try:
                    rec = check(check_id, ops, p, params)
                except HypothesisError as exc:
                    skip(f"hypothesis:{exc.name}")
                    continue
                records.append(rec.to_dict())
    return records, skipped


def _summary_key(check_id: str, variant) -> str:
    return check_id if variant is None else f"{check_id}[{variant}]"


def _summarize(records, skipped, tasks) -> dict:
    keys = []
    seen = set()
    for _, cid, variant, _, _ in tasks:
        key = _summary_key(cid, variant)
        if key not in seen:
            seen.add(key)
            keys.append(key)
    summary = {key: {
        "count": 0,
        "certified_holds": 0,
        "certified_violated": 0,
        "indeterminate": 0,
        "min_slack": None,
        "min_slack_witness_seed": None,
        "equality_attained_count": 0,
        "skipped": 0,
    } for key in keys}
    for rec in records:
        entry = summary[_summary_key(rec["id"], rec["variant"])]
        entry["count"] += 1
        entry[rec["verdict"]] += 1
        if rec["equality_attained"]:
            entry["equality_attained_count"] += 1
        if entry["min_slack"] is None or rec["slack"] < entry["min_slack"]:
            entry["min_slack"] = rec["slack"]
            entry["min_slack_witness_seed"] = rec["seed"]
    for item in skipped:
        summary[_summary_key(item["id"], item["variant"])]["skipped"] += 1
    return summary


def run_campaign(cfg: CampaignConfig, threads: int = 1) -> dict:
    """Execute the whole grid and return the report object.

    The report carries runtime_s = 0.0 so that reruns of the same config are
    byte-identical; callers wanting wall time should measure around this call.
    """
    tasks = _expand_tasks(cfg)
    if threads <= 1:
        results = [_run_task(tk) for tk in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_task, tasks))
    records, skipped = [], []
    for recs, skips in results:
        records.extend(recs)
        skipped.extend(skips)
    return {
        "config": cfg.to_dict(),
        "records": records,
        "summary": _summarize(records, skipped, tasks),
        "runtime_s": 0.0,
        "version": __version__,
    }


def has_theorem_violation(report: dict) -> bool:
    """True when a variant-free entry certified a violation (the alarm case)."""
    for rec in report["records"]:
        if rec["verdict"] == "certified_violated" and rec["variant"] is None:
            return True
    return False


def replay(check_id: str, seed: int, params: dict) -> dict:
    """Rebuild one cell from its seed and recipe, re-evaluate, return the record.

    params carries n plus whatever the original record echoed: p, optional
    t / nu / variant, estimator controls, and exactly one recipe key among
    witness (comma-joined names), gen, kinds (comma-joined).
    """
    params = dict(params)
    if "n" not in params or "p" not in params:
        raise DomainError("replay needs at least n and p")
    n = int(params.pop("n"))
    p = parse_p(params.pop("p"))
    recipe = {}
    if "witness" in params:
        recipe["witness"] = tuple(str(params.pop("witness")).split(","))
    elif "gen" in params:
        recipe["gen"] = str(params.pop("gen"))
    elif "kinds" in params:
        recipe["kinds"] = tuple(str(params.pop("kinds")).split(","))
    else:
        cd = REGISTRY.get(check_id)
        if cd is None:
            raise DomainError(f"unknown check id {check_id!r}")
        recipe["kinds"] = cd.kinds
    ops, digests, extra = build_operands(check_id, n, int(seed), **recipe)
    call_params = {
        "seed": int(seed),
        "operands_digest": digests,
        "extra": extra,
        "grid_points": int(params.pop("grid_points", 720)),
        "refine": _parse_bool(params.pop("refine", True)),
    }
    for key in ("t", "nu"):
        if key in params:
            call_params[key] = float(params.pop(key))
    if "variant" in params:
        call_params["variant"] = str(params.pop("variant"))
    if params:
        raise DomainError(f"unrecognized replay params {sorted(params)}")
    return check(check_id, ops, p, call_params).to_dict()


def _parse_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    text = str(v).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"not a boolean: {v!r}")


def summarize_text(report: dict) -> str:
    """Fixed-width summary table, one row per summary key."""
    headers = ("check", "count", "holds", "violated", "indet",
               "eq", "skipped", "min_slack")
    rows = []
    for key, s in report["summary"].items():
        slack = "-" if s["min_slack"] is None else f"{s['min_slack']:.3e}"
        rows.append((key, str(s["count"]), str(s["certified_holds"]),
                     str(s["certified_violated"]), str(s["indeterminate"]),
                     str(s["equality_attained_count"]), str(s["skipped"]),
                     slack))
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    def fmt(row):
        return "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
    lines = [fmt(headers)]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)
