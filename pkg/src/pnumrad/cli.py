"""Command-line front end.

Exit codes: 0 clean run, 1 usage or input error, 2 a campaign (or replayed
record) certified a violation of a variant-free entry.
"""

from __future__ import annotations

import argparse
import json
import sys
from time import perf_counter

from .campaign import (
    has_theorem_violation,
    replay,
    run_campaign,
    summarize_text,
)
from .inequalities import HypothesisError, UnknownCheckError, list_registry
from .linalg import DomainError
from .matio import (
    load_config,
    load_matrix,
    matrix_to_obj,
    write_report_csv,
    write_report_json,
)
from .schatten import p_num_radius, parse_p, schatten_norm, w2_exact
from .transforms import FunctionPair, aluthge_fg, aluthge_t


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; 2 is reserved for certified
    # violations, so route usage problems through status 1 instead
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="pnumrad", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    comp = sub.add_parser("compute", help="evaluate one quantity on one matrix")
    comp.add_argument("--matrix", required=True, help="matrix file (JSON)")
    comp.add_argument("--p", required=True, help="Schatten exponent, 1 <= p <= inf")
    comp.add_argument("--quantity", required=True,
                      choices=("schatten", "wp", "w2", "aluthge"))
    group = comp.add_mutually_exclusive_group()
    group.add_argument("--t", type=float, help="power-pair exponent in [0, 1]")
    group.add_argument("--pair", help="scaled pair as 'a,c': c x^a and x^(1-a)/c")
    comp.add_argument("--grid", type=int, default=720,
                      help="angle grid points for wp (default 720)")
    comp.add_argument("--refine", action=argparse.BooleanOptionalAction,
                      default=True, help="golden-section refinement for wp")
    comp.set_defaults(func=_cmd_compute)

    camp = sub.add_parser("campaign", help="run a verification campaign")
    camp.add_argument("--config", required=True, help="campaign config file (JSON)")
    camp.add_argument("--out", required=True, help="report destination")
    camp.add_argument("--format", choices=("json", "csv"), default="json")
    camp.add_argument("--threads", type=int, default=1)
    camp.set_defaults(func=_cmd_campaign)

    rep = sub.add_parser("replay", help="rebuild and re-evaluate one record")
    rep.add_argument("--check", required=True, help="registry id")
    rep.add_argument("--seed", required=True, type=int, help="cell seed")
    rep.add_argument("--params", nargs="*", default=[], metavar="K=V",
                     help="n=, p=, and any of t=, nu=, variant=, witness=, "
                          "gen=, kinds=, grid_points=, refine=")
    rep.set_defaults(func=_cmd_replay)

    lst = sub.add_parser("list-checks", help="describe every registry entry")
    lst.add_argument("--format", choices=("json", "table"), default="table")
    lst.set_defaults(func=_cmd_list)
    return parser


def _cmd_compute(args) -> int:
    m = load_matrix(args.matrix)
    p = parse_p(args.p)
    q = args.quantity
    if q == "schatten":
        print(f"{schatten_norm(m, p):.17g}")
        return 0
    if q == "wp":
        est = p_num_radius(m, p, grid_points=args.grid, refine=args.refine)
        print(f"{est.lower:.17g} {est.upper:.17g}")
        return 0
    if q == "w2":
        if p != 2.0:
            raise DomainError("the closed form is specific to p = 2")
        print(f"{w2_exact(m):.17g}")
        return 0
    # aluthge
    if args.pair is not None:
        parts = args.pair.split(",")
        if len(parts) != 2:
            raise DomainError("--pair expects 'a,c'")
        out = aluthge_fg(m, FunctionPair(a=float(parts[0]), c=float(parts[1])))
    elif args.t is not None:
        out = aluthge_t(m, args.t)
    else:
        raise DomainError("aluthge needs --t or --pair")
    print(json.dumps(matrix_to_obj(out)))
    return 0


def _cmd_campaign(args) -> int:
    cfg = load_config(args.config)
    start = perf_counter()
    report = run_campaign(cfg, threads=max(1, args.threads))
    elapsed = perf_counter() - start
    if args.format == "json":
        write_report_json(report, args.out)
    else:
        write_report_csv(report, args.out)
    print(summarize_text(report))
    print(f"records: {len(report['records'])}  wall: {elapsed:.1f} s  "
          f"out: {args.out}")
    return 2 if has_theorem_violation(report) else 0


def _cmd_replay(args) -> int:
    params = {}
    for token in args.params:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise DomainError(f"params must look like k=v, got {token!r}")
        params[key] = value
    record = replay(args.check, args.seed, params)
    print(json.dumps(record, indent=2))
    if record["verdict"] == "certified_violated" and record["variant"] is None:
        return 2
    return 0


def _cmd_list(args) -> int:
    entries = list_registry()
    if args.format == "json":
        print(json.dumps(entries, indent=2))
        return 0
    headers = ("id", "rel", "arity", "p_range", "params", "variants",
               "level", "hypotheses", "description")
    rows = []
    for e in entries:
        rows.append((
            e["id"], e["relation"], str(e["arity"]), e["p_range"],
            ",".join(e["params"]) or "-",
            ",".join(e["variants"]) or "-",
            "theorem" if e["theorem_level"] else "remark",
            e["hypotheses"], e["description"],
        ))
    widths = [max(len(h), *(len(r[i]) for r in rows))
              for i, h in enumerate(headers)]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, HypothesisError, UnknownCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
