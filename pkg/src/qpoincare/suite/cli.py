"""Command line: ``qpoincare <subcommand> [options]``."""

from __future__ import annotations

import argparse
import sys

from ..engine import CapExceeded, Caps, orient
from ..limits import LIMIT_CHECKS
from ..presentation import build_defining_relations
from .checks import check_registry, default_checks, get_check, run_checks
from .parser import ParseError, parse_expression
from .registry import RunConfig, UnknownCheck, order_from_sectors
from .report import dumps_report, summary_line


def _common(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    p.add_argument("--samples", type=int, default=3, help="bindings per check in sampled mode")
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--step-cap", type=int, default=None)
    p.add_argument("--precedence", default=None,
                   help="sector order, smallest first, e.g. 'P,G,Gb,T,Tb'")
    p.add_argument("--with-T", dest="with_t", action="store_true", help="add the T-sector everywhere")
    p.add_argument("--json", dest="json_path", default=None, help="write the JSON report here")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qpoincare", description="Verify the deformed Poincare algebra.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registered checks")
    _common(p)
    p = sub.add_parser("run", help="run the named checks")
    p.add_argument("names", nargs="+")
    _common(p)
    p = sub.add_parser("run-all", help="run every default check")
    p.add_argument("--include-optional", action="store_true", help="also run off-by-default checks")
    _common(p)
    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--no-unimodularity", action="store_true")
    _common(p)
    p = sub.add_parser("limits", help="run a semiclassical-limit check ('all' for every one)")
    p.add_argument("name")
    _common(p)
    p = sub.add_parser("dump-relations", help="print the defining relation set as JSON")
    p.add_argument("--no-unimodularity", action="store_true")
    _common(p)
    return ap


def _config(args) -> RunConfig:
    caps = None
    if args.degree_cap is not None or args.step_cap is not None:
        d = Caps()
        caps = Caps(args.degree_cap if args.degree_cap is not None else d.max_degree,
                    args.step_cap if args.step_cap is not None else d.max_steps)
    return RunConfig(mode=args.mode, samples=args.samples, seed=args.seed, caps=caps,
                     precedence=args.precedence, with_t=args.with_t)


def _run(names, args, out) -> int:
    config = _config(args)
    reports = run_checks(names, config, progress=lambda r: print(summary_line(r), file=out, flush=True))
    ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed", file=out)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(dumps_report(reports, config))
    return 0 if ok else 1


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            for s in check_registry():
                flag = "" if s.default else " (optional)"
                print(f"{s.name:<34} {s.expected:<26} {'/'.join(s.modes):<14} {s.anchor}{flag}", file=out)
            return 0
        if args.command == "run":
            return _run(args.names, args, out)
        if args.command == "run-all":
            names = [s.name for s in check_registry()] if args.include_optional else default_checks()
            return _run(names, args, out)
        if args.command == "limits":
            names = list(LIMIT_CHECKS) if args.name == "all" else [args.name]
            for n in names:
                if n not in LIMIT_CHECKS:
                    raise UnknownCheck(f"unknown limit check {n!r}; choose from {', '.join(LIMIT_CHECKS)}")
            return _run(names, args, out)
        if args.command == "nf":
            x = parse_expression(args.expr)
            rs = build_defining_relations(with_t=args.with_t,
                                          with_unimodularity=not args.no_unimodularity)
            order = order_from_sectors(args.precedence) if args.precedence else None
            cfg = _config(args)
            system = orient(rs.relations, order, cfg.caps or Caps())
            print(system.reduce(x), file=out)
            return 0
        if args.command == "dump-relations":
            rs = build_defining_relations(with_t=args.with_t,
                                          with_unimodularity=not args.no_unimodularity)
            text = rs.to_json()
            if args.json_path:
                with open(args.json_path, "w") as fh:
                    fh.write(text + "\n")
            else:
                print(text, file=out)
            return 0
    except (UnknownCheck, ParseError, ValueError) as e:
        msg = e.args[0] if isinstance(e, UnknownCheck) else str(e)
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except CapExceeded as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return 3
    return 2


if __name__ == "__main__":
    sys.exit(main())
