"""Command-line front end.

    orderchain delta  P.json Q.json [--kind oc|oo|cc]
    orderchain verify P.json Q.json [--kind ...] [--nmax N] [--hilbert-depth N]
                                    [--tie-break a|b] [--corrupt swap|drop]
                                    [--dump diagnostics.json]
    orderchain sweep  -d D --out rows.csv [--kind ...] [--fix-p P.json] ...

Exit status: 0 success, 1 a checked property failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from orderchain import toric
from orderchain.config import RunConfig, SweepConfig
from orderchain.pipeline import rows_to_csv, run_delta, run_verify, sweep_rows
from orderchain.polytopes import SizeMismatch
from orderchain.poset import CycleError, Poset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

KINDS = ("oc", "oo", "cc")


class InputError(Exception):
    pass


def load_poset(path: str) -> Poset:
    try:
        return Poset.from_json(Path(path))
    except (OSError, json.JSONDecodeError, ValueError, IndexError, TypeError) as e:
        raise InputError(f"{path}: {e}") from e


def _pair(args) -> tuple[Poset, Poset]:
    P, Q = load_poset(args.posetP), load_poset(args.posetQ)
    if P.size != Q.size:
        raise InputError(f"posets have different sizes ({P.size} and {Q.size})")
    return P, Q


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_delta(args) -> int:
    P, Q = _pair(args)
    rep = run_delta(P, Q, RunConfig(kind=args.kind, timings=args.timings))
    _emit(rep.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    P, Q = _pair(args)
    cfg = RunConfig(
        kind=args.kind,
        nmax=args.nmax,
        hilbert_depth=args.hilbert_depth,
        tie_break=args.tie_break,
        corrupt=args.corrupt,
        timings=args.timings,
    )
    rep = run_verify(P, Q, cfg)
    _emit(rep.to_dict())
    if args.dump:
        order = toric.build_order(P, Q, cfg.tie_break)
        G = toric.generators(P, Q)
        if cfg.corrupt:
            G = toric.corrupt(G, cfg.corrupt)
        diag = toric.diagnostics(P, Q, order, G, toric.buchberger_check(G, order))
        Path(args.dump).write_text(json.dumps(diag, indent=2) + "\n")
    if not rep.passed:
        print(f"FAILED: {rep.failure}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.d < 1:
        raise InputError("d must be positive")
    if args.d > args.max_d:
        raise InputError(f"d = {args.d} exceeds the bound {args.max_d} (raise --max-d)")
    cfg = SweepConfig(
        d=args.d,
        kind=args.kind,
        max_d=args.max_d,
        groebner=not args.no_groebner,
        workers=args.workers,
    )
    Ps = [load_poset(args.fix_p)] if args.fix_p else None
    Qs = [load_poset(args.fix_q)] if args.fix_q else None
    try:
        rows = sweep_rows(cfg, Ps, Qs)
    except SizeMismatch as e:
        raise InputError(str(e)) from e
    text = rows_to_csv(rows, args.d)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orderchain", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("posetP", help='poset JSON: {"size": d, "covers": [[a, b], ...]}')
        p.add_argument("posetQ")
        p.add_argument("--kind", choices=KINDS, default="oc")
        p.add_argument("--timings", action="store_true", help="include wall time per stage")

    p = sub.add_parser("delta", help="Ehrhart counts and delta-vector")
    pair_args(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("verify", help="Groebner basis and normal Gorenstein Fano checks")
    pair_args(p)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--hilbert-depth", type=int, default=3)
    p.add_argument("--tie-break", choices=("a", "b"), default="a")
    p.add_argument("--corrupt", choices=("swap", "drop"), help="break G on purpose")
    p.add_argument("--dump", metavar="PATH", help="write Groebner diagnostics JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="CSV over all labeled poset pairs of size d")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="oc")
    p.add_argument("--out", required=True, help="CSV path, or - for stdout")
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--fix-p", metavar="PATH", help="use only this P")
    p.add_argument("--fix-q", metavar="PATH", help="use only this Q")
    p.add_argument("--no-groebner", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CycleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
