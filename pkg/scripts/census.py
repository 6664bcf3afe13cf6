#!/usr/bin/env python3
"""Sweep every labeled pair (P, Q) of size d and tabulate delta-vectors."""

import argparse
from collections import Counter
from pathlib import Path

from orderchain.config import SweepConfig
from orderchain.pipeline import rows_to_csv, sweep_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-d", type=int, default=3)
    ap.add_argument("--kind", default="oc", choices=("oc", "oo", "cc"))
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--no-groebner", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cfg = SweepConfig(
        d=args.d, kind=args.kind, groebner=not args.no_groebner, workers=args.workers
    )
    rows = sweep_rows(cfg)
    if args.out:
        args.out.write_text(rows_to_csv(rows, args.d))
    tally = Counter(tuple(r[f"delta{i}"] for i in range(args.d + 1)) for r in rows)
    print(f"{len(rows)} pairs, {len(tally)} distinct delta-vectors")
    for delta, n in sorted(tally.items()):
        print(f"  {list(delta)}  x{n}")
    flags = ("fano", "gorenstein", "normal_n3", "groebner_ok")
    for f in flags:
        print(f"  {f}: " + str(Counter(r[f] for r in rows)))


if __name__ == "__main__":
    main()
