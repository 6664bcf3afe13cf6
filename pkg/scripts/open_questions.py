#!/usr/bin/env python3
"""Data for the choices left open: variable-order tie-breaks, the empty
J*J' case of (ii), chain labelings, and new lattice points at d = 4."""

import argparse
import itertools
import time
from collections import Counter

from orderchain.ehrhart import delta_of
from orderchain.polytopes import gamma, lattice_points
from orderchain.poset import Poset, all_posets
from orderchain.toric import build_order, buchberger_verify, generators, initial_monomials


def tie_breaks(d_max):
    same = differ = 0
    for d in range(1, d_max + 1):
        ps = all_posets(d)
        for P, Q in itertools.product(ps, ps):
            G = generators(P, Q)
            oa, ob = build_order(P, Q, "a"), build_order(P, Q, "b")
            assert buchberger_verify(G, oa) and buchberger_verify(G, ob)
            if initial_monomials(G, oa) == initial_monomials(G, ob):
                same += 1
            else:
                differ += 1
    print(f"tie-breaks a/b, d<={d_max}: same initial ideal {same}, different {differ}")


def star_empty(d_max):
    for d in range(1, d_max + 1):
        ps = all_posets(d)
        hits = Counter()
        for Q in ps:
            G = generators(Q, Q)
            hits[sum(g.star_empty for g in G)] += 1
        print(f"(ii) binomials needing y_empty = z, d={d}: {dict(sorted(hits.items()))} (count -> #posets Q)")


def chain_labelings(d_max):
    for d in range(2, d_max + 1):
        P = Poset.chain(range(1, d + 1))
        table = Counter()
        for perm in itertools.permutations(range(1, d + 1)):
            table[delta_of(gamma("oo", P, Poset.chain(perm))).entries] += 1
        print(f"Gamma(O,-O) chains d={d}: " + ", ".join(f"{k}x{v}" for k, v in sorted(table.items())))


def new_points(d):
    ps = all_posets(d)
    start = time.perf_counter()
    bad = 0
    for P, Q in itertools.product(ps, ps):
        poly = gamma("oc", P, Q)
        if lattice_points(poly, 1) != list(poly.generators):
            bad += 1
    print(f"d={d}: {len(ps) ** 2} pairs, {bad} with lattice points beyond the generators "
          f"({time.perf_counter() - start:.0f}s)")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full-d4", action="store_true", help="scan all d=4 pairs for new lattice points")
    args = ap.parse_args()
    tie_breaks(3)
    star_empty(4)
    chain_labelings(4)
    new_points(3)
    if args.full_d4:
        new_points(4)


if __name__ == "__main__":
    main()
