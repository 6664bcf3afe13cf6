#!/usr/bin/env python3
"""Print the delta-vectors of the two worked examples."""

import itertools
from math import comb

from orderchain.ehrhart import delta_of, is_gorenstein_fano
from orderchain.polytopes import gamma
from orderchain.poset import Poset


def main():
    print("Example 2: P = {1<3, 2<4}")
    P = Poset(4, [(1, 3), (2, 4)])
    for covers in ([(1, 3), (2, 4)], [(1, 2), (3, 4)], [(1, 4), (2, 3)]):
        Q = Poset(4, covers)
        print(f"  Q = {Q.label():12s} delta = {list(delta_of(gamma('oc', P, Q)))}")

    print("\nExample 1: chains, Gamma(O(P), -C(Q)) for every labeling of Q")
    for d in range(1, 6):
        P = Poset.chain(range(1, d + 1))
        deltas = {
            delta_of(gamma("oc", P, Poset.chain(perm))).entries
            for perm in itertools.permutations(range(1, d + 1))
        }
        binom = tuple(comb(d, i) for i in range(d + 1))
        print(f"  d={d}: {sorted(deltas)}  binomial={deltas == {binom}}")

    print("\nGamma(O(P), -O(Q)) for P = 1<...<d and Q the opposite chain")
    for d in range(1, 6):
        P = Poset.chain(range(1, d + 1))
        R = Poset.chain(range(d, 0, -1))
        poly = gamma("oo", P, R)
        print(f"  d={d}: delta = {list(delta_of(poly))}  gorenstein fano = {is_gorenstein_fano(poly)}")


if __name__ == "__main__":
    main()
