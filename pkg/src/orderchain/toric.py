"""Toric ideal of Gamma(O(P), -C(Q)) and its quadratic binomial generators.

Variables are ``x_I`` for nonempty ideals ``I`` of ``P``, ``y_A`` for
nonempty antichains ``A = max(J)`` of ``Q``, and ``z``.  A monomial is a
sorted tuple of :class:`Variable` (a multiset); once an order is fixed it is
encoded as a sorted tuple of variable *positions* in that order, smallest
first.  For monomials of equal degree, the reverse lexicographic comparison
is then plain tuple comparison: at the first position where two sorted
encodings differ, the one holding the larger index lacks the smaller
variable and is therefore the larger monomial.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from orderchain.polytopes import SizeMismatch, order_points, chain_points
from orderchain.poset import Poset, star_mask


@dataclass(frozen=True, order=True)
class Variable:
    kind: str  # "x", "y" or "z"
    mask: int = 0

    def __post_init__(self):
        if self.kind not in ("x", "y", "z"):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if (self.kind == "z") != (self.mask == 0):
            raise ValueError("x/y variables need a nonempty set, z has none")

    def name(self) -> str:
        if self.kind == "z":
            return "z"
        elems = [str(i + 1) for i in range(self.mask.bit_length()) if self.mask >> i & 1]
        return f"{self.kind}_{{{','.join(elems)}}}"

    def __repr__(self) -> str:
        return self.name()


Z = Variable("z")

Monomial = tuple[Variable, ...]


def x_var(mask: int) -> Variable:
    return Variable("x", mask) if mask else Z


def y_var(mask: int) -> Variable:
    return Variable("y", mask) if mask else Z


def monomial(*variables: Variable) -> Monomial:
    return tuple(sorted(variables))


def monomial_name(m: Monomial) -> str:
    parts = []
    for v, e in sorted(Counter(m).items()):
        parts.append(v.name() + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class Binomial:
    """``first - second`` where ``first`` is meant to be the leading term."""

    first: Monomial
    second: Monomial
    kind: str = field(default="", compare=False)
    # (ii) with J * J' empty, so the z substitution was needed
    star_empty: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.first == self.second:
            raise ValueError("binomial with identical terms")
        if len(self.first) != len(self.second):
            raise ValueError("binomial is not homogeneous")

    def swapped(self) -> Binomial:
        return Binomial(self.second, self.first, self.kind, self.star_empty)

    def __str__(self) -> str:
        return f"{monomial_name(self.first)} - {monomial_name(self.second)}"


def pi_degree(m: Monomial, d: int) -> tuple[int, ...]:
    """Exponent vector of the image in ``t_1..t_d, s``."""
    out = [0] * (d + 1)
    for v in m:
        sign = {"x": 1, "y": -1, "z": 0}[v.kind]
        for i in range(d):
            if v.mask >> i & 1:
                out[i] += sign
        out[d] += 1
    return tuple(out)


class MonomialOrder:
    """Graded reverse lexicographic order from a linear order of variables.

    ``variables`` is listed from smallest to largest.
    """

    def __init__(self, variables: Sequence[Variable], d: int):
        self.variables = tuple(variables)
        self.d = d
        self.index = {v: k for k, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise ValueError("duplicate variable")

    def encode(self, m: Monomial) -> tuple[int, ...]:
        return tuple(sorted(self.index[v] for v in m))

    def decode(self, code: Iterable[int]) -> Monomial:
        return monomial(*(self.variables[k] for k in code))

    def key(self, m: Monomial):
        code = self.encode(m)
        return (len(code), code)

    def greater(self, m1: Monomial, m2: Monomial) -> bool:
        return self.key(m1) > self.key(m2)

    def leading(self, b: Binomial) -> Monomial:
        return b.first if self.greater(b.first, b.second) else b.second

    def names(self) -> list[str]:
        return [v.name() for v in self.variables]


def build_order(P: Poset, Q: Poset, tie_break: str = "a") -> MonomialOrder:
    """``z`` < all ``y`` < all ``x``; within a block, by ideal size then mask.

    Tie-break ``"a"`` takes masks ascending, ``"b"`` descending.  Either way
    a strictly smaller ideal gets a strictly smaller variable.
    """
    if P.size != Q.size:
        raise SizeMismatch(f"|P| = {P.size} but |Q| = {Q.size}")
    if tie_break not in ("a", "b"):
        raise ValueError("tie_break must be 'a' or 'b'")
    sign = 1 if tie_break == "a" else -1

    def rank(mask: int):
        return (mask.bit_count(), sign * mask)

    y_ideals = sorted((J for J in Q.ideal_masks if J), key=rank)
    x_ideals = sorted((I for I in P.ideal_masks if I), key=rank)
    variables = [Z] + [y_var(Q.max_mask(J)) for J in y_ideals] + [x_var(I) for I in x_ideals]
    return MonomialOrder(variables, P.size)


def generators(P: Poset, Q: Poset) -> list[Binomial]:
    """The binomials (i), (ii), (iii), deduplicated, in a fixed order."""
    if P.size != Q.size:
        raise SizeMismatch(f"|P| = {P.size} but |Q| = {Q.size}")
    out: dict[tuple, Binomial] = {}

    def add(b: Binomial):
        out.setdefault((b.first, b.second), b)

    def incomparable(a: int, b: int) -> bool:
        return a & b != a and a & b != b

    for I, I2 in itertools.combinations(P.ideal_masks, 2):
        if incomparable(I, I2):
            add(Binomial(
                monomial(x_var(I), x_var(I2)),
                monomial(x_var(I | I2), x_var(I & I2)),
                "i",
            ))
    for J, J2 in itertools.combinations(Q.ideal_masks, 2):
        if incomparable(J, J2):
            star = star_mask(Q, J, J2)
            add(Binomial(
                monomial(y_var(Q.max_mask(J)), y_var(Q.max_mask(J2))),
                monomial(y_var(Q.max_mask(J | J2)), y_var(Q.max_mask(star))),
                "ii",
                star_empty=star == 0,
            ))
    for I in P.ideal_masks:
        top_p = P.max_mask(I)
        for J in Q.ideal_masks:
            A = Q.max_mask(J)
            for i in range(P.size):
                bit = 1 << i
                if top_p & bit and A & bit:
                    add(Binomial(
                        monomial(x_var(I), y_var(A)),
                        monomial(x_var(I ^ bit), y_var(A ^ bit)),
                        "iii",
                    ))
    return list(out.values())


def corrupt(G: Sequence[Binomial], mode: str = "swap", which: int = 0) -> list[Binomial]:
    """Deliberately broken copies of ``G`` for negative controls.

    ``swap`` exchanges the terms of one binomial, ``drop`` removes it.
    """
    G = list(G)
    if mode == "swap":
        G[which] = G[which].swapped()
    elif mode == "drop":
        del G[which]
    else:
        raise ValueError(f"unknown corruption mode {mode!r}")
    return G


# ----------------------------------------------------------------------
# division and Buchberger's criterion


def _divides(lead: tuple[int, ...], code: tuple[int, ...]) -> bool:
    if len(lead) == 2:
        a, b = lead
        if a == b:
            return code.count(a) >= 2
        return a in code and b in code
    return not Counter(lead) - Counter(code)


def _quotient(code: tuple[int, ...], lead: tuple[int, ...]) -> list[int]:
    rest = list(code)
    for v in lead:
        rest.remove(v)
    return rest


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((Counter(a) | Counter(b)).elements()))


class Reducer:
    """Normal forms of monomials modulo a binomial set.

    Each binomial is used as the rewrite rule ``first -> second``.  Because
    all coefficients are +-1, a monomial reduces to a single monomial, and
    ``u - v`` reduces to zero exactly when both terms share a normal form.
    """

    def __init__(self, G: Sequence[Binomial], order: MonomialOrder):
        if not G:
            raise ValueError("empty generator set")
        self.order = order
        self.rules = [(order.encode(g.first), order.encode(g.second)) for g in G]
        self.by_var: dict[int, list[int]] = {}
        for k, (lead, _) in enumerate(self.rules):
            for v in sorted(set(lead)):
                self.by_var.setdefault(v, []).append(k)
        self._cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self.steps = 0

    def find(self, code: tuple[int, ...]) -> int | None:
        for v in sorted(set(code)):
            for k in self.by_var.get(v, ()):
                if _divides(self.rules[k][0], code):
                    return k
        return None

    def normal_form(self, code: tuple[int, ...]) -> tuple[int, ...]:
        seen = []
        while code not in self._cache:
            k = self.find(code)
            if k is None:
                self._cache[code] = code
                break
            seen.append(code)
            lead, tail = self.rules[k]
            code = tuple(sorted(_quotient(code, lead) + list(tail)))
            self.steps += 1
            if len(seen) > 100_000:
                raise RuntimeError("reduction does not terminate; is the order respected?")
        nf = self._cache[code]
        for c in seen:
            self._cache[c] = nf
        return nf


def reduce(f: Monomial | Binomial, G: Sequence[Binomial], order: MonomialOrder):
    """Normal form modulo ``G``.

    A monomial maps to a monomial.  A binomial maps to ``None`` when it
    reduces to zero, else to the binomial of the two normal forms.
    """
    red = Reducer(G, order)
    if isinstance(f, Binomial):
        a = red.normal_form(order.encode(f.first))
        b = red.normal_form(order.encode(f.second))
        if a == b:
            return None
        hi, lo = (a, b) if (len(a), a) > (len(b), b) else (b, a)
        return Binomial(order.decode(hi), order.decode(lo))
    return order.decode(red.normal_form(order.encode(f)))


@dataclass
class BuchbergerReport:
    generators: int
    pairs: int = 0
    coprime_skipped: int = 0
    reduced: int = 0
    failures: list = field(default_factory=list)
    misordered: list = field(default_factory=list)
    outside_kernel: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.failures or self.misordered or self.outside_kernel)

    def summary(self) -> dict:
        return {
            "generators": self.generators,
            "s_pairs": self.pairs,
            "coprime_skipped": self.coprime_skipped,
            "reduced_to_zero": self.reduced - len(self.failures),
            "failures": [str(f) for f in self.failures[:10]],
            "misordered": [str(b) for b in self.misordered[:10]],
            "outside_kernel": [str(b) for b in self.outside_kernel[:10]],
        }


def buchberger_check(
    G: Sequence[Binomial], order: MonomialOrder, stop_early: bool = False
) -> BuchbergerReport:
    """Check that every S-pair of ``G`` reduces to zero.

    Leading terms are the designated first monomials; a binomial whose first
    monomial is not the larger one, or which leaves the kernel of the
    monomial map, is reported and fails the check.
    """
    rep = BuchbergerReport(len(G))
    for g in G:
        if pi_degree(g.first, order.d) != pi_degree(g.second, order.d):
            rep.outside_kernel.append(g)
        if not order.greater(g.first, g.second):
            rep.misordered.append(g)
    if not rep.ok:
        return rep
    red = Reducer(G, order)
    rules = red.rules
    for a in range(len(rules)):
        la, ta = rules[a]
        for b in range(a + 1, len(rules)):
            lb, tb = rules[b]
            rep.pairs += 1
            if not set(la) & set(lb):
                rep.coprime_skipped += 1
                continue
            L = _lcm(la, lb)
            u = tuple(sorted(_quotient(L, la) + list(ta)))
            v = tuple(sorted(_quotient(L, lb) + list(tb)))
            rep.reduced += 1
            if u == v:
                continue
            nu, nv = red.normal_form(u), red.normal_form(v)
            if nu != nv:
                rep.failures.append(
                    Binomial(order.decode(max(nu, nv)), order.decode(min(nu, nv)), "S")
                )
                if stop_early:
                    return rep
    return rep


def buchberger_verify(G: Sequence[Binomial], order: MonomialOrder) -> bool:
    return buchberger_check(G, order, stop_early=True).ok


def initial_ideal_profile(G: Sequence[Binomial], order: MonomialOrder) -> dict[str, bool]:
    leads = [order.leading(g) for g in G]
    return {
        "quadratic": all(len(m) == 2 for m in leads),
        "squarefree": all(len(set(m)) == len(m) for m in leads),
        "z_free": all(Z not in m for m in leads),
    }


def initial_monomials(G: Sequence[Binomial], order: MonomialOrder) -> set[Monomial]:
    return {order.leading(g) for g in G}


# ----------------------------------------------------------------------
# Hilbert function cross-checks


def standard_monomial_count(G: Sequence[Binomial], order: MonomialOrder, n: int) -> int:
    """Degree-``n`` monomials divisible by no initial monomial of ``G``."""
    leads = {order.encode(order.leading(g)) for g in G}
    count = 0
    for code in itertools.combinations_with_replacement(range(len(order.variables)), n):
        if not any(_divides(l, code) for l in leads):
            count += 1
    return count


def pi_vectors(P: Poset, Q: Poset) -> list[tuple[int, ...]]:
    """Images of the variables, computed straight from the point sets."""
    vecs = {p + (1,) for p in order_points(P)}
    vecs |= {tuple(-x for x in p) + (1,) for p in chain_points(Q)}
    return sorted(vecs)


def hilbert_oracle(P: Poset, Q: Poset, n: int) -> int:
    """Number of distinct sums of ``n`` variable images."""
    if P.size != Q.size:
        raise SizeMismatch(f"|P| = {P.size} but |Q| = {Q.size}")
    gens = pi_vectors(P, Q)
    frontier = {(0,) * (P.size + 1)}
    for _ in range(n):
        frontier = {tuple(a + b for a, b in zip(f, g)) for f in frontier for g in gens}
    return len(frontier)


def diagnostics(
    P: Poset, Q: Poset, order: MonomialOrder, G: Sequence[Binomial], report: BuchbergerReport
) -> dict:
    return {
        "variables": order.names(),
        "binomials": [
            {
                "first": monomial_name(g.first),
                "second": monomial_name(g.second),
                "type": g.kind,
                **({"star_empty": True} if g.star_empty else {}),
            }
            for g in G
        ],
        "s_pairs": report.summary(),
    }
