"""Point configurations of order, chain, and combined polytopes."""

from __future__ import annotations

import enum
import threading
from typing import Iterable, Sequence

import numpy as np

from orderchain.geometry import HRep, Point, box_points, hull_hrep, points_in
from orderchain.poset import Poset, Subset


class SizeMismatch(ValueError):
    pass


class GammaKind(enum.Enum):
    ORDER_MINUS_CHAIN = "oc"
    ORDER_MINUS_ORDER = "oo"
    CHAIN_MINUS_CHAIN = "cc"
    ORDER_ALONE = "o"
    CHAIN_ALONE = "c"

    @classmethod
    def parse(cls, value: str | GammaKind) -> GammaKind:
        return value if isinstance(value, cls) else cls(value)


class LatticePolytope:
    """Convex hull of a fixed set of integer generators.

    The facet description is computed on first use and cached; dilations
    reuse it with scaled right-hand sides.
    """

    def __init__(self, generators: Iterable[Sequence[int]], name: str = ""):
        gens = sorted({tuple(int(x) for x in g) for g in generators})
        if not gens:
            raise ValueError("empty generator set")
        self.dim = len(gens[0])
        self.generators: tuple[Point, ...] = tuple(gens)
        self.name = name
        self._hrep: HRep | None = None
        self._lock = threading.Lock()

    @property
    def hrep(self) -> HRep:
        if self._hrep is None:
            with self._lock:
                if self._hrep is None:
                    self._hrep = hull_hrep(self.generators)
        return self._hrep

    @property
    def bound(self) -> int:
        """Largest absolute coordinate among the generators."""
        return max(abs(x) for g in self.generators for x in g)

    def lattice_points(self, t: int = 1) -> list[Point]:
        return lattice_points(self, t)

    def __repr__(self) -> str:
        label = self.name or "LatticePolytope"
        return f"<{label} dim={self.dim} generators={len(self.generators)}>"


def rho(S: Subset) -> Point:
    """0/1 indicator vector of a subset."""
    return tuple((S.mask >> i) & 1 for i in range(S.size))


def _rho_mask(mask: int, d: int) -> Point:
    return tuple((mask >> i) & 1 for i in range(d))


def order_points(P: Poset) -> list[Point]:
    return [_rho_mask(m, P.size) for m in P.ideal_masks]


def chain_points(Q: Poset) -> list[Point]:
    return [_rho_mask(m, Q.size) for m in Q.antichain_masks]


def order_polytope(P: Poset) -> LatticePolytope:
    return LatticePolytope(order_points(P), name=f"O({P.label()})")


def chain_polytope(Q: Poset) -> LatticePolytope:
    return LatticePolytope(chain_points(Q), name=f"C({Q.label()})")


def _neg(points: Iterable[Point]) -> list[Point]:
    return [tuple(-x for x in p) for p in points]


def gamma(kind: GammaKind | str, P: Poset, Q: Poset) -> LatticePolytope:
    """Convex hull of the first factor and the negated second factor.

    For ``ORDER_ALONE``/``CHAIN_ALONE`` only ``P`` is used.
    """
    kind = GammaKind.parse(kind)
    if kind is GammaKind.ORDER_ALONE:
        return order_polytope(P)
    if kind is GammaKind.CHAIN_ALONE:
        return chain_polytope(P)
    if P.size != Q.size:
        raise SizeMismatch(f"|P| = {P.size} but |Q| = {Q.size}")
    first, second = {
        GammaKind.ORDER_MINUS_CHAIN: (order_points(P), chain_points(Q)),
        GammaKind.ORDER_MINUS_ORDER: (order_points(P), order_points(Q)),
        GammaKind.CHAIN_MINUS_CHAIN: (chain_points(P), chain_points(Q)),
    }[kind]
    name = {"oc": "Gamma(O(P),-C(Q))", "oo": "Gamma(O(P),-O(Q))", "cc": "Gamma(C(P),-C(Q))"}
    return LatticePolytope(first + _neg(second), name=name[kind.value])


def lattice_points(poly: LatticePolytope, t: int = 1) -> list[Point]:
    """Integer points of ``t * poly``, sorted."""
    if t < 1:
        raise ValueError("dilation factor must be positive")
    h = poly.hrep.scaled(t)
    return points_in(h, box_points(poly.dim, t * poly.bound))


def count_lattice_points(poly: LatticePolytope, t: int = 1) -> int:
    h = poly.hrep.scaled(t)
    cand = box_points(poly.dim, t * poly.bound)
    return int(np.count_nonzero((cand @ h.normals.T <= h.rhs).all(axis=1)))
