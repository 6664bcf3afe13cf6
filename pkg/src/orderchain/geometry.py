"""Exact polyhedral kernel.

Facets of ``conv(points)`` are computed with the double description method
over Python integers: the valid inequalities ``a.x <= b`` form the cone
``{(a, b) : a.v - b <= 0 for all v}``, whose extreme rays (other than the
trivial ``0 <= 1``) are the facets.  Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Point = tuple[int, ...]


class NotFullDimensional(ValueError):
    pass


class OriginNotInterior(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HalfSpace:
    """``normal . x <= rhs`` with a primitive integer normal."""

    normal: tuple[int, ...]
    rhs: int

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("zero normal")
        if math.gcd(*self.normal) != 1:
            raise ValueError(f"normal {self.normal} is not primitive")

    def value(self, p: Sequence) -> int | Fraction:
        return sum(a * x for a, x in zip(self.normal, p))

    def __str__(self) -> str:
        terms = " ".join(f"{a:+d}*x{i + 1}" for i, a in enumerate(self.normal) if a)
        return f"{terms} <= {self.rhs}"


@dataclass(frozen=True)
class HRep:
    dim: int
    facets: tuple[HalfSpace, ...]

    def scaled(self, t: int) -> HRep:
        """H-representation of the dilation ``t * P``."""
        return HRep(self.dim, tuple(HalfSpace(f.normal, f.rhs * t) for f in self.facets))

    @property
    def normals(self) -> np.ndarray:
        return np.array([f.normal for f in self.facets], dtype=np.int64)

    @property
    def rhs(self) -> np.ndarray:
        return np.array([f.rhs for f in self.facets], dtype=np.int64)


# ----------------------------------------------------------------------
# exact linear algebra helpers


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f, g = m[r][c], m[i][c]
                m[i] = [f * x - g * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span."""
    if not points:
        return -1
    base = points[0]
    return rank([[x - y for x, y in zip(p, base)] for p in points[1:]])


def _solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(A)
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


# ----------------------------------------------------------------------
# hull


def _independent_rows(rows: list[tuple[int, ...]], n: int) -> list[int]:
    chosen: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in chosen] + [rows[i]]) > len(chosen):
            chosen.append(i)
            if len(chosen) == n:
                break
    return chosen


def hull_hrep(points: Iterable[Sequence[int]]) -> HRep:
    """Irredundant facet description of the convex hull of integer points."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise NotFullDimensional("no points")
    d = len(pts[0])
    if affine_rank(pts) < d:
        raise NotFullDimensional(f"points span less than dimension {d}")

    # constraint rows (v, -1) . (a, b) <= 0
    rows = [p + (-1,) for p in pts]
    n = d + 1
    start = _independent_rows(rows, n)

    # initial cone A_K y <= 0 has rays -A_K^{-1} columns
    A = [[Fraction(x) for x in rows[i]] for i in start]
    rays: list[tuple[int, ...]] = []
    for k in range(n):
        e = [Fraction(-1 if i == k else 0) for i in range(n)]
        sol = _solve(A, e)
        lcm = math.lcm(*(x.denominator for x in sol))
        rays.append(_primitive([int(x * lcm) for x in sol]))

    processed = list(start)
    for idx in range(len(rows)):
        if idx in start:
            continue
        row = rows[idx]
        vals = [sum(a * y for a, y in zip(row, r)) for r in rays]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        pos = [k for k, v in enumerate(vals) if v > 0]
        if not pos:
            processed.append(idx)
            continue
        tight = [
            frozenset(j for j in processed if sum(a * y for a, y in zip(rows[j], r)) == 0)
            for r in rays
        ]
        new_rays = [rays[k] for k in neg + zero]
        for i in pos:
            for j in neg:
                common = tight[i] & tight[j]
                if len(common) < n - 2:
                    continue
                # combinatorial adjacency test
                if any(
                    k != i and k != j and common <= tight[k] for k in range(len(rays))
                ):
                    continue
                ri, rj = rays[i], rays[j]
                vi, vj = vals[i], vals[j]
                new_rays.append(_primitive([vi * b - vj * a for a, b in zip(ri, rj)]))
        rays = new_rays
        processed.append(idx)

    facets = []
    for r in rays:
        normal, b = r[:d], r[d]
        if not any(normal):
            continue
        g = math.gcd(*normal)
        assert b % g == 0, "facet of a lattice polytope has integral rhs"
        facets.append(HalfSpace(tuple(x // g for x in normal), b // g))
    facets = sorted(set(facets))
    return HRep(d, tuple(facets))


def facet_witnesses(h: HRep, points: Sequence[Sequence[int]]) -> list[list[Point]]:
    """Input points tight at each facet."""
    return [[tuple(p) for p in points if f.value(p) == f.rhs] for f in h.facets]


def check_facets(h: HRep, points: Sequence[Sequence[int]]) -> None:
    """Assert validity and irredundancy of ``h`` against its input points."""
    for f, tight in zip(h.facets, facet_witnesses(h, points)):
        assert all(f.value(p) <= f.rhs for p in points), f"{f} cuts off an input point"
        assert affine_rank(tight) == h.dim - 1, f"{f} is not a facet"


# ----------------------------------------------------------------------
# membership


def contains(h: HRep, p: Sequence) -> bool:
    return all(f.value(p) <= f.rhs for f in h.facets)


def strictly_contains(h: HRep, p: Sequence) -> bool:
    return all(f.value(p) < f.rhs for f in h.facets)


def box_points(dim: int, box: int) -> np.ndarray:
    """All integer points of ``[-box, box]^dim`` as rows, lexicographic."""
    axis = np.arange(-box, box + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def points_in(h: HRep, candidates: np.ndarray, strict: bool = False) -> list[Point]:
    if len(candidates) == 0:
        return []
    vals = candidates @ h.normals.T
    ok = (vals < h.rhs) if strict else (vals <= h.rhs)
    return [tuple(int(x) for x in row) for row in candidates[ok.all(axis=1)]]


def interior_lattice_points(h: HRep, box: int) -> list[Point]:
    return points_in(h, box_points(h.dim, box), strict=True)


def dual_is_integral(h: HRep) -> bool:
    """True iff every facet reads ``normal . x <= 1`` with primitive normal.

    The dual polytope then has the integral vertices ``normal / rhs``.
    """
    origin = (0,) * h.dim
    if not strictly_contains(h, origin):
        raise OriginNotInterior("the origin is not an interior point")
    return all(f.rhs == 1 for f in h.facets)


# ----------------------------------------------------------------------
# independent membership oracle


def lp_feasible(points: Sequence[Sequence[int]], p: Sequence) -> bool:
    """Decide ``p in conv(points)`` by exact phase-one simplex.

    Solves ``V lam = p, sum(lam) = 1, lam >= 0`` with artificial variables
    and Bland's rule; feasible iff the artificial objective reaches zero.
    Shares no code with :func:`hull_hrep`.
    """
    V = [list(v) for v in points]
    n = len(V)
    m = len(p) + 1
    A = [[Fraction(V[j][i]) for j in range(n)] for i in range(len(p))]
    A.append([Fraction(1)] * n)
    b = [Fraction(x) for x in p] + [Fraction(1)]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # tableau columns: n structural + m artificial
    T = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    ncols = n + m
    while True:
        # reduced costs of minimizing the artificial sum
        cost = [Fraction(0)] * ncols
        for j in range(ncols):
            cost[j] = (1 if j >= n else 0) - sum(
                T[i][j] for i in range(m) if basis[i] >= n
            )
        enter = next((j for j in range(ncols) if cost[j] < 0 and j not in basis), None)
        if enter is None:
            break
        ratios = [
            (T[i][-1] / T[i][enter], basis[i], i) for i in range(m) if T[i][enter] > 0
        ]
        if not ratios:
            break
        _, _, leave = min(ratios)
        pv = T[leave][enter]
        T[leave] = [x / pv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        basis[leave] = enter
    return sum(T[i][-1] for i in range(m) if basis[i] >= n) == 0

