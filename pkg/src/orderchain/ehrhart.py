"""Ehrhart counts, delta-vectors, and the Fano / Gorenstein / normality checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from orderchain.geometry import dual_is_integral, interior_lattice_points
from orderchain.polytopes import LatticePolytope, count_lattice_points, lattice_points


class NonIntegralDelta(ArithmeticError):
    pass


@dataclass(frozen=True)
class EhrhartCounts:
    """``counts[t - 1]`` is the number of lattice points in ``t * P``."""

    d: int
    counts: tuple[int, ...]

    def __post_init__(self):
        seq = (1,) + self.counts
        assert all(a < b for a, b in zip(seq, seq[1:])), "counts must increase"
        if len(self.counts) > self.d + 1:
            diffs = list(seq)
            for _ in range(self.d):
                diffs = [b - a for a, b in zip(diffs, diffs[1:])]
            assert len(set(diffs)) == 1, "counts do not fit a degree-d polynomial"

    def __getitem__(self, t: int) -> int:
        return 1 if t == 0 else self.counts[t - 1]


@dataclass(frozen=True)
class DeltaVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        assert self.entries[0] == 1

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def normalized_volume(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, DeltaVector):
            return self.entries == other.entries
        return self.entries == tuple(other)

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"DeltaVector{self.entries}"


def ehrhart_counts(poly: LatticePolytope, t_max: int | None = None) -> EhrhartCounts:
    t_max = poly.dim if t_max is None else t_max
    if t_max < poly.dim:
        raise ValueError(f"need counts up to t = {poly.dim}")
    counts = tuple(count_lattice_points(poly, t) for t in range(1, t_max + 1))
    return EhrhartCounts(poly.dim, counts)


def delta_vector(counts: EhrhartCounts) -> DeltaVector:
    """Numerator of the Ehrhart series over ``(1 - x)^(d + 1)``.

    ``delta_i = sum_j (-1)^j C(d+1, j) i(i - j)`` with ``i(0) = 1``.
    """
    d = counts.d
    if len(counts.counts) < d:
        raise ValueError(f"need counts for t = 1..{d}")
    delta = []
    for i in range(d + 1):
        delta.append(sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1)))
    if not all(isinstance(x, int) for x in delta):
        raise NonIntegralDelta(delta)
    return DeltaVector(tuple(delta))


def delta_of(poly: LatticePolytope) -> DeltaVector:
    return delta_vector(ehrhart_counts(poly))


def is_fano(poly: LatticePolytope) -> bool:
    """The origin is the only interior lattice point."""
    inner = interior_lattice_points(poly.hrep, poly.bound)
    return inner == [(0,) * poly.dim]


def is_gorenstein_fano(poly: LatticePolytope, check_delta: bool = True) -> bool:
    """Fano with integral dual.

    With ``check_delta`` the answer is cross-checked against symmetry of
    the delta-vector, which is an independent criterion for Fano inputs.
    """
    if not is_fano(poly):
        return False
    integral = dual_is_integral(poly.hrep)
    if check_delta:
        symmetric = delta_of(poly).is_symmetric()
        assert symmetric == integral, (
            f"{poly}: dual integral={integral} but delta symmetric={symmetric}"
        )
    return integral


def sumset(a: set, b: set) -> set:
    return {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}


def normality_failures(poly: LatticePolytope, n_max: int = 3) -> dict[int, list]:
    """Lattice points of ``N * poly`` that are not sums of ``N`` lattice points."""
    base = set(lattice_points(poly, 1))
    sums = set(base)
    failures = {}
    for n in range(2, n_max + 1):
        sums = sumset(sums, base)
        missing = [p for p in lattice_points(poly, n) if p not in sums]
        if missing:
            failures[n] = missing
    return failures


def is_normal_up_to(poly: LatticePolytope, n_max: int = 3) -> bool:
    """Finite-prefix check of the integer decomposition property."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return not normality_failures(poly, n_max)
