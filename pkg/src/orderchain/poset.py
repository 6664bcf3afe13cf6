"""Finite labeled posets, their ideals and antichains.

Elements are the integers ``1..d``.  Subsets are carried as ``d``-bit masks
where bit ``i - 1`` stands for element ``i``; ideals and antichains are thin
frozen wrappers around such a mask so they stay hashable and cheap.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class CycleError(ValueError):
    """The closure of the declared covers is not antisymmetric."""


@dataclass(frozen=True)
class Subset:
    """A subset of a poset of a given size, as a bitmask."""

    size: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.size:
            raise ValueError(f"mask {self.mask:#b} has bits outside 1..{self.size}")

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.size) if self.mask >> i & 1)

    def __contains__(self, element: int) -> bool:
        return bool(self.mask >> (element - 1) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({{{', '.join(map(str, self.elements))}}})"


class IdealSet(Subset):
    """Down-closed subset."""


class AntichainSet(Subset):
    """Subset of pairwise incomparable elements."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A partial order on ``{1, ..., d}`` given by its cover relations.

    The order is stored as two bitmask tables: ``down[i]`` is the set of
    elements ``<= i`` and ``up[i]`` the set of elements ``>= i`` (0-based
    row index, element ``i + 1``).
    """

    def __init__(self, size: int, covers: Iterable[tuple[int, int]] = ()):
        if size < 1:
            raise ValueError("a poset needs at least one element")
        self.size = size
        self.covers = tuple(sorted({(int(a), int(b)) for a, b in covers}))
        down = [1 << i for i in range(size)]
        for a, b in self.covers:
            for e in (a, b):
                if not 1 <= e <= size:
                    raise IndexError(f"element {e} outside 1..{size}")
            if a == b:
                raise CycleError(f"cover ({a}, {b}) relates an element to itself")
            down[b - 1] |= 1 << (a - 1)
        # Warshall on bitmasks
        for k in range(size):
            bit = 1 << k
            for i in range(size):
                if down[i] & bit:
                    down[i] |= down[k]
        for i in range(size):
            for j in _bits(down[i]):
                if j != i and down[j] >> i & 1:
                    raise CycleError(f"elements {i + 1} and {j + 1} lie on a cycle")
        self.down = tuple(down)
        self.up = tuple(
            sum(1 << j for j in range(size) if down[j] >> i & 1) for i in range(size)
        )
        self._check_order()

    def _check_order(self) -> None:
        full = (1 << self.size) - 1
        for i in range(self.size):
            assert self.down[i] >> i & 1, "not reflexive"
            for j in _bits(self.down[i]):
                assert self.down[j] | self.down[i] == self.down[i], "not transitive"
                if j != i:
                    assert not self.down[j] >> i & 1, "not antisymmetric"
            assert self.down[i] & ~full == 0

    @classmethod
    def from_covers(cls, d: int, covers: Iterable[Sequence[int]]) -> Poset:
        return cls(d, [tuple(c) for c in covers])

    @classmethod
    def chain(cls, order: Sequence[int]) -> Poset:
        """Chain ``order[0] < order[1] < ...``."""
        return cls(len(order), zip(order, order[1:]))

    @classmethod
    def antichain(cls, d: int) -> Poset:
        return cls(d, [])

    @classmethod
    def from_json(cls, data: dict | str | Path) -> Poset:
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        if not isinstance(data, dict) or "size" not in data:
            raise ValueError('poset JSON must be an object with "size" and "covers"')
        return cls(int(data["size"]), [tuple(c) for c in data.get("covers", [])])

    def to_json(self) -> dict:
        return {"size": self.size, "covers": [list(c) for c in self.hasse()]}

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b - 1] >> (a - 1) & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def hasse(self) -> list[tuple[int, int]]:
        """Cover relations of the closure, i.e. the transitive reduction."""
        out = []
        for b in range(self.size):
            below = self.down[b] & ~(1 << b)
            for a in _bits(below):
                strictly_between = below & self.up[a] & ~(1 << a)
                if not strictly_between:
                    out.append((a + 1, b + 1))
        return sorted(out)

    def label(self) -> str:
        """Compact text form used in sweep tables, e.g. ``4:1<3,2<4``."""
        return f"{self.size}:" + ",".join(f"{a}<{b}" for a, b in self.hasse())

    def relabel(self, perm: Sequence[int]) -> Poset:
        """Image under ``i -> perm[i - 1]``."""
        return Poset(self.size, [(perm[a - 1], perm[b - 1]) for a, b in self.covers])

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.down == other.down

    def __hash__(self) -> int:
        return hash(self.down)

    def __repr__(self) -> str:
        return f"Poset({self.label()})"

    # subsets -----------------------------------------------------------

    def is_ideal(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in _bits(mask))

    def is_antichain(self, mask: int) -> bool:
        return all(self.down[i] & mask == 1 << i for i in _bits(mask))

    def ideal(self, mask: int) -> IdealSet:
        if not self.is_ideal(mask):
            raise ValueError(f"{mask:#b} is not down-closed")
        return IdealSet(self.size, mask)

    def antichain_set(self, mask: int) -> AntichainSet:
        if not self.is_antichain(mask):
            raise ValueError(f"{mask:#b} is not an antichain")
        return AntichainSet(self.size, mask)

    def _masks(self, keep) -> list[int]:
        # grow ideals/antichains one element at a time; the filter is
        # hereditary enough for both families that pruning stays exact
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(self.size):
                    m2 = m | 1 << i
                    if m2 != m and m2 not in found and keep(m2):
                        found.add(m2)
                        nxt.append(m2)
            frontier = nxt
        return sorted(found, key=lambda m: (m.bit_count(), m))

    @cached_property
    def ideal_masks(self) -> tuple[int, ...]:
        return tuple(self._masks(self.is_ideal))

    @cached_property
    def antichain_masks(self) -> tuple[int, ...]:
        return tuple(self._masks(self.is_antichain))

    def down_closure(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.down[i]
        return out

    def max_mask(self, mask: int) -> int:
        """Elements of ``mask`` that are maximal inside ``mask``."""
        return sum(1 << i for i in _bits(mask) if self.up[i] & mask == 1 << i)


# ----------------------------------------------------------------------
# module-level operations


def from_covers(d: int, covers: Iterable[Sequence[int]]) -> Poset:
    return Poset.from_covers(d, covers)


def ideals(P: Poset) -> list[IdealSet]:
    """All poset ideals, ordered by cardinality then mask."""
    return [IdealSet(P.size, m) for m in P.ideal_masks]


def antichains(Q: Poset) -> list[AntichainSet]:
    """All antichains, ordered by cardinality then mask."""
    return [AntichainSet(Q.size, m) for m in Q.antichain_masks]


def max_elements(P: Poset, I: IdealSet) -> AntichainSet:
    return AntichainSet(P.size, P.max_mask(I.mask))


def ideal_from_antichain(P: Poset, A: AntichainSet) -> IdealSet:
    return IdealSet(P.size, P.down_closure(A.mask))


def union(P: Poset, I: IdealSet, I2: IdealSet) -> IdealSet:
    return P.ideal(I.mask | I2.mask)


def intersection(P: Poset, I: IdealSet, I2: IdealSet) -> IdealSet:
    return P.ideal(I.mask & I2.mask)


def star_mask(P: Poset, J: int, J2: int) -> int:
    generators = P.max_mask(J & J2) & (P.max_mask(J) | P.max_mask(J2))
    return P.down_closure(generators)


def star_product(P: Poset, J: IdealSet, J2: IdealSet) -> IdealSet:
    """Ideal generated by ``max(J & J2) & (max(J) | max(J2))``."""
    return P.ideal(star_mask(P, J.mask, J2.mask))


def is_linear_extension(P: Poset, order: Sequence[int]) -> bool:
    pos = {e: k for k, e in enumerate(order)}
    return all(pos[a] < pos[b] for a, b in P.covers)


def common_linear_extension(P: Poset, Q: Poset) -> tuple[int, ...] | None:
    """First permutation (lexicographically) extending both orders, if any."""
    if P.size != Q.size:
        raise ValueError("posets of different sizes")
    for perm in itertools.permutations(range(1, P.size + 1)):
        if is_linear_extension(P, perm) and is_linear_extension(Q, perm):
            return perm
    return None


def all_posets(d: int) -> list[Poset]:
    """Every labeled poset on ``{1..d}``, in a fixed order.

    Brute force over strict relations, keeping the transitive and
    antisymmetric ones; practical for ``d <= 4`` (5 takes a while).
    """
    pairs = [(a, b) for a in range(d) for b in range(d) if a != b]
    out = []
    for bits in range(1 << len(pairs)):
        down = [1 << i for i in range(d)]
        for k, (a, b) in enumerate(pairs):
            if bits >> k & 1:
                down[b] |= 1 << a
        ok = True
        for b in range(d):
            for a in _bits(down[b]):
                if a != b and (down[a] >> b & 1 or down[a] & ~down[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Poset(d, [(a + 1, b + 1) for (a, b) in pairs if down[b] >> a & 1]))
    return out
