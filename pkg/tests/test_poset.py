import itertools

import pytest
from hypothesis import given

from orderchain.poset import (
    AntichainSet,
    CycleError,
    IdealSet,
    Poset,
    all_posets,
    antichains,
    common_linear_extension,
    from_covers,
    ideal_from_antichain,
    ideals,
    intersection,
    max_elements,
    star_product,
    union,
)

from conftest import posets


def brute_ideals(P):
    d = P.size
    out = []
    for mask in range(1 << d):
        members = [i + 1 for i in range(d) if mask >> i & 1]
        if all(j in members for i in members for j in range(1, d + 1) if P.leq(j, i)):
            out.append(mask)
    return out


def brute_antichains(P):
    d = P.size
    out = []
    for mask in range(1 << d):
        members = [i + 1 for i in range(d) if mask >> i & 1]
        if all(not P.comparable(a, b) for a, b in itertools.combinations(members, 2)):
            out.append(mask)
    return out


def S(P, *elems):
    return sum(1 << (e - 1) for e in elems)


def test_from_covers_antichain():
    P = from_covers(2, [])
    assert not P.leq(1, 2) and not P.leq(2, 1)
    assert P.leq(1, 1) and P.leq(2, 2)


def test_from_covers_example2():
    P = from_covers(4, [(1, 3), (2, 4)])
    assert P.leq(1, 3) and P.leq(2, 4)
    assert not P.comparable(1, 2) and not P.comparable(1, 4) and not P.comparable(3, 4)


def test_transitive_closure():
    P = from_covers(3, [(1, 2), (2, 3)])
    assert P.leq(1, 3)
    assert P.hasse() == [(1, 2), (2, 3)]
    assert Poset(3, [(1, 2), (2, 3), (1, 3)]) == P


def test_cycle_rejected():
    with pytest.raises(CycleError):
        from_covers(2, [(1, 2), (2, 1)])
    with pytest.raises(CycleError):
        from_covers(3, [(1, 2), (2, 3), (3, 1)])


def test_index_out_of_range():
    with pytest.raises(IndexError):
        from_covers(2, [(1, 3)])
    with pytest.raises(IndexError):
        from_covers(2, [(0, 1)])


def test_json_roundtrip(tmp_path):
    P = Poset(4, [(1, 3), (2, 4)])
    path = tmp_path / "p.json"
    path.write_text('{"size": 4, "covers": [[1, 3], [2, 4]]}')
    assert Poset.from_json(path) == P
    assert Poset.from_json(P.to_json()) == P


@pytest.mark.parametrize(
    "P, n",
    [
        (Poset.chain([1, 2, 3]), 4),
        (Poset.antichain(3), 8),
        (Poset(4, [(1, 3), (2, 4)]), 9),
    ],
)
def test_ideal_counts(P, n):
    assert len(ideals(P)) == n
    assert [I.mask for I in ideals(P)] == sorted(brute_ideals(P), key=lambda m: (m.bit_count(), m))


def test_chain_ideals_are_prefixes():
    P = Poset.chain([1, 2, 3])
    assert [I.elements for I in ideals(P)] == [(), (1,), (1, 2), (1, 2, 3)]


@pytest.mark.parametrize(
    "Q, n",
    [
        (Poset.chain([1, 2, 3]), 4),
        (Poset.antichain(3), 8),
        (Poset(4, [(1, 3), (2, 4)]), 9),
    ],
)
def test_antichain_counts(Q, n):
    assert len(antichains(Q)) == n
    assert sorted(A.mask for A in antichains(Q)) == brute_antichains(Q)


def test_antichains_contain_empty_and_singletons():
    Q = Poset.chain([3, 1, 2])
    masks = {A.mask for A in antichains(Q)}
    assert {0, 1, 2, 4} <= masks


def test_max_elements_examples():
    C = Poset.chain([1, 2, 3])
    assert max_elements(C, IdealSet(3, 0)).mask == 0
    assert max_elements(C, IdealSet(3, S(C, 1, 2))).elements == (2,)
    Q = Poset(4, [(1, 3), (2, 4)])
    assert max_elements(Q, IdealSet(4, S(Q, 1, 2, 3))).elements == (2, 3)


def test_ideal_from_antichain_examples():
    C = Poset.chain([1, 2, 3])
    assert ideal_from_antichain(C, AntichainSet(3, 0)).mask == 0
    assert ideal_from_antichain(C, AntichainSet(3, S(C, 3))).elements == (1, 2, 3)
    Q = Poset(4, [(1, 3), (2, 4)])
    assert ideal_from_antichain(Q, AntichainSet(4, S(Q, 3, 4))).elements == (1, 2, 3, 4)


def test_star_product_examples():
    Q = Poset(4, [(1, 3), (2, 4)])
    J, J2 = IdealSet(4, S(Q, 1, 2, 3)), IdealSet(4, S(Q, 1, 2, 4))
    assert star_product(Q, J, J2).elements == (1, 2)
    # disjoint ideals
    A = Poset.antichain(2)
    assert star_product(A, IdealSet(2, 1), IdealSet(2, 2)).mask == 0
    # comparable pair: the formula gives back the smaller ideal
    C = Poset.chain([1, 2, 3])
    small, big = IdealSet(3, S(C, 1)), IdealSet(3, S(C, 1, 2, 3))
    assert star_product(C, small, big) == small


def test_union_intersection_examples():
    Q = Poset(4, [(1, 3), (2, 4)])
    I = IdealSet(4, S(Q, 1, 2, 3))
    I2 = IdealSet(4, S(Q, 1, 2, 4))
    assert union(Q, I, IdealSet(4, 0)) == I
    assert intersection(Q, I, I) == I
    assert intersection(Q, I, I2).elements == (1, 2)
    assert union(Q, I, I2).mask == 0b1111


def test_enumeration_order():
    P = Poset.antichain(3)
    keys = [(I.mask.bit_count(), I.mask) for I in ideals(P)]
    assert keys == sorted(keys)


def test_all_posets_counts():
    # labeled posets on 1..4 points: 1, 3, 19, 219
    assert [len(all_posets(d)) for d in (1, 2, 3, 4)] == [1, 3, 19, 219]
    assert len(set(all_posets(3))) == 19


def test_common_linear_extension():
    C = Poset.chain([1, 2, 3])
    assert common_linear_extension(C, Poset.antichain(3)) == (1, 2, 3)
    assert common_linear_extension(C, Poset.chain([3, 2, 1])) is None


@given(posets(max_size=5))
def test_ideal_antichain_bijection(P):
    I_masks = set(P.ideal_masks)
    A_masks = set(P.antichain_masks)
    assert len(I_masks) == len(A_masks) == len(P.ideal_masks)
    assert I_masks == set(brute_ideals(P))
    assert A_masks == set(brute_antichains(P))
    for A in antichains(P):
        assert max_elements(P, ideal_from_antichain(P, A)) == A
    assert {max_elements(P, I).mask for I in ideals(P)} == A_masks


@given(posets(max_size=5))
def test_operations_stay_ideals(P):
    masks = P.ideal_masks
    closed = set(masks)
    for J, J2 in itertools.combinations(masks, 2):
        for out in (
            union(P, IdealSet(P.size, J), IdealSet(P.size, J2)),
            intersection(P, IdealSet(P.size, J), IdealSet(P.size, J2)),
            star_product(P, IdealSet(P.size, J), IdealSet(P.size, J2)),
        ):
            assert P.is_ideal(out.mask)
            assert out.mask in closed


@given(posets(max_size=5))
def test_order_axioms(P):
    d = P.size
    for a in range(1, d + 1):
        assert P.leq(a, a)
        for b in range(1, d + 1):
            if a != b:
                assert not (P.leq(a, b) and P.leq(b, a))
            for c in range(1, d + 1):
                if P.leq(a, b) and P.leq(b, c):
                    assert P.leq(a, c)
    assert Poset(d, P.hasse()) == P
