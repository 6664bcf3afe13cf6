import itertools

import pytest
from hypothesis import given, settings

from orderchain.polytopes import SizeMismatch
from orderchain.poset import Poset
from orderchain.toric import (
    Z,
    Binomial,
    Variable,
    build_order,
    buchberger_check,
    buchberger_verify,
    corrupt,
    diagnostics,
    generators,
    hilbert_oracle,
    initial_ideal_profile,
    initial_monomials,
    monomial,
    pi_degree,
    reduce,
    standard_monomial_count,
    x_var,
    y_var,
)

from conftest import poset_pairs

C2 = Poset.chain([1, 2])


def names(G):
    return {str(g) for g in G}


def test_variable_validation():
    with pytest.raises(ValueError):
        Variable("x", 0)
    with pytest.raises(ValueError):
        Variable("w", 1)
    assert x_var(0) == Z and y_var(0) == Z


def test_pi_degree():
    assert pi_degree(monomial(Z, Z, Z), 2) == (0, 0, 3)
    assert pi_degree(monomial(x_var(0b11), y_var(0b10)), 2) == (1, 0, 2)


def test_order_two_chains():
    assert build_order(C2, C2).names() == ["z", "y_{1}", "y_{2}", "x_{1}", "x_{1,2}"]


def test_order_tie_break_b():
    A = Poset.antichain(2)
    assert build_order(A, A, "a").names() == [
        "z", "y_{1}", "y_{2}", "y_{1,2}", "x_{1}", "x_{2}", "x_{1,2}"
    ]
    assert build_order(A, A, "b").names() == [
        "z", "y_{2}", "y_{1}", "y_{1,2}", "x_{2}", "x_{1}", "x_{1,2}"
    ]


def test_order_size_mismatch():
    with pytest.raises(SizeMismatch):
        build_order(Poset(1), Poset(2))


@pytest.mark.parametrize("tie", ["a", "b"])
def test_order_respects_constraints(small_posets, tie):
    for P, Q in itertools.product(small_posets[3], small_posets[3]):
        order = build_order(P, Q, tie)
        pos = order.index
        assert order.variables[0] == Z
        ys = [v for v in order.variables if v.kind == "y"]
        xs = [v for v in order.variables if v.kind == "x"]
        assert max(pos[v] for v in ys) < min(pos[v] for v in xs)
        for I, I2 in itertools.permutations(P.ideal_masks[1:], 2):
            if I & I2 == I:
                assert pos[x_var(I)] < pos[x_var(I2)]
        for J, J2 in itertools.permutations(Q.ideal_masks[1:], 2):
            if J & J2 == J:
                assert pos[y_var(Q.max_mask(J))] < pos[y_var(Q.max_mask(J2))]


def test_revlex_comparison():
    order = build_order(C2, C2)
    x1, x12, y1, y2 = x_var(1), x_var(3), y_var(1), y_var(2)
    # smallest differing variable decides, larger power means smaller monomial
    assert order.greater(monomial(x12, y2), monomial(x1, Z))
    assert order.greater(monomial(x1, y1), monomial(Z, Z))
    assert order.greater(monomial(x12, x12), monomial(x1, x12))
    assert order.greater(monomial(x1, x1), monomial(y2, x12))
    assert order.greater(monomial(Z, Z, Z), monomial(Z, Z)) is True


def test_generators_point():
    one = Poset(1)
    G = generators(one, one)
    assert names(G) == {"x_{1}*y_{1} - z^2"}
    assert G[0].kind == "iii"


def test_generators_two_chains():
    G = generators(C2, C2)
    assert names(G) == {"x_{1}*y_{1} - z^2", "x_{1,2}*y_{2} - x_{1}*z"}


def test_generators_example2_type_ii():
    Q = Poset(4, [(1, 3), (2, 4)])
    G = generators(Q, Q)
    target = Binomial(
        monomial(y_var(0b0110), y_var(0b1001)),
        monomial(y_var(0b1100), y_var(0b0011)),
    )
    found = [g for g in G if g == target]
    assert found and found[0].kind == "ii"
    assert pi_degree(target.first, 4) == (-1, -1, -1, -1, 2)
    assert pi_degree(target.second, 4) == (-1, -1, -1, -1, 2)


def test_generators_type_i():
    A = Poset.antichain(2)
    G = generators(A, A)
    assert "x_{1}*x_{2} - x_{1,2}*z" in names(G)


def test_star_empty_flagged():
    A = Poset.antichain(2)
    G = generators(A, A)
    flagged = [g for g in G if g.star_empty]
    assert [str(g) for g in flagged] == ["y_{1}*y_{2} - y_{1,2}*z"]


def test_reduce_basics():
    G = generators(C2, C2)
    order = build_order(C2, C2)
    for g in G:
        assert reduce(g, G, order) is None
    assert reduce(monomial(Z, Z, Z), G, order) == monomial(Z, Z, Z)
    x1, x12, y1, y2 = x_var(1), x_var(3), y_var(1), y_var(2)
    assert reduce(monomial(x1, y1, x12), G, order) == monomial(Z, Z, x12)
    # S-polynomial of the two generators: leads are coprime, reduces to 0
    lcm = monomial(x1, y1, x12, y2)
    s = Binomial(monomial(Z, Z, x12, y2), monomial(x1, Z, x1, y1))
    assert reduce(s, G, order) is None
    assert set(lcm) == set(G[0].first) | set(G[1].first)


def test_buchberger_small():
    one = Poset(1)
    rep = buchberger_check(generators(one, one), build_order(one, one))
    assert rep.ok and rep.pairs == 0
    assert buchberger_verify(generators(C2, C2), build_order(C2, C2))


def test_profile_point():
    one = Poset(1)
    prof = initial_ideal_profile(generators(one, one), build_order(one, one))
    assert prof == {"quadratic": True, "squarefree": True, "z_free": True}


def test_corrupted_swap_fails():
    P, Q = Poset(3, [(1, 2)]), Poset(3, [(2, 3)])
    G, order = generators(P, Q), build_order(P, Q)
    for k in range(len(G)):
        bad = corrupt(G, "swap", k)
        assert not buchberger_verify(bad, order)


def test_corrupted_drop_breaks_hilbert():
    P = Q = Poset.antichain(2)
    G, order = generators(P, Q), build_order(P, Q)
    leads = [g.first for g in G]
    unique = [k for k, m in enumerate(leads) if leads.count(m) == 1]
    assert len(unique) == 8
    for k in unique:
        bad = corrupt(G, "drop", k)
        ok = buchberger_verify(bad, order) and all(
            standard_monomial_count(bad, order, n) == hilbert_oracle(P, Q, n)
            for n in range(4)
        )
        assert not ok


def test_wrong_tail_outside_kernel():
    G, order = generators(C2, C2), build_order(C2, C2)
    g = G[1]
    bad = [G[0], Binomial(g.first, monomial(Z, Z), "iii")]
    rep = buchberger_check(bad, order)
    assert not rep.ok and rep.outside_kernel


def test_unreduced_generating_set_detected():
    # S-pair of these two leaves x_{1,2}*z*y_2 vs x_{1,2}*x_2*y_1, both irreducible
    A = Poset.antichain(2)
    order = build_order(A, A)
    x1, x2, x12 = x_var(1), x_var(2), x_var(3)
    y1, y2 = y_var(1), y_var(2)
    G = [
        Binomial(monomial(x1, x2), monomial(x12, Z)),
        Binomial(monomial(x1, y2), monomial(x12, y1)),
    ]
    assert order.greater(G[1].first, G[1].second)
    assert not buchberger_verify(G, order)


def test_hilbert_two_chains():
    G, order = generators(C2, C2), build_order(C2, C2)
    assert standard_monomial_count(G, order, 0) == hilbert_oracle(C2, C2, 0) == 1
    assert standard_monomial_count(G, order, 1) == hilbert_oracle(C2, C2, 1) == 5
    assert standard_monomial_count(G, order, 2) == hilbert_oracle(C2, C2, 2) == 13


def test_diagnostics_shape():
    G, order = generators(C2, C2), build_order(C2, C2)
    diag = diagnostics(C2, C2, order, G, buchberger_check(G, order))
    assert diag["variables"] == order.names()
    assert {b["type"] for b in diag["binomials"]} == {"iii"}
    assert diag["s_pairs"]["failures"] == []


@settings(max_examples=40, deadline=None)
@given(poset_pairs(max_size=4))
def test_generators_in_kernel_and_leading(pair):
    P, Q = pair
    order = build_order(P, Q)
    G = generators(P, Q)
    assert len(set(G)) == len(G)
    for g in G:
        assert pi_degree(g.first, P.size) == pi_degree(g.second, P.size)
        assert order.greater(g.first, g.second)
        assert order.leading(g) == g.first


@settings(max_examples=40, deadline=None)
@given(poset_pairs(max_size=3))
def test_variables_count(pair):
    P, Q = pair
    order = build_order(P, Q)
    assert len(order.variables) == len(P.ideal_masks) + len(Q.antichain_masks) - 1
    G = generators(P, Q)
    assert standard_monomial_count(G, order, 1) == hilbert_oracle(P, Q, 1) == len(order.variables)


def test_tie_breaks_agree(small_posets):
    for d in (1, 2, 3):
        for P, Q in itertools.product(small_posets[d], small_posets[d]):
            G = generators(P, Q)
            oa, ob = build_order(P, Q, "a"), build_order(P, Q, "b")
            assert buchberger_verify(G, oa) and buchberger_verify(G, ob)
            assert initial_monomials(G, oa) == initial_monomials(G, ob)
