import itertools

import pytest
from hypothesis import strategies as st

from orderchain.poset import Poset, all_posets


@st.composite
def posets(draw, min_size=1, max_size=4):
    """Random labeled poset: a random DAG along a random permutation."""
    d = draw(st.integers(min_size, max_size))
    perm = draw(st.permutations(range(1, d + 1)))
    pairs = [(perm[i], perm[j]) for i, j in itertools.combinations(range(d), 2)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Poset(d, chosen)


@st.composite
def poset_pairs(draw, min_size=1, max_size=3):
    P = draw(posets(min_size, max_size))
    Q = draw(posets(P.size, P.size))
    return P, Q


@pytest.fixture(scope="session")
def small_posets():
    return {d: all_posets(d) for d in (1, 2, 3)}


@pytest.fixture
def example2():
    P = Poset(4, [(1, 3), (2, 4)])
    return {
        "P": P,
        "Q1": Poset(4, [(1, 3), (2, 4)]),
        "Q2": Poset(4, [(1, 2), (3, 4)]),
        "Q3": Poset(4, [(1, 4), (2, 3)]),
    }


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
