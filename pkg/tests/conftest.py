from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from digraph_spectra import dsrg
from digraph_spectra.digraph import Digraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def strong_digraphs(draw, min_n=1, max_n=6):
    """A Hamiltonian cycle through a random order plus random extra arcs."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs |= {p for p, k in zip(pairs, keep) if k}
    return Digraph(n, frozenset(arcs))


@pytest.fixture
def c3():
    return dsrg.directed_cycle(3)


@pytest.fixture
def c4():
    return dsrg.directed_cycle(4)


@pytest.fixture
def c5():
    return dsrg.directed_cycle(5)


@pytest.fixture
def fig1():
    return dsrg.figure1()


@pytest.fixture
def fig2():
    return dsrg.figure2_dsrg()


@pytest.fixture
def paley7():
    return dsrg.paley_tournament(7)


@pytest.fixture
def lexp_pair():
    r7 = np.sqrt(7.0)
    m = np.array([[0.0, (28 - r7) / 3], [(28 - r7) / 3, 0.0]])
    m2 = np.array([[12, 6, 12], [7, 13, 10], [6, 15, 9]], dtype=float)
    return m, m2


@pytest.fixture
def section2():
    m = np.zeros((3, 3))
    m[1, 2] = 1
    m1 = np.zeros((4, 4))
    m1[0, 1] = m1[2, 3] = 1
    m2 = np.zeros((4, 4))
    m2[0, 1] = m2[1, 2] = 1
    return m, m1, m2


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
