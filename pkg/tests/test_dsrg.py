import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from digraph_spectra import dsrg
from digraph_spectra.digraph import metrics
from digraph_spectra.dsrg import DsrgParams
from digraph_spectra.eigen import Spectrum, eigenvalues, geometric_multiplicity, spectrum_match
from digraph_spectra.errors import (
    BadPrime, DegenerateDiscriminant, HypothesisViolated, InvalidParams, ShapeViolated,
)
from digraph_spectra.linalg import digraph_matrix

PALEY = [3, 7, 11, 19, 23]


def test_figure2_is_the_dsrg(fig2):
    assert dsrg.validate_dsrg(fig2, dsrg.FIGURE2_PARAMS)
    assert dsrg.infer_dsrg_params(fig2) == dsrg.FIGURE2_PARAMS
    assert len(fig2.arcs) == 32
    assert dsrg.arcs_checksum(fig2.arcs) == dsrg.FIGURE2_SHA256


def test_validate_rejects_wrong_params(fig2, c4):
    assert not dsrg.validate_dsrg(fig2, DsrgParams(8, 4, 3, 1, 2))
    assert not dsrg.validate_dsrg(c4, dsrg.FIGURE2_PARAMS)
    assert dsrg.infer_dsrg_params(dsrg.figure1()) is None


def test_duval_figure2_exact():
    d = dsrg.duval_spectrum(dsrg.FIGURE2_PARAMS)
    assert d.exact
    assert d.items() == [(Fraction(4), 1), (Fraction(0), 5), (Fraction(-2), 2)]


def test_duval_paley7_nonreal():
    d = dsrg.duval_spectrum(dsrg.paley_params(7))
    assert not d.exact
    w = (-1 + 1j * math.sqrt(7)) / 2
    assert spectrum_match([3] + [w] * 3 + [w.conjugate()] * 3, d.spectrum().values(), 1e-12).ok


@pytest.mark.parametrize("params, err", [
    ((8, 4, 3, 1, 3.5), InvalidParams),
    ((4, 4, 0, 0, 0), InvalidParams),
    ((8, 4, 5, 1, 3), InvalidParams),
    ((5, 2, 1, 1, 1), DegenerateDiscriminant),
    ((8, 3, 3, 1, 3), InvalidParams),  # multiplicities are not integers
])
def test_bad_params(params, err):
    with pytest.raises(err):
        dsrg.duval_spectrum(DsrgParams(*params))


def test_derived_spectra_figure2(fig2):
    p = dsrg.FIGURE2_PARAMS
    d = dsrg.dsrg_derived_spectra(p, "D")
    assert d.items == ((10, 1), (0, 2), (-2, 5))
    # DL and DQ with t = 2n - 2 - k = 10
    assert dsrg.dsrg_derived_spectra(p, "DL").items == ((12, 5), (10, 2), (0, 1))
    assert dsrg.dsrg_derived_spectra(p, "DQ").items == ((20, 1), (10, 2), (8, 5))
    for kind in ("A", "L", "Q", "D", "DL", "DQ"):
        oracle = eigenvalues(digraph_matrix(fig2, kind))
        assert spectrum_match(dsrg.dsrg_derived_spectra(p, kind), oracle, 1e-8).ok


@pytest.mark.parametrize("p", PALEY)
def test_paley(p):
    g = dsrg.paley_tournament(p)
    params = dsrg.paley_params(p)
    assert dsrg.validate_dsrg(g, params)
    assert dsrg.infer_dsrg_params(g) == params
    assert dsrg.nonreal_classification(params) is dsrg.NonrealClass.NONREAL
    for kind in ("A", "D", "DL", "DQ"):
        oracle = eigenvalues(digraph_matrix(g, kind))
        assert oracle.has_nonreal()
        assert spectrum_match(dsrg.dsrg_derived_spectra(params, kind), oracle, 1e-8).ok


@pytest.mark.parametrize("p", [2, 5, 9, 13])
def test_paley_needs_3_mod_4_prime(p):
    with pytest.raises(BadPrime):
        dsrg.paley_tournament(p)


def test_classification_rational(fig2):
    assert dsrg.nonreal_classification(dsrg.FIGURE2_PARAMS) is dsrg.NonrealClass.ALL_RATIONAL
    assert not eigenvalues(digraph_matrix(fig2, "A")).has_nonreal()


@given(st.integers(2, 12), st.integers(1, 11), st.integers(0, 11), st.integers(0, 11),
       st.integers(0, 11))
def test_duval_multiplicities_sum(n, k, s, a, c):
    try:
        p = DsrgParams(n, k, s, a, c)
        d = dsrg.duval_spectrum(p)
    except (InvalidParams, DegenerateDiscriminant):
        return
    assert d.mult1 + d.mult2 + d.mult3 == n
    # trace of A is 0 for a loopless digraph whenever the parameters are realisable
    trace = sum(complex(z) * m for z, m in d.items())
    if d.exact:
        assert isinstance(d.theta2, Fraction)
    assert abs(trace.imag) < 1e-9
    if dsrg.nonreal_classification(p) is dsrg.NonrealClass.NONREAL:
        assert p.discriminant < 0


def test_diam2(fig2, paley7, fig1):
    r = dsrg.diam2_distance_spectrum(fig2, with_eigvecs=True)
    d = digraph_matrix(fig2, "D")
    assert spectrum_match(r.spectrum, eigenvalues(d), 1e-8).ok
    for z, v in r.eigvecs:
        assert np.linalg.norm(d @ v - z * v) <= 1e-8 * (1 + np.abs(d).sum(axis=1).max()) * np.linalg.norm(v)
    for z, _ in eigenvalues(d):
        assert dsrg.diam2_gmult(fig2, z) == geometric_multiplicity(d, z)
    assert dsrg.diam2_distance_spectrum(paley7).k == 3
    with pytest.raises(HypothesisViolated):
        dsrg.diam2_distance_spectrum(dsrg.directed_cycle(4))  # diameter 3
    with pytest.raises(HypothesisViolated):
        dsrg.diam2_distance_spectrum(dsrg.random_strongly_connected(6, 1, 0.5))


def test_cartesian_power_figure2():
    d = dsrg.dsrg_derived_spectra(dsrg.FIGURE2_PARAMS, "D")
    assert dsrg.power_shape(d, 8) == (10.0, -2, 5)
    s = dsrg.cartesian_power_from_spectrum(d, 8, 2)
    assert s.items == ((160, 1), (0, 53), (-16, 10))


def test_cartesian_power_digon_is_hypercube():
    g = dsrg.cartesian_power(dsrg.digon(), 3)
    s = dsrg.cartesian_power_spectrum(1, -1, 1, 2, 3)
    assert s.items == ((12, 1), (0, 4), (-4, 3))
    assert spectrum_match(s, eigenvalues(digraph_matrix(g, "D")), 1e-10).ok
    assert metrics(g).diameter == 3


def test_power_shape_violations(c3):
    with pytest.raises(ShapeViolated):
        dsrg.power_shape(eigenvalues(digraph_matrix(c3, "D")), 3)
    with pytest.raises(ShapeViolated):
        dsrg.power_shape(Spectrum.from_values([1, 2]), 3)
    with pytest.raises(ShapeViolated):
        dsrg.cartesian_power_spectrum(1, 1, 1, 2, 0)
    with pytest.raises(ShapeViolated):
        dsrg.cartesian_power_spectrum(1, 1, 2, 2, 2)


def test_generators_are_strongly_connected():
    for name, make in dsrg.generators().items():
        assert metrics(make()).diameter < math.inf, name
    for seed in range(20):
        assert metrics(dsrg.random_strongly_connected(5, seed)).diameter < math.inf
    assert dsrg.directed_cycle(1).n == 1
