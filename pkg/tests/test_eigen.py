import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import circulant_eigs, coarse_match, irreducible_const_rows, lapack_eigvals
from digraph_spectra import eigen
from digraph_spectra.eigen import (
    Mode, Spectrum, eigenpairs, eigenvalues, eigenvalues_raw, geometric_multiplicity,
    jordan_structure, jordan_structure_exact, null_space_basis, numerical_rank, residual, spectrum_match,
)
from digraph_spectra.errors import (
    CardinalityMismatch, ExactModeUnavailable, NoConvergence, NonSquare, NotAnEigenvalue,
)
from digraph_spectra.linalg import digraph_matrix

seeds = st.integers(0, 2**32 - 1)


def companion(roots):
    c = np.poly(roots)
    k = len(roots)
    m = np.zeros((k, k))
    m[0, :] = -c[1:]
    m[1:, :-1] += np.eye(k - 1)
    return m


def test_spectrum_figure1(fig1):
    d = digraph_matrix(fig1, "D")
    s = eigenvalues(d)
    assert spectrum_match([4, -1, -1, -2], s, 1e-8).ok
    assert s.multiplicity(-1) == 2
    assert geometric_multiplicity(d, -1) == 1
    assert geometric_multiplicity(d, -1, Mode.EXACT) == 1


def test_spectrum_cycle_is_roots_of_unity(c5):
    s = eigenvalues(digraph_matrix(c5, "A"))
    want = [cmath.exp(2j * cmath.pi * k / 5) for k in range(5)]
    assert spectrum_match(want, s, 1e-10).ok
    assert s.has_nonreal()


def test_reducible_blocks_are_exact():
    m = np.array([[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 1, 0, 1, 0], [1, 0, 1, 1, 1]])
    assert len(eigen.irreducible_blocks(m)) == 4
    assert eigenvalues(m).items == ((1, 4), (-1, 1))


def test_converges_on_near_identity_windows():
    # once stalled: eigenvalue 1 is semisimple of multiplicity 4 here
    rng = np.random.default_rng(75)
    x = irreducible_const_rows(rng, 4, 4)
    x[0, 0] += 1
    y = irreducible_const_rows(rng, 4)
    c = np.kron(x, np.ones((4, 4))) + np.kron(np.eye(4), y)
    s = eigenvalues(c)
    assert s.multiplicity(1) == 4 and s.multiplicity(-1) == 4
    assert coarse_match(lapack_eigvals(c), eigenvalues_raw(c), 1e-9)


def test_trivial_orders():
    assert eigenvalues(np.array([[3.0]])).values() == [3]
    assert eigenvalues(np.zeros((1, 1))).values() == [0]
    assert spectrum_match([1j, -1j], eigenvalues(np.array([[0, 1], [-1, 0]])), 1e-12).ok


def test_zero_and_nilpotent():
    s = eigenvalues(np.zeros((4, 4)))
    assert s.items == ((0, 4),)
    n = np.diag(np.ones(3), 1)
    assert eigenvalues(n).items == ((0, 4),)
    assert jordan_structure(n).sizes_at(0) == [4]


def test_bad_input():
    with pytest.raises(NonSquare):
        eigenvalues(np.ones((2, 3)))
    with pytest.raises(ValueError, match="cap"):
        eigenvalues(np.eye(5), max_order=4)
    with pytest.raises(ValueError):
        eigenvalues(np.array([[np.nan]]))


def test_no_convergence_is_reported():
    rng = np.random.default_rng(0)
    with pytest.raises(NoConvergence):
        eigenvalues_raw(rng.normal(size=(30, 30)), max_iterations=1)


@pytest.mark.parametrize("k", range(1, 9))
def test_companion_known_roots(k):
    rng = np.random.default_rng(k)
    roots = list(rng.integers(-5, 6, size=k).astype(float))
    if k >= 2:
        roots[:2] = [1.5 + 2j, 1.5 - 2j]
    computed = eigenvalues_raw(companion(roots))
    # repeated roots split like eps^(1/mult); allow for it
    mult = max(roots.count(r) for r in roots)
    tol = 1e-6 if mult == 1 else 100 * np.finfo(float).eps ** (1 / mult)
    assert spectrum_match(roots, computed, tol).ok


@given(seeds, st.integers(1, 8))
def test_companion_distinct_roots(seed, k):
    rng = np.random.default_rng(seed)
    roots = rng.choice(np.arange(-12, 13), size=k, replace=False) / 2
    assert spectrum_match(roots, eigenvalues_raw(companion(roots)), 1e-6).ok


@given(seeds, st.integers(1, 12))
def test_trace_determinant_and_conjugates(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.integers(-4, 5, size=(n, n)).astype(float)
    ev = eigenvalues_raw(m)
    scale = 1 + np.abs(m).sum()
    assert abs(ev.sum() - np.trace(m)) <= 1e-9 * scale
    det = np.linalg.det(m)
    assert abs(np.prod(ev) - det) <= 1e-7 * (1 + abs(det))
    # conjugate-pair symmetry of a real matrix
    assert spectrum_match(ev, np.conj(ev), 1e-6).ok


@given(seeds, st.integers(2, 20))
def test_agrees_with_lapack(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(n, n))
    assert spectrum_match(lapack_eigvals(m), eigenvalues_raw(m), 1e-8).ok


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=9))
def test_circulant(first_row):
    n = len(first_row)
    m = np.array([[first_row[(j - i) % n] for j in range(n)] for i in range(n)], dtype=float)
    assert spectrum_match(circulant_eigs(first_row), eigenvalues_raw(m), 1e-8).ok


@given(seeds, st.integers(1, 7))
def test_gmult_bounded_by_algebraic(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.integers(0, 2, size=(n, n))
    raw = eigenvalues_raw(m)
    assert len(raw) == n
    # merge the eps**(1/k) splitting of defective eigenvalues before counting
    s = Spectrum.from_values(raw, 1e-3 * (1 + np.abs(raw).max()))
    for z, alg in s:
        g = geometric_multiplicity(m, z)
        assert 1 <= g <= alg
        if abs(z.imag) < 1e-12 and abs(z.real - round(z.real)) < 1e-9:
            assert geometric_multiplicity(m, round(z.real), Mode.EXACT) == g


def test_exact_mode_refuses_irrational():
    with pytest.raises(ExactModeUnavailable):
        geometric_multiplicity(np.eye(2), 2 ** 0.5, Mode.EXACT)
    with pytest.raises(ExactModeUnavailable):
        geometric_multiplicity(np.eye(2) * 0.5, 1, Mode.EXACT)


def test_jordan_examples(fig1, section2):
    assert jordan_structure(digraph_matrix(fig1, "D")).sizes_at(-1) == [2]
    _, m1, m2 = section2
    assert jordan_structure_exact(m1, 0) == [2, 2]
    assert jordan_structure_exact(m2, 0) == [3, 1]
    assert jordan_structure(np.eye(3)).sizes_at(1) == [1, 1, 1]
    assert jordan_structure(m1).spectrum().items == ((0, 4),)


def test_eigenspace_perp_ones(fig1):
    d = digraph_matrix(fig1, "D")
    assert eigen.eigenspace_perp_ones(d, -2)
    assert not eigen.eigenspace_perp_ones(d, -1)
    with pytest.raises(NotAnEigenvalue):
        eigen.eigenspace_perp_ones(d, 7)


def test_eigenpairs_figure1(fig1):
    d = digraph_matrix(fig1, "D")
    pairs = eigenpairs(d)
    assert len(pairs) == 3
    for z, v in pairs:
        assert residual(d, z, v) <= 1e-12
    (v,) = [v for z, v in pairs if abs(z + 1) < 1e-9]
    w = np.array([4.0, -1, -1, -1])
    assert abs(abs(v @ w) / (np.linalg.norm(v) * np.linalg.norm(w)) - 1) < 1e-12


def test_eigenpairs_defective_keeps_kernel_vector():
    # eigenvalue 1 has a 2x2 Jordan block
    m = np.array([[-2.0, 2, -2], [1, -1, 2], [-2, 0, 1]])
    for z, v in eigenpairs(m):
        assert residual(m, z, v) <= 1e-12 * np.linalg.norm(v)


@given(seeds, st.integers(1, 8))
def test_eigenpair_residuals(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.integers(-2, 3, size=(n, n)).astype(float)
    for z, v in eigenpairs(m):
        assert residual(m, z, v) <= 1e-8 * (1 + eigen.norm_inf(m)) * np.linalg.norm(v)


def test_null_space_and_rank():
    m = np.array([[1.0, 2], [2, 4]])
    assert numerical_rank(m) == 1
    (v,) = null_space_basis(m)
    assert np.allclose(m @ v, 0)
    assert numerical_rank(np.zeros((3, 3))) == 0


def test_spectrum_container():
    s = Spectrum.from_values([1, 1 + 1e-13, 2j, -2j, 3])
    assert s.order == 5
    assert s.items[0] == (3, 1)
    assert s.multiplicity(1) == 2
    assert s.contains(2j) and not s.contains(5)
    assert s.perron() == 3
    assert (s + Spectrum.from_values([3])).multiplicity(3) == 2
    assert s.map(lambda z: 2 * z).contains(6)
    assert "3" in repr(s)


def test_spectrum_match_examples():
    assert spectrum_match([1, 2], [2, 1 + 1e-10], 1e-9).ok
    r = spectrum_match([1, 2], [1, 2.1], 1e-9)
    assert not r.ok and abs(r.worst_deviation - 0.1) < 1e-12
    assert spectrum_match([], [], 1e-9).ok
    assert spectrum_match([0], [1e-10], atol=1e-9, rtol=0).ok
    with pytest.raises(CardinalityMismatch):
        spectrum_match([1], [1, 2])
    assert spectrum_match([1], [1.5], 1e-9).to_dict()["ok"] is False
