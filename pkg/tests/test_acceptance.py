"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

The lines are printed as each test runs (visible with ``-s``) and repeated
in the terminal summary.
"""
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import fraction_rank
from digraph_spectra import dsrg, eigen
from digraph_spectra import formulas as F
from digraph_spectra.digraph import distance_data
from digraph_spectra.eigen import eigenvalues, eigenvalues_raw, geometric_multiplicity, spectrum_match
from digraph_spectra.linalg import adjacency, construction, digraph_matrix, exact_rank, kronecker
from digraph_spectra.products import ProductKind, product
from digraph_spectra.sweep import run_sweep

pytestmark = pytest.mark.acceptance

RESULTS = {}


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1_figure1():
    start = time.perf_counter()
    g = dsrg.figure1()
    d = distance_data(g).dist
    spec = eigenvalues(d)
    gm = geometric_multiplicity(d, -1)
    (v,) = eigen.null_space_basis(d + np.eye(4))
    elapsed = time.perf_counter() - start
    want = np.array([[0, 1, 2, 1], [1, 0, 1, 2], [1, 1, 0, 2], [1, 2, 1, 0]])
    w = np.array([4.0, -1, -1, -1])
    cos = abs(v @ w) / (np.linalg.norm(v) * np.linalg.norm(w))
    angle = math.acos(min(1.0, cos))
    ok = (np.array_equal(d, want) and spectrum_match([4, -1, -1, -2], spec, 1e-8).ok
          and gm == 1 and angle <= 1e-8 and elapsed < 0.1)
    record(1, ok, f"spec {spec}, gmult(-1)={gm}, kernel angle {angle:.1e}, {elapsed * 1e3:.1f} ms")


def test_criterion_2_section2_ranks(section2):
    m, m1, m2 = section2
    r1 = exact_rank(construction("BOX_I", m, m1))
    r2 = exact_rank(construction("BOX_I", m, m2))
    # the fraction-elimination oracle agrees
    o1 = fraction_rank(construction("BOX_I", m, m1).astype(int).tolist())
    o2 = fraction_rank(construction("BOX_I", m, m2).astype(int).tolist())
    record(2, (r1, r2, o1, o2) == (6, 7, 6, 7), f"exact ranks {r1} and {r2}")


def test_criterion_3_lexp_example(lexp_pair):
    m, m2 = lexp_pair
    r7 = math.sqrt(7)
    zs = (58 - r7, 2 + r7, 2 - r7)
    start = time.perf_counter()
    c = construction("LEXP", m, m2)
    spec = eigenvalues(c)
    formula = [F.gmult_lexp(m, m2, z) for z in zs]
    numeric = [geometric_multiplicity(c, z, tol=F.GMULT_TOL) for z in zs]
    elapsed = time.perf_counter() - start
    match = spectrum_match([zs[0]] + [zs[1]] * 3 + [zs[2]] * 2, spec, 1e-7)
    ok = match.ok and formula == [1, 2, 2] and numeric == formula and elapsed < 0.1
    record(3, ok, f"deviation {match.worst_deviation:.1e}, gmult {formula}, numeric {numeric}, "
                  f"{elapsed * 1e3:.1f} ms")


def test_criterion_4_figure2():
    g = dsrg.figure2_dsrg()
    p = dsrg.FIGURE2_PARAMS
    valid = dsrg.validate_dsrg(g, p)
    duval = dsrg.duval_spectrum(p)
    exact = duval.exact and duval.items() == [(Fraction(4), 1), (Fraction(0), 5), (Fraction(-2), 2)]
    formula = dsrg.dsrg_derived_spectra(p, "D")
    published = [10] + [-2] * 5 + [0] * 2
    oracle = eigenvalues(distance_data(g).dist)
    ok = (valid and exact and spectrum_match(published, formula, 1e-8).ok
          and spectrum_match(formula, oracle, 1e-8).ok)
    record(4, ok, f"valid={valid}, Duval {duval.items()}, spec_D {formula}, oracle {oracle}")


def test_criterion_5_cartesian_power():
    start = time.perf_counter()
    g = dsrg.figure2_dsrg()
    base = dsrg.dsrg_derived_spectra(dsrg.FIGURE2_PARAMS, "D")
    formula = dsrg.cartesian_power_from_spectrum(base, 8, 2)
    d = digraph_matrix(dsrg.cartesian_power(g, 2), "D")
    oracle = eigenvalues(d)
    norm = eigen.norm_inf(d)
    match = spectrum_match(formula, oracle, atol=1e-6 * norm, rtol=0.0)
    elapsed = time.perf_counter() - start
    want = [160] + [-16] * 10 + [0] * 53
    ok = (d.shape == (64, 64) and spectrum_match(want, formula, 1e-12).ok and match.ok
          and elapsed < 5)
    record(5, ok, f"formula {formula}, deviation {match.worst_deviation:.1e}, {elapsed:.2f} s")


def test_criterion_6_construction_identities():
    rng = random.Random(20240601)
    pairs = 0
    bad = []
    for trial in range(120):
        n, n2 = rng.randint(1, 6), rng.randint(1, 6)
        g = dsrg.random_strongly_connected(n, rng.randrange(2**31), rng.uniform(0.1, 0.6))
        h = dsrg.random_strongly_connected(n2, rng.randrange(2**31), rng.uniform(0.1, 0.6))
        a, b = adjacency(g), adjacency(h)
        i, i2 = np.eye(n), np.eye(n2)
        expected = {
            ProductKind.CARTESIAN: construction("BOX_I", a, b),
            ProductKind.LEXICOGRAPHIC: construction("LEXP", a, b),
            ProductKind.DIRECT: kronecker(a, b),
            ProductKind.STRONG: kronecker(a, i2) + kronecker(i, b) + kronecker(a, b),
        }
        for kind, want in expected.items():
            if not np.array_equal(adjacency(product(g, h, kind)), want):
                bad.append((trial, kind.value))
        d_prod = distance_data(product(g, h, "cartesian")).dist
        d_box = construction("BOX_J", distance_data(g).dist, distance_data(h).dist)
        if not np.array_equal(d_prod, d_box):
            bad.append((trial, "distance"))
        pairs += 1
    record(6, pairs >= 100 and not bad, f"{pairs} random strongly connected pairs, mismatches {bad}")


def test_criterion_7_sweep():
    res = run_sweep()
    counts = res.counts()
    fails = [(v.theorem, v.inputs) for v in res.failures()]
    ok = not fails and not res.uncovered() and res.seconds < 60
    record(7, ok, f"{dict(counts)} over {len(res.verdicts)} jobs, failures {fails[:5]}, "
                  f"uncovered {res.uncovered()}, {res.seconds:.1f} s")


def companion(roots):
    c = np.poly(roots)
    k = len(roots)
    m = np.zeros((k, k))
    m[0, :] = -c[1:]
    m[1:, :-1] += np.eye(k - 1)
    return m


def test_criterion_8_eigensolver_properties(section2):
    rng = np.random.default_rng(8)
    problems = []
    for trial in range(200):
        n = int(rng.integers(1, 13))
        m = rng.integers(-4, 5, size=(n, n)).astype(float)
        ev = eigenvalues_raw(m)
        scale = 1 + np.abs(m).sum()
        if abs(ev.sum() - np.trace(m)) > 1e-9 * scale:
            problems.append(("trace", trial))
        det = np.linalg.det(m)
        if abs(np.prod(ev) - det) > 1e-7 * (1 + abs(det)):
            problems.append(("det", trial))
        if not spectrum_match(ev, np.conj(ev), 1e-6).ok:
            problems.append(("conjugate", trial))
    for k in range(1, 9):
        for trial in range(10):
            roots = list(rng.choice(np.arange(-16, 17), size=k, replace=False) / 2)
            if k >= 2:
                roots[:2] = [roots[0] + 1j, roots[0] - 1j]
            if not spectrum_match(roots, eigenvalues_raw(companion(roots)), 1e-6).ok:
                problems.append(("companion", k, trial))
    m, m1, m2 = section2
    ranks = (exact_rank(construction("BOX_I", m, m1)), exact_rank(construction("BOX_I", m, m2)))
    if ranks != (6, 7):
        problems.append(("section-2 ranks", ranks))
    record(8, not problems, f"200 random matrices, 80 companion matrices, ranks {ranks}, "
                            f"problems {problems[:5]}")
