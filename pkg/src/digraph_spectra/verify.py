"""Theorem registry: closed-form prediction against brute-force oracle.

Each entry takes a list of inputs (digraphs, or a matrix pair for the
construction theorems) and returns a :class:`Verdict`.  A failed hypothesis
yields ``SKIP`` naming the condition; a numerical disagreement yields
``FAIL``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import dsrg, eigen
from . import formulas as F
from .digraph import Digraph, is_strongly_connected, metrics
from .eigen import Spectrum, norm_inf
from .errors import HypothesisViolated, NotStronglyConnected
from .linalg import construction, digraph_matrix, is_integer_matrix
from .products import ProductKind, product, product_adjacency

SPECTRUM_TOL = 1e-7
RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class MatrixPair:
    """Two matrices for the construction theorems, with optional expectations."""

    m: np.ndarray
    m2: np.ndarray
    expected_gmult: tuple = ()  # ((z, gmult), ...)
    name: str = "pair"


@dataclass
class Verdict:
    theorem: str
    status: str
    inputs: list
    checks: list = field(default_factory=list)
    hypothesis: str | None = None
    detail: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "status": self.status, "inputs": self.inputs,
                "hypothesis": self.hypothesis, "detail": self.detail,
                "seconds": round(self.seconds, 6), "checks": self.checks}


class _Checks:
    def __init__(self, tol: float):
        self.tol = tol
        self.items = []

    def add(self, name: str, ok: bool, **extra):
        self.items.append({"name": name, "ok": bool(ok), **extra})

    def spectra(self, name: str, predicted, computed):
        rep = eigen.spectrum_match(predicted, computed, self.tol)
        self.add(name, rep.ok, worst_deviation=rep.worst_deviation,
                 predicted=_spec_json(predicted))

    def residuals(self, name: str, m, pairs):
        m = np.asarray(m)
        scale = 1 + norm_inf(m)
        worst = 0.0
        for z, w in pairs:
            nw = np.linalg.norm(w)
            if nw == 0:
                self.add(name, False, detail="zero vector emitted")
                return
            worst = max(worst, np.linalg.norm(m @ w - z * w) / (scale * nw))
        self.add(name, worst <= RESIDUAL_TOL, worst_relative_residual=float(worst),
                 count=len(pairs))

    def equal(self, name: str, a, b):
        self.add(name, np.array_equal(np.asarray(a), np.asarray(b)))


def _spec_json(s) -> list:
    s = s if isinstance(s, Spectrum) else Spectrum.from_values(s)
    return [{"re": z.real, "im": z.imag, "mult": m} for z, m in s]


def _need(cond: bool, name: str, detail: str = ""):
    if not cond:
        raise HypothesisViolated(name, detail)


def _digraphs(inputs, count: int) -> list:
    gs = [x for x in inputs if isinstance(x, Digraph)]
    _need(len(gs) >= count, f"{count} digraph input(s)")
    return gs[:count]


def _gmult_checks(ck: _Checks, matrix, query, name: str):
    """Compare a gmult formula with rank-based multiplicities of ``matrix``
    at each distinct eigenvalue (exact where possible)."""
    results = []
    ok = True
    for z in eigen.eigenvalues(matrix).distinct():
        pred = query(z)
        num = eigen.geometric_multiplicity(matrix, z, eigen.Mode.NUMERIC, F.GMULT_TOL)
        exact = None
        if is_integer_matrix(matrix) and z.imag == 0 and abs(z.real - round(z.real)) < 1e-9:
            exact = eigen.geometric_multiplicity(matrix, int(round(z.real)), eigen.Mode.EXACT)
        good = pred == num and (exact is None or exact == pred)
        ok &= good
        results.append({"z": [z.real, z.imag], "formula": pred, "numeric": num, "exact": exact})
    ck.add(name, ok, values=results)


# ---------------------------------------------------------------------------
# Theorems
# ---------------------------------------------------------------------------

def _box_i(inputs, ck):
    if inputs and isinstance(inputs[0], MatrixPair):
        p = inputs[0]
        ck.spectra("spectrum", F.spec_box_i(eigen.eigenvalues(p.m), eigen.eigenvalues(p.m2)),
                   eigen.eigenvalues(construction("BOX_I", p.m, p.m2)))
        return
    g, h = _digraphs(inputs, 2)
    a, b = digraph_matrix(g, "A"), digraph_matrix(h, "A")
    built = construction("BOX_I", a, b)
    ck.equal("A(g x h) = A (.)I A'", product_adjacency(g, h, "cartesian"), built)
    ck.spectra("spectrum", F.spec_box_i(eigen.eigenvalues(a), eigen.eigenvalues(b)),
               eigen.eigenvalues(built))


def _distance_factors(inputs):
    if inputs and isinstance(inputs[0], MatrixPair):
        return inputs[0].m, inputs[0].m2, None
    g, h = _digraphs(inputs, 2)
    _need(is_strongly_connected(g) and is_strongly_connected(h), "strongly connected factors")
    m, m2 = digraph_matrix(g, "D"), digraph_matrix(h, "D")
    return m, m2, (g, h)


def _box_j_spectrum(inputs, ck):
    m, m2, gh = _distance_factors(inputs)
    rho, rho2 = F.constant_row_sum(m), F.constant_row_sum(m2)
    _need(rho is not None and rho2 is not None, "constant row sums")
    built = construction("BOX_J", m, m2)
    if gh:
        ck.equal("D(g x h) = D (.)J D'", digraph_matrix(product(*gh, "cartesian"), "D"), built)
    ck.spectra("spectrum", F.spec_box_j(F.factor_data(m), F.factor_data(m2)),
               eigen.eigenvalues(built))


def _box_j_jordan(inputs, ck):
    m, m2, _ = _distance_factors(inputs)
    pred = F.jordan_box_j_from_matrices(m, m2)
    actual = eigen.jordan_structure(construction("BOX_J", m, m2))
    ok = pred.spectrum().order == actual.spectrum().order
    rows = []
    for z, sizes in pred.blocks:
        got = actual.sizes_at(z, 1e-7)
        ok &= list(sizes) == got
        rows.append({"z": [z.real, z.imag], "formula": list(sizes), "oracle": got})
    ck.add("jordan blocks", ok, values=rows)


def _cartesian(kind):
    def run(inputs, ck):
        g, h = _digraphs(inputs, 2)
        for x, nm in ((g, "g"), (h, "h")):
            _need(is_strongly_connected(x), f"{nm} strongly connected")
            _need(metrics(x).is_transmission_regular, f"{nm} transmission regular")
        pred = F.spec_cartesian(g, h, kind)
        ck.spectra("spectrum", pred, eigen.eigenvalues(digraph_matrix(product(g, h, "cartesian"), kind)))
    return run


def _lexp_pair(inputs):
    if inputs and isinstance(inputs[0], MatrixPair):
        return inputs[0]
    g, h = _digraphs(inputs, 2)
    _need(metrics(h).is_out_regular, "h out-regular")
    return MatrixPair(digraph_matrix(g, "A"), digraph_matrix(h, "A"))


def _lexp_spectrum(inputs, ck):
    p = _lexp_pair(inputs)
    _need(F.constant_row_sum(p.m2) is not None, "constant row sums of M'")
    ck.spectra("spectrum", F.spec_lexp_construction(F.factor_data(p.m), F.factor_data(p.m2)),
               eigen.eigenvalues(construction("LEXP", p.m, p.m2)))


def _lexp_gmult(inputs, ck):
    p = _lexp_pair(inputs)
    _need(F.constant_row_sum(p.m2) is not None, "constant row sums of M'")
    built = construction("LEXP", p.m, p.m2)
    _gmult_checks(ck, built, lambda z: F.gmult_lexp(p.m, p.m2, z), "gmult vs rank")
    for z, want in p.expected_gmult:
        got = F.gmult_lexp(p.m, p.m2, z)
        ck.add(f"gmult at {complex(z):.6g}", got == want, formula=got, expected=want)


def _lexp_digraph(kind, regime="auto"):
    def run(inputs, ck):
        g, h = _digraphs(inputs, 2)
        setup = F.lexp_setup(g, h, kind, regime)
        mat = digraph_matrix(product(g, h, "lexicographic"), setup.kind.matrix)
        ck.add("regime", True, kind=setup.kind.value)
        ck.spectra("spectrum", F.spec_lexp_digraph(g, h, setup.kind), eigen.eigenvalues(mat))
        _gmult_checks(ck, mat, lambda z: F.gmult_lexp_digraph(g, h, setup.kind, z), "gmult vs rank")
    return run


def _complement_shift(inputs, ck):
    (g,) = _digraphs(inputs, 1)
    mt = metrics(g)
    _need(is_strongly_connected(g), "strongly connected")
    _need(mt.is_out_regular, "out-regular")
    a = digraph_matrix(g, "A")
    b = F.complement_shift_matrix(a)
    fb = F.complement_shift(F.factor_data(a, with_eigvecs=True))
    ck.spectra("spectrum", fb.spectrum(), eigen.eigenvalues(b))
    ck.residuals("eigenvectors", b, fb.eigvecs)
    _gmult_checks(ck, b, lambda z: F.complement_shift_gmult(a, z), "gmult transfer")


def _eigvecs_box_j(inputs, ck):
    m, m2, _ = _distance_factors(inputs)
    _need(F.constant_row_sum(m) is not None and F.constant_row_sum(m2) is not None,
          "constant row sums")
    pairs = F.eigvecs_box_j(F.factor_data(m, True), F.factor_data(m2, True))
    ck.residuals("eigenvectors", construction("BOX_J", m, m2), pairs)


def _eigvecs_lexp(inputs, ck):
    if inputs and isinstance(inputs[0], MatrixPair):
        p = inputs[0]
        _need(F.constant_row_sum(p.m2) is not None, "constant row sums of M'")
        res = F.eigvecs_lexp(F.factor_data(p.m, True), F.factor_data(p.m2, True))
        ck.residuals("eigenvectors", construction("LEXP", p.m, p.m2), res.pairs)
        ck.add("independent", res.rank == len(res.pairs), rank=res.rank, count=len(res.pairs))
        return
    g, h = _digraphs(inputs, 2)
    ran = []
    for kind, mk in (("A", "A"), ("D", "D")):
        try:
            res = F.eigvecs_lexp_digraph(g, h, kind)
        except HypothesisViolated:
            continue
        mat = digraph_matrix(product(g, h, "lexicographic"), mk)
        ck.residuals(f"eigenvectors {kind}", mat, res.pairs)
        ck.add(f"independent {kind}", res.rank == len(res.pairs), rank=res.rank,
               count=len(res.pairs), skipped=len(res.skipped))
        ran.append(kind)
    _need(bool(ran), "h out-regular, or a distance-matrix regime")


def _direct_strong(kind):
    def run(inputs, ck):
        g, h = _digraphs(inputs, 2)
        sa, sb = eigen.eigenvalues(digraph_matrix(g, "A")), eigen.eigenvalues(digraph_matrix(h, "A"))
        pred = F.spec_direct(sa, sb) if kind == "direct" else F.spec_strong(sa, sb)
        ck.spectra("spectrum", pred, eigen.eigenvalues(product_adjacency(g, h, kind)))
    return run


def _diam2(inputs, ck):
    (g,) = _digraphs(inputs, 1)
    res = dsrg.diam2_distance_spectrum(g, with_eigvecs=True)
    d = digraph_matrix(g, "D")
    ck.spectra("spectrum", res.spectrum, eigen.eigenvalues(d))
    ck.residuals("eigenvectors", d, res.eigvecs)
    _gmult_checks(ck, d, lambda z: dsrg.diam2_gmult(g, z), "gmult transfer")


def _params(g):
    p = dsrg.infer_dsrg_params(g)
    _need(p is not None, "directed strongly regular")
    return p


def _duval(inputs, ck):
    (g,) = _digraphs(inputs, 1)
    p = _params(g)
    a = digraph_matrix(g, "A")
    ck.spectra("spectrum", dsrg.duval_spectrum(p).spectrum(), eigen.eigenvalues(a))
    total = sum(eigen.geometric_multiplicity(a, z, tol=F.GMULT_TOL) for z in eigen.eigenvalues(a).distinct())
    ck.add("diagonalizable", total == g.n, gmult_total=total)


def _dsrg_kind(kind):
    def run(inputs, ck):
        (g,) = _digraphs(inputs, 1)
        p = _params(g)
        ck.spectra("spectrum", dsrg.dsrg_derived_spectra(p, kind),
                   eigen.eigenvalues(digraph_matrix(g, kind)))
    return run


def _cartesian_power(inputs, ck, ell: int = 2):
    (g,) = _digraphs(inputs, 1)
    _need(is_strongly_connected(g), "strongly connected")
    _need(metrics(g).is_transmission_regular, "transmission regular")
    base = eigen.eigenvalues(digraph_matrix(g, "D"))
    try:
        pred = dsrg.cartesian_power_from_spectrum(base, g.n, ell)
    except dsrg.ShapeViolated as exc:
        raise HypothesisViolated("spectrum shape {t, d^(m), 0^(n-1-m)}", str(exc)) from None
    power = dsrg.cartesian_power(g, ell)
    d = digraph_matrix(power, "D")
    ck.spectra("spectrum", pred, eigen.eigenvalues(d))
    if ell == 2:
        ck.spectra("iterated cartesian", pred, F.spec_cartesian(g, g, "D"))


def _nonreal(inputs, ck):
    (g,) = _digraphs(inputs, 1)
    p = _params(g)
    cls = dsrg.nonreal_classification(p)
    has = eigen.eigenvalues(digraph_matrix(g, "A")).has_nonreal()
    duval_has = dsrg.duval_spectrum(p).spectrum().has_nonreal()
    ck.add("classification", (cls is dsrg.NonrealClass.NONREAL) == has == duval_has,
           classification=cls.value, oracle_nonreal=has)


THEOREMS = {
    "box-i": _box_i,
    "box-j-spectrum": _box_j_spectrum,
    "box-j-jordan": _box_j_jordan,
    "cartesian-D": _cartesian("D"),
    "cartesian-DL": _cartesian("DL"),
    "cartesian-DQ": _cartesian("DQ"),
    "lexp-spectrum": _lexp_spectrum,
    "lexp-gmult": _lexp_gmult,
    "lexp-A": _lexp_digraph("A"),
    "lexp-L": _lexp_digraph("L"),
    "lexp-Q": _lexp_digraph("Q"),
    "lexp-D": _lexp_digraph("D"),
    "lexp-D-girth": _lexp_digraph("D-girth"),
    "lexp-D-doubly": _lexp_digraph("D-doubly"),
    "lexp-DL": _lexp_digraph("DL"),
    "lexp-DL-girth": _lexp_digraph("DL-girth"),
    "lexp-DL-doubly": _lexp_digraph("DL-doubly"),
    "lexp-DQ": _lexp_digraph("DQ"),
    "lexp-DQ-girth": _lexp_digraph("DQ-girth"),
    "lexp-DQ-doubly": _lexp_digraph("DQ-doubly"),
    "complement-shift": _complement_shift,
    "eigvecs-box-j": _eigvecs_box_j,
    "eigvecs-lexp": _eigvecs_lexp,
    "direct": _direct_strong("direct"),
    "strong": _direct_strong("strong"),
    "diam2": _diam2,
    "duval": _duval,
    "dsrg-D": _dsrg_kind("D"),
    "dsrg-DL": _dsrg_kind("DL"),
    "dsrg-DQ": _dsrg_kind("DQ"),
    "cartesian-power": _cartesian_power,
    "nonreal": _nonreal,
}


# theorems that read one digraph; the rest read two digraphs or a matrix pair
SINGLE_INPUT = frozenset({"complement-shift", "diam2", "duval", "dsrg-D", "dsrg-DL", "dsrg-DQ",
                          "cartesian-power", "nonreal"})
# theorems that also accept a MatrixPair in place of two digraphs
PAIR_INPUT = frozenset({"box-i", "box-j-spectrum", "box-j-jordan", "lexp-spectrum", "lexp-gmult",
                        "eigvecs-box-j", "eigvecs-lexp"})


def verify(theorem: str, inputs: list, tol: float = SPECTRUM_TOL, names=None, **options) -> Verdict:
    """Run one theorem on the given inputs."""
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    names = list(names) if names is not None else [repr(x) for x in inputs]
    ck = _Checks(tol)
    start = time.perf_counter()
    try:
        THEOREMS[theorem](inputs, ck, **options)
    except (HypothesisViolated, NotStronglyConnected) as exc:
        cond = getattr(exc, "condition", "strongly connected")
        return Verdict(theorem, "SKIP", names, ck.items, cond, str(exc),
                       time.perf_counter() - start)
    status = "PASS" if ck.items and all(c["ok"] for c in ck.items) else "FAIL"
    return Verdict(theorem, status, names, ck.items, None, "", time.perf_counter() - start)
