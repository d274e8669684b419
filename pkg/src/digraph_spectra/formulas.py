"""Closed-form spectra, geometric multiplicities and eigenvectors for the
Kronecker constructions and the digraph products.

Factor spectra enter through :class:`FactorSpectralData`.  When a factor has
constant row sums its Perron value is the row sum itself (exact), and its
Perron eigenvector is the all-ones vector.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from . import eigen
from .digraph import Digraph, is_strongly_connected, metrics
from .eigen import JordanStructure, Spectrum, norm_inf
from .errors import (
    DenominatorVanishes,
    HypothesisViolated,
    NotTransmissionRegular,
    OrderMismatch,
    PerronNotSimple,
)
from .linalg import MatrixKind, adjacency, digraph_matrix, is_integer_matrix

log = logging.getLogger(__name__)

#: Relative tolerance for "z is an eigenvalue of X" tests.
MEMBER_TOL = 1e-7
#: Relative rank tolerance for geometric multiplicities at known eigenvalues.
GMULT_TOL = 1e-8
#: Denominators below this (times the natural scale) are treated as zero.
DENOM_TOL = 1e-12


# ---------------------------------------------------------------------------
# Factor data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorSpectralData:
    """Spectrum of a factor split as Perron value plus the rest.

    ``eigvecs`` is an optional tuple of ``(eigenvalue, vector)`` pairs whose
    first entry, when the factor has constant row sums, is ``(rho, ones)``.
    """

    n: int
    rho: complex
    rest: tuple
    eigvecs: tuple = field(default=(), repr=False)
    constant_rows: bool = False

    def __post_init__(self):
        if 1 + len(self.rest) != self.n:
            raise OrderMismatch(f"1 + {len(self.rest)} eigenvalues for order {self.n}")

    def values(self) -> list:
        return [complex(self.rho)] + [complex(z) for z in self.rest]

    def spectrum(self) -> Spectrum:
        return Spectrum.from_values(self.values())


def constant_row_sum(m, tol: float = 1e-12):
    """Common row sum of ``m`` or None."""
    rs = np.asarray(m).sum(axis=1)
    if np.ptp(rs) <= tol * (1 + np.abs(rs).max()):
        return float(rs[0])
    return None


def factor_data(m, with_eigvecs: bool = False, rho=None) -> FactorSpectralData:
    """Numerical factor data from the eigensolver.

    ``rho`` may be supplied as an exact value; otherwise the constant row
    sum is used when present, else the eigenvalue of largest real part.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    spec = eigen.eigenvalues(m)
    rs = constant_row_sum(m)
    if rho is None:
        rho = rs if rs is not None else spec.perron().real
    vals = spec.values()
    k = min(range(n), key=lambda i: abs(vals[i] - rho))
    rest = tuple(vals[:k] + vals[k + 1:])
    pairs = ()
    if with_eigvecs:
        found = eigen.eigenpairs(m, spec)
        if rs is not None:
            at_rho = [i for i, (z, _) in enumerate(found) if abs(z - rho) <= 1e-8 * (1 + abs(rho))]
            if at_rho:
                found.pop(at_rho[0])
            found.insert(0, (complex(rho), np.ones(n)))
        pairs = tuple(found)
    return FactorSpectralData(n, complex(rho), rest, pairs, rs is not None)


def digraph_factor_data(g: Digraph, kind, with_eigvecs: bool = False) -> FactorSpectralData:
    return factor_data(digraph_matrix(g, kind), with_eigvecs)


# ---------------------------------------------------------------------------
# Pairwise formulas
# ---------------------------------------------------------------------------

def _values(s) -> list:
    if isinstance(s, FactorSpectralData):
        return s.values()
    if isinstance(s, Spectrum):
        return s.values()
    return [complex(z) for z in s]


def spec_box_i(s1, s2) -> Spectrum:
    """All pairwise sums."""
    return Spectrum.from_values([a + b for a in _values(s1) for b in _values(s2)])


def spec_direct(s1, s2) -> Spectrum:
    return Spectrum.from_values([a * b for a in _values(s1) for b in _values(s2)])


def spec_strong(s1, s2) -> Spectrum:
    return Spectrum.from_values([a * b + a + b for a in _values(s1) for b in _values(s2)])


def spec_box_j(f: FactorSpectralData, f2: FactorSpectralData) -> Spectrum:
    n, n2 = f.n, f2.n
    vals = [n * f2.rho + n2 * f.rho]
    vals += [n2 * z for z in f.rest]
    vals += [n * z for z in f2.rest]
    vals += [0.0] * ((n - 1) * (n2 - 1))
    if len(vals) != n * n2:
        raise OrderMismatch(f"{len(vals)} values for order {n * n2}")
    return Spectrum.from_values(vals)


def spec_lexp_construction(f: FactorSpectralData, f2: FactorSpectralData) -> Spectrum:
    """``{n' l + rho' : l in spec M} u {l'_j ^(n) : j >= 2}``."""
    n, n2 = f.n, f2.n
    vals = [n2 * z + f2.rho for z in f.values()]
    vals += [z for z in f2.rest for _ in range(n)]
    if len(vals) != n * n2:
        raise OrderMismatch(f"{len(vals)} values for order {n * n2}")
    return Spectrum.from_values(vals)


# ---------------------------------------------------------------------------
# Cartesian products of digraphs
# ---------------------------------------------------------------------------

def _transmission(g: Digraph, name: str) -> float:
    if not is_strongly_connected(g):
        raise NotTransmissionRegular(f"{name} is not strongly connected")
    mt = metrics(g)
    if not mt.is_transmission_regular:
        raise NotTransmissionRegular(f"{name} has transmissions {sorted(set(mt.transmissions))}")
    return mt.transmission


def spec_cartesian(g: Digraph, h: Digraph, kind) -> Spectrum:
    """Spectrum of a matrix of ``g □ h`` from the factors' spectra."""
    kind = MatrixKind(kind)
    if not kind.needs_distances:
        return spec_box_i(eigen.eigenvalues(digraph_matrix(g, kind)),
                          eigen.eigenvalues(digraph_matrix(h, kind)))
    t, t2 = _transmission(g, "g"), _transmission(h, "h")
    n, n2 = g.n, h.n
    zeros = (n - 1) * (n2 - 1)
    top = n * t2 + n2 * t
    if kind is MatrixKind.D:
        return spec_box_j(factor_data(digraph_matrix(g, kind), rho=t),
                          factor_data(digraph_matrix(h, kind), rho=t2))
    if kind is MatrixKind.DL:
        f = factor_data(digraph_matrix(g, kind), rho=0.0)
        f2 = factor_data(digraph_matrix(h, kind), rho=0.0)
        vals = [0.0] + [n * t2 + n2 * z for z in f.rest] + [n2 * t + n * z for z in f2.rest]
    else:
        f = factor_data(digraph_matrix(g, kind), rho=2 * t)
        f2 = factor_data(digraph_matrix(h, kind), rho=2 * t2)
        vals = [2 * top] + [n * t2 + n2 * z for z in f.rest] + [n2 * t + n * z for z in f2.rest]
    return Spectrum.from_values(vals + [top] * zeros)


# ---------------------------------------------------------------------------
# Jordan structure of M (x) J + J (x) M'
# ---------------------------------------------------------------------------

def _merge_blocks(entries, tol: float = 1e-9) -> JordanStructure:
    merged = []
    for z, sizes in entries:
        for i, (w, acc) in enumerate(merged):
            if abs(w - z) <= tol * (1 + abs(z)):
                merged[i] = (w, acc + list(sizes))
                break
        else:
            merged.append((complex(z), list(sizes)))
    return JordanStructure(tuple(merged))


def _drop_perron(j: JordanStructure, rho, name: str) -> list:
    sizes = j.sizes_at(rho)
    if sizes != [1]:
        raise PerronNotSimple(f"{name} has blocks {sizes} at its Perron value {rho}")
    out = []
    for z, sz in j.blocks:
        if abs(z - rho) <= 1e-8 * (1 + abs(rho)):
            continue
        out.append((z, list(sz)))
    return out


def jordan_box_j(jm: JordanStructure, rho, jm2: JordanStructure, rho2, n: int, n2: int) -> JordanStructure:
    """Jordan structure of the construction from the factors' structures.

    Non-Perron blocks of ``M'`` keep their sizes with eigenvalues scaled by
    ``n``; those of ``M`` are scaled by ``n'``.  One more 1-block sits at
    ``n rho' + n' rho`` and ``(n-1)(n'-1)`` 1-blocks at 0.
    """
    rest = _drop_perron(jm, rho, "M")
    rest2 = _drop_perron(jm2, rho2, "M'")
    entries = [(n * rho2 + n2 * rho, [1])]
    entries += [(n * z, sz) for z, sz in rest2]
    entries += [(n2 * z, sz) for z, sz in rest]
    zeros = (n - 1) * (n2 - 1)
    if zeros:
        entries.append((0.0, [1] * zeros))
    return _merge_blocks(entries)


def jordan_box_j_from_matrices(m, m2) -> JordanStructure:
    rho, rho2 = constant_row_sum(m), constant_row_sum(m2)
    if rho is None or rho2 is None:
        raise HypothesisViolated("constant row sums")
    return jordan_box_j(eigen.jordan_structure(m), rho, eigen.jordan_structure(m2), rho2,
                        np.shape(m)[0], np.shape(m2)[0])


# ---------------------------------------------------------------------------
# Eigenvectors
# ---------------------------------------------------------------------------

def _ones_perp_basis(n: int) -> list:
    return eigen.null_space_basis(np.ones((n, n)))


def _is_perron(z, rho) -> bool:
    return abs(z - rho) <= 1e-8 * (1 + abs(rho))


def eigvecs_box_j(f: FactorSpectralData, f2: FactorSpectralData) -> list:
    """Eigenpairs of ``M (x) J + J (x) M'`` built from factor eigenpairs."""
    n, n2 = f.n, f2.n
    one, one2 = np.ones(n), np.ones(n2)
    rho, rho2 = f.rho, f2.rho
    top = n * rho2 + n2 * rho
    out = [(top, np.kron(one, one2))]
    for lam, v in f.eigvecs:
        if _is_perron(lam, rho):
            continue
        den = n2 * lam - n2 * rho - n * rho2
        if abs(den) <= DENOM_TOL * (1 + abs(n2 * lam) + abs(top)):
            raise DenominatorVanishes(f"n' lambda - n' rho - n rho' = 0 at lambda = {lam}")
        gamma = v.sum() * rho2 / den
        out.append((n2 * lam, np.kron(v, one2) + gamma * np.kron(one, one2)))
    for lam, v in f2.eigvecs:
        if _is_perron(lam, rho2):
            continue
        den = n * lam - n * rho2 - n2 * rho
        if abs(den) <= DENOM_TOL * (1 + abs(n * lam) + abs(top)):
            raise DenominatorVanishes(f"n lambda' - n rho' - n' rho = 0 at lambda' = {lam}")
        gamma = v.sum() * rho / den
        out.append((n * lam, np.kron(one, v) + gamma * np.kron(one, one2)))
    for z in _ones_perp_basis(n):
        for z2 in _ones_perp_basis(n2):
            out.append((0.0, np.kron(z, z2)))
    return out


@dataclass(frozen=True)
class LexpEigvecs:
    pairs: list
    skipped: list  # (i, j, denominator) triples left out
    rank: int


def eigvecs_lexp(f: FactorSpectralData, f2: FactorSpectralData) -> LexpEigvecs:
    """Eigenpairs of ``M (x) J + I (x) M'``.

    Family one is ``v_i (x) 1`` at ``n' l_i + rho'``; family two is
    ``v_i (x) v'_j + gamma_ij v_i (x) 1`` at ``l'_j``.
    """
    n2 = f2.n
    one2 = np.ones(n2)
    pairs, skipped = [], []
    for lam, v in f.eigvecs:
        pairs.append((n2 * lam + f2.rho, np.kron(v, one2)))
    for i, (lam, v) in enumerate(f.eigvecs):
        for j, (lam2, v2) in enumerate(f2.eigvecs):
            if _is_perron(lam2, f2.rho):
                continue
            den = f2.rho + n2 * lam - lam2
            if abs(den) <= DENOM_TOL * (1 + abs(f2.rho) + abs(n2 * lam) + abs(lam2)):
                log.warning("skipping eigenvector (%d, %d): denominator %.3g", i, j, abs(den))
                skipped.append((i, j, den))
                continue
            gamma = -lam * v2.sum() / den
            pairs.append((lam2, np.kron(v, v2) + gamma * np.kron(v, one2)))
    rank = eigen.numerical_rank(np.column_stack([w for _, w in pairs]), 1e-8) if pairs else 0
    return LexpEigvecs(pairs, skipped, rank)


def complement_shift(f: FactorSpectralData) -> FactorSpectralData:
    """Factor data of ``B = A + 2 A(complement)`` for an ``r``-out-regular digraph.

    ``B = 2J - 2I - A`` has Perron value ``2n - 2 - r`` and eigenvalues
    ``-(alpha + 2)``; eigenvectors shift to ``v + beta 1``.
    """
    n, r = f.n, f.rho
    rho_b = 2 * n - 2 - r
    rest = tuple(-(z + 2) for z in f.rest)
    pairs = []
    if f.eigvecs:
        pairs.append((rho_b, np.ones(n)))
        for alpha, v in f.eigvecs:
            if _is_perron(alpha, r):
                continue
            beta = 2 * v.sum() / (r - alpha - 2 * n)
            pairs.append((-(alpha + 2), v + beta))
    return FactorSpectralData(n, complex(rho_b), rest, tuple(pairs), True)


def complement_shift_gmult(a, z) -> int:
    """``gmult_B(z)`` from ``A``: ``gmult_A(-z-2)``, less one at ``z = -r-2``.

    ``B`` is positive off the diagonal, so its Perron value ``2n - 2 - r``
    is simple.
    """
    r = constant_row_sum(a)
    if r is None:
        raise HypothesisViolated("out-regular")
    n = np.shape(a)[0]
    if abs(z - (2 * n - 2 - r)) <= 1e-9 * (1 + abs(z)):
        return 1
    w = -z - 2
    g = _gmult_at(np.asarray(a, dtype=float), w)
    return g - 1 if abs(w - r) <= 1e-9 * (1 + abs(r)) else g


def complement_shift_matrix(a) -> np.ndarray:
    n = np.shape(a)[0]
    return 2 * np.ones((n, n)) - 2 * np.eye(n) - np.asarray(a, dtype=float)


# ---------------------------------------------------------------------------
# Geometric multiplicity of M (x) J + I (x) M'
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GmultQuery:
    """Everything the five-case formula looked at, and its answer."""

    z: complex
    z_tilde: complex
    z_hat: complex
    in_g: bool
    in_h: bool
    g: int
    g_prime: int
    perp: bool | None
    case: int
    value: int

    def to_dict(self) -> dict:
        c = lambda w: [w.real, w.imag]
        return {"z": c(self.z), "z_tilde": c(self.z_tilde), "z_hat": c(self.z_hat),
                "in_g": self.in_g, "in_h": self.in_h, "g": self.g, "g_prime": self.g_prime,
                "perp": self.perp, "case": self.case, "value": self.value}


def _nearest(spec: Spectrum, z: complex, thresh: float):
    best = min(spec.distinct(), key=lambda w: abs(w - z), default=None)
    if best is not None and abs(best - z) <= thresh:
        return best
    return None


def _gmult_at(m, z) -> int:
    z = complex(z)
    if is_integer_matrix(m) and z.imag == 0 and abs(z.real - round(z.real)) <= 1e-9 * (1 + abs(z)):
        return eigen.geometric_multiplicity(m, int(round(z.real)), eigen.Mode.EXACT)
    return eigen.geometric_multiplicity(m, z, eigen.Mode.NUMERIC, GMULT_TOL)


def _five_cases(x, spec_x, y, spec_y, excluded, n, z, z_tilde, z_hat) -> GmultQuery:
    rep_x = _nearest(spec_x, z_tilde, MEMBER_TOL * (1 + norm_inf(x)))
    rep_y = _nearest(spec_y, z_hat, MEMBER_TOL * (1 + norm_inf(y)))
    in_g = rep_x is not None
    in_h = rep_y is not None and abs(rep_y - excluded) > MEMBER_TOL * (1 + abs(excluded))
    g = _gmult_at(x, rep_x) if in_g else 0
    g2 = _gmult_at(y, rep_y) if in_h else 0
    perp = None
    if in_g and in_h:
        perp = eigen.eigenspace_perp_ones(y, rep_y, tol=1e-8, kernel_tol=GMULT_TOL)
        case, value = (3, n * g2 + g) if perp else (4, n * g2)
    elif in_g:
        case, value = 1, g
    elif in_h:
        case, value = 2, n * g2
    else:
        case, value = 5, 0
    return GmultQuery(complex(z), complex(z_tilde), complex(z_hat), in_g, in_h, g, g2, perp,
                      case, value)


def lexp_gmult_query(m, m2, z) -> GmultQuery:
    m = np.asarray(m, dtype=float)
    m2 = np.asarray(m2, dtype=float)
    rho2 = constant_row_sum(m2)
    if rho2 is None:
        raise HypothesisViolated("constant row sums", "M' must have constant row sums")
    n, n2 = m.shape[0], m2.shape[0]
    z = complex(z)
    return _five_cases(m, eigen.eigenvalues(m), m2, eigen.eigenvalues(m2), rho2, n,
                       z, (z - rho2) / n2, z)


def gmult_lexp(m, m2, z) -> int:
    """Geometric multiplicity of ``z`` for ``M (x) J + I (x) M'``."""
    return lexp_gmult_query(m, m2, z).value


# ---------------------------------------------------------------------------
# Lexicographic products of digraphs
# ---------------------------------------------------------------------------

class LexpKind(str, enum.Enum):
    A = "A"
    L = "L"
    Q = "Q"
    D_GIRTH = "D-girth"
    D_DOUBLY = "D-doubly"
    DL_GIRTH = "DL-girth"
    DL_DOUBLY = "DL-doubly"
    DQ_GIRTH = "DQ-girth"
    DQ_DOUBLY = "DQ-doubly"

    @property
    def matrix(self) -> MatrixKind:
        return MatrixKind(self.value.split("-")[0])


@dataclass(frozen=True)
class LexpSetup:
    """Affine reparameterisation of the base theorem for one matrix kind.

    The product matrix has spectrum ``{n' x + c1 : x in spec X}`` together
    with ``n`` copies of each ``(y - b) / a`` for ``y`` in ``spec Y`` minus
    one copy of ``excluded``.  Multiplicities use ``z~ = (z - c1) / n'`` on
    ``X`` and ``z^ = a z + b`` on ``Y``.
    """

    kind: LexpKind
    x: np.ndarray
    y: np.ndarray
    c1: float
    a: float
    b: float
    excluded: float
    n: int
    n2: int

    def z_tilde(self, z):
        return (z - self.c1) / self.n2

    def z_hat(self, z):
        return self.a * z + self.b


def _require(cond: bool, name: str, detail: str = ""):
    if not cond:
        raise HypothesisViolated(name, detail)


def _check_lexp(g: Digraph, h: Digraph, kind: LexpKind):
    _require(is_strongly_connected(g), "g strongly connected")
    _require(is_strongly_connected(h), "h strongly connected")
    mg, mh = metrics(g), metrics(h)
    m = kind.matrix
    girth = kind in (LexpKind.D_GIRTH, LexpKind.DL_GIRTH, LexpKind.DQ_GIRTH)
    doubly = kind in (LexpKind.D_DOUBLY, LexpKind.DL_DOUBLY, LexpKind.DQ_DOUBLY)
    if kind in (LexpKind.L, LexpKind.Q):
        _require(mg.is_out_regular, "g out-regular")
    if kind in (LexpKind.A, LexpKind.L, LexpKind.Q) or doubly:
        _require(mh.is_out_regular, "h out-regular")
    if girth:
        _require(mh.is_transmission_regular, "h transmission regular")
        _require(mh.diameter <= mg.girth, "diam(h) <= girth(g)",
                 f"diam(h) = {mh.diameter:g}, girth(g) = {mg.girth:g}")
    if doubly:
        _require(mg.every_vertex_on_doubly_directed_arc, "every vertex of g on a doubly directed arc")
    if m in (MatrixKind.DL, MatrixKind.DQ):
        _require(mg.is_transmission_regular, "g transmission regular")
    return mg, mh


def resolve_lexp_kind(g: Digraph, h: Digraph, kind, regime: str = "auto") -> LexpKind:
    """Map a matrix kind plus regime (``auto``, ``girth``, ``doubly``) to a
    :class:`LexpKind`; ``auto`` prefers the long-girth form."""
    if isinstance(kind, LexpKind):
        return kind
    if kind in {k.value for k in LexpKind}:
        return LexpKind(kind)
    mk = MatrixKind(kind)
    if not mk.needs_distances:
        return LexpKind(mk.value)
    if regime == "girth":
        return LexpKind(f"{mk.value}-girth")
    if regime == "doubly":
        return LexpKind(f"{mk.value}-doubly")
    first = LexpKind(f"{mk.value}-girth")
    try:
        _check_lexp(g, h, first)
        return first
    except HypothesisViolated as exc:
        second = LexpKind(f"{mk.value}-doubly")
        try:
            _check_lexp(g, h, second)
            return second
        except HypothesisViolated as exc2:
            raise HypothesisViolated(exc.condition, f"and the doubly directed form fails on "
                                                    f"{exc2.condition}") from None


def lexp_setup(g: Digraph, h: Digraph, kind, regime: str = "auto") -> LexpSetup:
    kind = resolve_lexp_kind(g, h, kind, regime)
    mg, mh = _check_lexp(g, h, kind)
    n, n2 = g.n, h.n
    m = kind.matrix
    x = digraph_matrix(g, m)
    r = mg.out_degree
    r2 = mh.out_degree
    t = mg.transmission
    t2 = mh.transmission
    if kind is LexpKind.A:
        y, c1, a, b, excl = adjacency(h), r2, 1, 0, r2
    elif kind is LexpKind.L:
        y, c1, a, b, excl = digraph_matrix(h, "L"), 0, 1, -r * n2, 0
    elif kind is LexpKind.Q:
        y, c1, a, b, excl = digraph_matrix(h, "Q"), 2 * r2, 1, -r * n2, 2 * r2
    elif kind is LexpKind.D_GIRTH:
        y, c1, a, b, excl = digraph_matrix(h, "D"), t2, 1, 0, t2
    elif kind is LexpKind.D_DOUBLY:
        y, c1, a, b, excl = adjacency(h), 2 * n2 - 2 - r2, -1, -2, r2
    elif kind is LexpKind.DL_GIRTH:
        y, c1, a, b, excl = digraph_matrix(h, "DL"), 0, 1, -t * n2, 0
    elif kind is LexpKind.DQ_GIRTH:
        y, c1, a, b, excl = digraph_matrix(h, "DQ"), 2 * t2, 1, -t * n2, 2 * t2
    elif kind is LexpKind.DL_DOUBLY:
        y, c1, a, b, excl = adjacency(h), 0, 1, -t * n2 - 2 * n2 + r2, r2
    else:
        y, c1, a, b, excl = adjacency(h), 4 * n2 - 4 - 2 * r2, -1, t * n2 + 2 * n2 - r2 - 4, r2
    return LexpSetup(kind, x, y, float(c1), float(a), float(b), float(excl), n, n2)


def spec_lexp_digraph(g: Digraph, h: Digraph, kind, regime: str = "auto") -> Spectrum:
    s = lexp_setup(g, h, kind, regime)
    fx = factor_data(s.x)
    fy = factor_data(s.y, rho=s.excluded)
    vals = [s.n2 * z + s.c1 for z in fx.values()]
    vals += [(w - s.b) / s.a for w in fy.rest for _ in range(s.n)]
    return Spectrum.from_values(vals)


def lexp_digraph_gmult_query(g: Digraph, h: Digraph, kind, z, regime: str = "auto") -> GmultQuery:
    s = lexp_setup(g, h, kind, regime)
    z = complex(z)
    return _five_cases(s.x, eigen.eigenvalues(s.x), s.y, eigen.eigenvalues(s.y), s.excluded,
                       s.n, z, s.z_tilde(z), s.z_hat(z))


def gmult_lexp_digraph(g: Digraph, h: Digraph, kind, z, regime: str = "auto") -> int:
    return lexp_digraph_gmult_query(g, h, kind, z, regime).value


def eigvecs_lexp_digraph(g: Digraph, h: Digraph, kind, regime: str = "auto") -> LexpEigvecs:
    """Eigenpairs for the adjacency and distance matrices of ``g o h``."""
    s = lexp_setup(g, h, kind, regime)
    if s.kind not in (LexpKind.A, LexpKind.D_GIRTH, LexpKind.D_DOUBLY):
        raise HypothesisViolated("matrix kind", f"no eigenvector formula for {s.kind.value}")
    fx = factor_data(s.x, with_eigvecs=True)
    if s.kind is LexpKind.D_DOUBLY:
        fy = complement_shift(factor_data(s.y, with_eigvecs=True))
    else:
        fy = factor_data(s.y, with_eigvecs=True)
    return eigvecs_lexp(fx, fy)
