"""Brute-force spectral oracle.

Eigenvalues of a real dense matrix are computed without LAPACK's eigen
drivers: diagonal balancing, reduction to upper Hessenberg form with
Householder reflectors, then Francis double-shift QR iterations with
deflation.  Only eigenvalues are produced; eigenvectors come from kernels
of ``m - z I`` refined by inverse iteration.

Tolerances passed as ``tol`` are relative: the absolute threshold used is
``tol * (1 + ||m||_inf)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    CardinalityMismatch,
    ExactModeUnavailable,
    NoConvergence,
    NonSquare,
    NotAnEigenvalue,
)
from .linalg import _bareiss, as_integer_matrix, is_integer_matrix

MAX_ORDER = 4096
CLUSTER_TOL = 1e-8
RANK_TOL = 1e-10

_EPS = np.finfo(float).eps


def norm_inf(m) -> float:
    m = np.asarray(m)
    return float(np.abs(m).sum(axis=1).max()) if m.size else 0.0


def _threshold(m, tol) -> float:
    return tol * (1.0 + norm_inf(m))


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------

def _sort_key(z: complex):
    return (-round(z.real, 9), round(z.imag, 9))


def _cluster(values: Sequence[complex], thresh: float) -> list:
    """Single-linkage clusters of ``values`` at distance ``thresh``."""
    vals = [complex(v) for v in values]
    order = sorted(range(len(vals)), key=lambda i: vals[i].real)
    parent = list(range(len(vals)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, i in enumerate(order):
        for j in order[a + 1:]:
            if vals[j].real - vals[i].real > thresh:
                break
            if abs(vals[j] - vals[i]) <= thresh:
                parent[find(j)] = find(i)
    groups = {}
    for i in range(len(vals)):
        groups.setdefault(find(i), []).append(vals[i])
    out = []
    for members in groups.values():
        mean = sum(members) / len(members)
        if abs(mean.imag) <= thresh:
            mean = complex(mean.real, 0.0)
        out.append((mean, len(members)))
    return out


@dataclass(frozen=True)
class Spectrum:
    """Multiset of complex eigenvalues as ``(value, multiplicity)`` items.

    Items are kept sorted by real part descending, then imaginary part
    ascending.
    """

    items: tuple

    def __post_init__(self):
        items = tuple(sorted(((complex(z), int(m)) for z, m in self.items if m > 0),
                             key=lambda it: _sort_key(it[0])))
        object.__setattr__(self, "items", items)

    @classmethod
    def from_values(cls, values: Iterable, tol: float | None = None) -> "Spectrum":
        """Cluster raw values; ``tol`` is absolute (default ``1e-9 (1 + max|v|)``)."""
        vals = [complex(v) for v in values]
        if tol is None:
            tol = 1e-9 * (1.0 + max((abs(v) for v in vals), default=0.0))
        return cls(tuple(_cluster(vals, tol)))

    @property
    def order(self) -> int:
        return sum(m for _, m in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def values(self) -> list:
        return [z for z, m in self.items for _ in range(m)]

    def distinct(self) -> list:
        return [z for z, _ in self.items]

    def multiplicity(self, z: complex, tol: float = 1e-8) -> int:
        return sum(m for w, m in self.items if abs(w - z) <= tol * (1 + abs(z)))

    def contains(self, z: complex, tol: float = 1e-8) -> bool:
        return self.multiplicity(z, tol) > 0

    def perron(self) -> complex:
        """Representative with the largest real part."""
        return max(self.distinct(), key=lambda z: (z.real, -abs(z.imag)))

    def map(self, f) -> "Spectrum":
        return Spectrum(tuple((f(z), m) for z, m in self.items))

    def __add__(self, other: "Spectrum") -> "Spectrum":
        return Spectrum.from_values(self.values() + other.values())

    def has_nonreal(self, tol: float = 1e-9) -> bool:
        return any(abs(z.imag) > tol * (1 + abs(z)) for z in self.distinct())

    def __repr__(self):
        parts = []
        for z, m in self.items:
            s = f"{z.real:.6g}" if z.imag == 0 else f"{z:.6g}"
            parts.append(s if m == 1 else f"{s}^({m})")
        return "{" + ", ".join(parts) + "}"


# ---------------------------------------------------------------------------
# Eigensolver
# ---------------------------------------------------------------------------

def _as_square(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {m.shape}")
    return m


def balance(a) -> np.ndarray:
    """Diagonal similarity by powers of two equalising row and column norms."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    radix, sqrdx = 2.0, 4.0
    done = False
    while not done:
        done = True
        for i in range(n):
            c = np.abs(a[:, i]).sum() - abs(a[i, i])
            r = np.abs(a[i, :]).sum() - abs(a[i, i])
            if c == 0.0 or r == 0.0:
                continue
            s = c + r
            f = 1.0
            g = r / radix
            while c < g:
                f *= radix
                c *= sqrdx
            g = r * radix
            while c > g:
                f /= radix
                c /= sqrdx
            if (c + r) / f < 0.95 * s:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(a) -> np.ndarray:
    """Upper Hessenberg matrix orthogonally similar to ``a``."""
    h = np.array(a, dtype=float)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0 or np.all(x[1:] == 0.0):
            continue
        v = x.copy()
        v[0] += math.copysign(alpha, x[0])
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v)
        h[k + 2:, k] = 0.0
    return h


def _reflector(x):
    scale = max(abs(t) for t in x)
    if scale == 0.0:
        return None, 0.0
    v = np.array(x, dtype=float) / scale
    v[0] += math.copysign(math.sqrt(float(v @ v)), v[0])
    return v, 2.0 / float(v @ v)


def _eig2(a, b, c, d):
    p = 0.5 * (a - d)
    disc = p * p + b * c
    if disc >= 0.0:
        z = p + math.copysign(math.sqrt(disc), p)
        if z == 0.0:
            return complex(d), complex(d)
        return complex(d + z), complex(d - (b / z) * c)
    mid = 0.5 * (a + d)
    w = math.sqrt(-disc)
    return complex(mid, w), complex(mid, -w)


def _francis_step(h, lo, hi, r1, r2):
    """One implicit double-shift QR sweep on the window ``h[lo:hi+1, lo:hi+1]``.

    The shifts ``r1, r2`` are both real or a conjugate pair.  The first
    column of ``(H - r1)(H - r2)`` is formed from differences so that it
    keeps its relative accuracy when the shifts are nearly exact.
    """
    h00, h10 = h[lo, lo], h[lo + 1, lo]
    scale = abs(h00 - r2.real) + abs(r2.imag) + abs(h10)
    if scale == 0.0:
        return
    h10s = h10 / scale
    x = h10s * h[lo, lo + 1] + (h00 - r1.real) * ((h00 - r2.real) / scale) - r1.imag * (r2.imag / scale)
    y = h10s * (h00 + h[lo + 1, lo + 1] - r1.real - r2.real)
    z = h10s * h[lo + 2, lo + 1]
    for k in range(lo, hi - 1):
        v, beta = _reflector((x, y, z))
        if v is not None:
            q = max(lo, k - 1)
            blk = h[k:k + 3, q:hi + 1]
            blk -= beta * np.outer(v, v @ blk)
            r = min(k + 3, hi)
            blk = h[lo:r + 1, k:k + 3]
            blk -= beta * np.outer(blk @ v, v)
            if k > lo:
                h[k + 1, k - 1] = 0.0
                h[k + 2, k - 1] = 0.0
        x = h[k + 1, k]
        y = h[k + 2, k]
        if k < hi - 2:
            z = h[k + 3, k]
    v, beta = _reflector((x, y))
    if v is not None:
        blk = h[hi - 1:hi + 1, hi - 2:hi + 1]
        blk -= beta * np.outer(v, v @ blk)
        blk = h[lo:hi + 1, hi - 1:hi + 1]
        blk -= beta * np.outer(blk @ v, v)
        h[hi, hi - 2] = 0.0


def _negligible(h, k) -> bool:
    """Ahues-Tisseur refinement of the deflation test: ``h[k, k-1]`` is
    dropped only when its product with ``h[k-1, k]`` is also small against
    the local diagonal data."""
    sub, sup = abs(h[k, k - 1]), abs(h[k - 1, k])
    ab, ba = max(sub, sup), min(sub, sup)
    p, q = abs(h[k, k]), abs(h[k - 1, k - 1] - h[k, k])
    aa, bb = max(p, q), min(p, q)
    s = aa + ab
    if s == 0.0:
        return True
    return ba * (ab / s) <= max(np.finfo(float).tiny, _EPS * (bb * (aa / s)))


def hessenberg_eigenvalues(h, max_iterations: int | None = None) -> np.ndarray:
    h = np.array(h, dtype=float)
    n = h.shape[0]
    if max_iterations is None:
        max_iterations = 30 * max(n, 10)
    eig = np.zeros(n, dtype=complex)
    hnorm = max(np.abs(h).max(), np.finfo(float).tiny) if n else 1.0
    hi = n - 1
    its = total = 0
    while hi >= 0:
        lo = 0
        for k in range(hi, 0, -1):
            s = abs(h[k - 1, k - 1]) + abs(h[k, k])
            if s == 0.0:
                s = hnorm
            if abs(h[k, k - 1]) <= _EPS * s and _negligible(h, k):
                h[k, k - 1] = 0.0
                lo = k
                break
        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            its = 0
            continue
        if lo == hi - 1:
            eig[hi - 1], eig[hi] = _eig2(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
            hi -= 2
            its = 0
            continue
        if total >= max_iterations:
            raise NoConvergence(max_iterations)
        its += 1
        total += 1
        if its % 10 == 0:
            # exceptional shift after a stall, alternating ends of the window
            if its % 20 == 10:
                w = abs(h[lo + 1, lo]) + abs(h[lo + 2, lo + 1])
                h11 = 0.75 * w + h[lo, lo]
            else:
                w = abs(h[hi, hi - 1]) + abs(h[hi - 1, hi - 2])
                h11 = 0.75 * w + h[hi, hi]
            a, b, c, d = h11, -0.4375 * w, w, h11
        else:
            a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
            c, d = h[hi, hi - 1], h[hi, hi]
        r1, r2 = _eig2(a, b, c, d)
        if r1.imag == 0.0:
            # two real shifts: use the one nearer the corner twice
            r1 = r2 = r1 if abs(r1.real - d) <= abs(r2.real - d) else r2
        _francis_step(h, lo, hi, r1, r2)
    return eig


def eigenvalues_raw(m, max_order: int = MAX_ORDER, max_iterations: int | None = None) -> np.ndarray:
    """All ``n`` eigenvalues (with repetition) of a real square matrix."""
    m = _as_square(m)
    if np.iscomplexobj(m):
        raise TypeError("eigensolver accepts real matrices only")
    n = m.shape[0]
    if n > max_order:
        raise ValueError(f"order {n} exceeds the configured cap {max_order}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    if n == 0:
        return np.zeros(0, dtype=complex)
    out = []
    for block in irreducible_blocks(m):
        sub = m[np.ix_(block, block)].astype(float)
        if len(block) == 1:
            out.append(complex(sub[0, 0]))
        else:
            out.extend(hessenberg_eigenvalues(hessenberg(balance(sub)), max_iterations))
    return np.array(out, dtype=complex)


def irreducible_blocks(m) -> list:
    """Index sets of the strongly connected components of the nonzero pattern.

    Permuting ``m`` by these components makes it block triangular, so its
    spectrum is the union of the diagonal blocks' spectra.  Reducible
    inputs then lose no accuracy to spurious coupling between blocks.
    """
    count, labels = connected_components(csr_matrix(np.asarray(m) != 0), directed=True,
                                         connection="strong")
    return [np.flatnonzero(labels == c) for c in range(count)]


def eigenvalues(m, tol: float = CLUSTER_TOL, max_order: int = MAX_ORDER,
                max_iterations: int | None = None) -> Spectrum:
    raw = eigenvalues_raw(m, max_order, max_iterations)
    return Spectrum(tuple(_cluster(raw, _threshold(m, tol))))


# ---------------------------------------------------------------------------
# Kernels, ranks, multiplicities
# ---------------------------------------------------------------------------

def _shifted(m, z) -> np.ndarray:
    m = _as_square(m)
    z = complex(z)
    if z.imag == 0.0:
        return np.asarray(m, dtype=float) - z.real * np.eye(m.shape[0])
    return np.asarray(m, dtype=complex) - z * np.eye(m.shape[0])


def singular_values(m) -> np.ndarray:
    return np.linalg.svd(np.asarray(m), compute_uv=False)


def numerical_rank(m, tol: float = RANK_TOL) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return int((singular_values(m) > _threshold(m, tol)).sum())


def null_space_basis(m, tol: float = RANK_TOL) -> list:
    """Orthonormal basis of the numerical kernel of ``m``."""
    m = _as_square(m)
    if m.shape[0] == 0:
        return []
    _, s, vh = np.linalg.svd(m)
    thresh = _threshold(m, tol)
    return [vh[i].conj() for i in range(len(s)) if s[i] <= thresh]


class Mode(str, enum.Enum):
    NUMERIC = "numeric"
    EXACT = "exact"


def _as_rational(z) -> Fraction:
    if isinstance(z, Rational):
        return Fraction(z)
    if isinstance(z, complex):
        if z.imag != 0:
            raise ExactModeUnavailable(f"{z} is not rational")
        z = z.real
    if isinstance(z, (float, np.floating)) and float(z).is_integer():
        return Fraction(int(z))
    if isinstance(z, (int, np.integer)):
        return Fraction(int(z))
    raise ExactModeUnavailable(f"exact mode needs an int or Fraction eigenvalue, got {z!r}")


def _scaled_integer_shift(m, z: Fraction) -> list:
    rows = as_integer_matrix(m)
    p, q = z.numerator, z.denominator
    return [[q * x - (p if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(rows)]


def geometric_multiplicity(m, z, mode=Mode.NUMERIC, tol: float = RANK_TOL) -> int:
    """``n - rank(m - z I)``; exact mode needs an integer matrix and rational ``z``."""
    mode = Mode(mode)
    m = _as_square(m)
    n = m.shape[0]
    if mode is Mode.EXACT:
        if not is_integer_matrix(m):
            raise ExactModeUnavailable("exact mode needs an integer matrix")
        shifted = _scaled_integer_shift(m, _as_rational(z))
        return n - _bareiss(shifted)[0]
    return n - numerical_rank(_shifted(m, z), tol)


def eigenspace_perp_ones(m, z, tol: float = 1e-8, kernel_tol: float = RANK_TOL) -> bool:
    """Whether every eigenvector of ``m`` for ``z`` sums to zero."""
    basis = null_space_basis(_shifted(m, z), kernel_tol)
    if not basis:
        raise NotAnEigenvalue(f"{z} is not an eigenvalue at tolerance {kernel_tol}")
    n = len(basis[0])
    return all(abs(v.sum()) <= tol * np.linalg.norm(v) * math.sqrt(n) for v in basis)


def _int_matmul(a: list, b: list) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _blocks_from_ranks(ranks: list) -> list:
    # ranks[p] = rank((m - zI)^p); blocks of size >= p number ranks[p-1] - ranks[p]
    at_least = [ranks[p - 1] - ranks[p] for p in range(1, len(ranks))] + [0]
    sizes = []
    for p in range(1, len(at_least)):
        sizes += [p] * (at_least[p - 1] - at_least[p])
    return sorted(sizes, reverse=True)


def jordan_structure_exact(m, z) -> list:
    """Jordan block sizes of an integer matrix at rational ``z`` (descending)."""
    base = _scaled_integer_shift(m, _as_rational(z))
    n = len(base)
    ranks = [n]
    power = [row[:] for row in base]
    while True:
        r = _bareiss([row[:] for row in power])[0]
        if r == ranks[-1]:
            break
        ranks.append(r)
        power = _int_matmul(power, base)
    return _blocks_from_ranks(ranks)


def jordan_structure_numeric(m, z, tol: float = 1e-9) -> list:
    """Block sizes from numerical ranks of powers; reliable only for small,
    well-separated fixtures."""
    base = _shifted(m, z)
    n = base.shape[0]
    ranks = [n]
    power = base.copy()
    while len(ranks) <= n:
        r = numerical_rank(power, tol)
        if r == ranks[-1]:
            break
        ranks.append(r)
        power = power @ base
    return _blocks_from_ranks(ranks)


@dataclass(frozen=True)
class JordanStructure:
    """Per-eigenvalue Jordan block sizes, each list sorted descending."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(((complex(z), tuple(sorted(sz, reverse=True)))
                               for z, sz in self.blocks if sz),
                              key=lambda it: _sort_key(it[0])))
        object.__setattr__(self, "blocks", blocks)

    def sizes_at(self, z, tol: float = 1e-8) -> list:
        out = []
        for w, sz in self.blocks:
            if abs(w - z) <= tol * (1 + abs(z)):
                out += sz
        return sorted(out, reverse=True)

    def spectrum(self) -> Spectrum:
        return Spectrum(tuple((z, sum(sz)) for z, sz in self.blocks))


def jordan_structure(m, tol: float = CLUSTER_TOL) -> JordanStructure:
    """Full Jordan structure: exact ranks at integer eigenvalues of integer
    matrices, numerical ranks elsewhere."""
    spec = eigenvalues(m, tol)
    exact = is_integer_matrix(m)
    blocks = []
    for z, _ in spec:
        if exact and z.imag == 0 and abs(z.real - round(z.real)) < 1e-6:
            sizes = jordan_structure_exact(m, int(round(z.real)))
            if sizes:
                blocks.append((complex(round(z.real)), sizes))
                continue
        blocks.append((z, jordan_structure_numeric(m, z)))
    return JordanStructure(tuple(blocks))


# ---------------------------------------------------------------------------
# Eigenvectors
# ---------------------------------------------------------------------------

def eigenpairs(m, spectrum: Spectrum | None = None, kernel_tol: float = 1e-7,
               refine_steps: int = 3) -> list:
    """``(z, v)`` pairs spanning each numerical eigenspace.

    Kernel vectors of ``m - zI`` are refined by subspace inverse iteration
    with a slightly perturbed shift, then re-orthonormalised.
    """
    m = np.asarray(_as_square(m), dtype=float)
    n = m.shape[0]
    spectrum = spectrum if spectrum is not None else eigenvalues(m)
    delta = 1e-12 * (1.0 + norm_inf(m))
    pairs = []
    for z, _ in spectrum:
        basis = null_space_basis(_shifted(m, z), kernel_tol)
        if not basis:
            continue
        x = np.column_stack(basis)
        if z.imag == 0:
            x = x.real if np.allclose(x.imag, 0) else x
        shifted = _shifted(m, z + delta) if z.imag == 0 else _shifted(m, z + delta * 1j)
        exact = _shifted(m, z)
        best = np.linalg.norm(exact @ x, axis=0).max()
        for _ in range(refine_steps):
            try:
                y = np.linalg.solve(shifted, x)
            except np.linalg.LinAlgError:
                break
            q, r = np.linalg.qr(y)
            if np.min(np.abs(np.diag(r))) <= 1e-14 * np.max(np.abs(np.diag(r))):
                break
            # on a Jordan block the perturbed shift drags in generalized vectors
            res = np.linalg.norm(exact @ q, axis=0).max()
            if res >= best:
                break
            x, best = q, res
        for k in range(x.shape[1]):
            pairs.append((z, x[:, k]))
    return pairs


def residual(m, z, v) -> float:
    m = np.asarray(m)
    return float(np.linalg.norm(m @ v - z * v))


# ---------------------------------------------------------------------------
# Multiset comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatchReport:
    ok: bool
    worst_deviation: float
    worst_excess: float  # max of deviation / allowed; <= 1 means within tolerance
    pairs: tuple = field(repr=False, default=())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "worst_deviation": self.worst_deviation,
                "worst_excess": self.worst_excess}


def _values_of(s) -> list:
    return s.values() if isinstance(s, Spectrum) else [complex(z) for z in s]


def spectrum_match(predicted, computed, tol: float = 1e-9, atol: float | None = None,
                   rtol: float | None = None) -> MatchReport:
    """Pair two multisets by minimum-cost assignment and compare each pair.

    A pair ``(p, c)`` passes when ``|p - c| <= atol + rtol |p|``; both
    default to ``tol``.
    """
    p = _values_of(predicted)
    c = _values_of(computed)
    if len(p) != len(c):
        raise CardinalityMismatch(f"{len(p)} predicted vs {len(c)} computed values")
    atol = tol if atol is None else atol
    rtol = tol if rtol is None else rtol
    if not p:
        return MatchReport(True, 0.0, 0.0)
    pa = np.array(p)
    ca = np.array(c)
    cost = np.abs(pa[:, None] - ca[None, :])
    rows, cols = linear_sum_assignment(cost)
    dev = cost[rows, cols]
    allowed = atol + rtol * np.abs(pa[rows])
    excess = np.where(allowed > 0, dev / np.where(allowed > 0, allowed, 1.0),
                      np.where(dev > 0, np.inf, 0.0))
    pairs = tuple((complex(pa[i]), complex(ca[j]), float(d)) for i, j, d in zip(rows, cols, dev))
    return MatchReport(bool(np.all(dev <= allowed)), float(dev.max()), float(excess.max()), pairs)
