"""Directed strongly regular graphs, their spectra, and a fixture catalog.

A DSRG with parameters ``(n, k, s, a, c)`` is a digraph whose adjacency
matrix satisfies ``A^2 = s I + a A + c (J - I - A)`` and ``AJ = JA = kJ``.
"""
from __future__ import annotations

import enum
import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import eigen
from .digraph import Digraph, from_arc_list, is_strongly_connected, metrics
from .eigen import Spectrum
from .errors import (
    BadPrime,
    DegenerateDiscriminant,
    HypothesisViolated,
    InvalidParams,
    ShapeViolated,
)
from .linalg import adjacency
from .products import ProductKind, product


@dataclass(frozen=True)
class DsrgParams:
    n: int
    k: int
    s: int
    a: int
    c: int

    def __post_init__(self):
        vals = (self.n, self.k, self.s, self.a, self.c)
        if any(int(v) != v or v < 0 for v in vals):
            raise InvalidParams(f"parameters must be nonnegative integers, got {vals}")
        if not self.k < self.n:
            raise InvalidParams(f"need k < n, got k={self.k}, n={self.n}")
        if not self.s <= self.k:
            raise InvalidParams(f"need s <= k, got s={self.s}, k={self.k}")

    @property
    def discriminant(self) -> int:
        return (self.c - self.a) ** 2 + 4 * (self.s - self.c)

    def as_tuple(self) -> tuple:
        return (self.n, self.k, self.s, self.a, self.c)


def validate_dsrg(g: Digraph, p: DsrgParams) -> bool:
    """Exact integer check of both defining identities."""
    if g.n != p.n:
        return False
    a = adjacency(g).astype(np.int64)
    n = p.n
    j = np.ones((n, n), dtype=np.int64)
    i = np.eye(n, dtype=np.int64)
    if not (np.array_equal(a @ j, p.k * j) and np.array_equal(j @ a, p.k * j)):
        return False
    return bool(np.array_equal(a @ a, p.s * i + p.a * a + p.c * (j - i - a)))


def infer_dsrg_params(g: Digraph):
    """Parameters of ``g`` if it is a DSRG, else None."""
    a = adjacency(g).astype(np.int64)
    n = g.n
    k = int(a[0].sum())
    a2 = a @ a
    s = int(a2[0, 0])
    on = a2[a == 1]
    off = a2[(a == 0) & ~np.eye(n, dtype=bool)]
    if len(set(on.tolist())) > 1 or len(set(off.tolist())) > 1:
        return None
    aa = int(on[0]) if on.size else 0
    cc = int(off[0]) if off.size else 0
    try:
        p = DsrgParams(n, k, s, aa, cc)
    except InvalidParams:
        return None
    return p if validate_dsrg(g, p) else None


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DuvalSpectrum:
    """``theta1 = k`` (simple), ``theta2``, ``theta3`` with multiplicities.

    Values are ``Fraction`` when the discriminant is a perfect square,
    otherwise floats or complex numbers.
    """

    theta1: object
    theta2: object
    theta3: object
    mult1: int
    mult2: int
    mult3: int
    exact: bool

    def items(self) -> list:
        return [(self.theta1, self.mult1), (self.theta2, self.mult2), (self.theta3, self.mult3)]

    def spectrum(self) -> Spectrum:
        return Spectrum(tuple((complex(z), m) for z, m in self.items()))

    def map(self, f) -> Spectrum:
        """Spectrum of ``f(theta_i)`` with the same multiplicities."""
        return Spectrum(tuple((complex(f(z)), m) for z, m in self.items()))


def _isqrt_exact(d: int):
    if d < 0:
        return None
    r = math.isqrt(d)
    return r if r * r == d else None


def duval_spectrum(p: DsrgParams) -> DuvalSpectrum:
    d = p.discriminant
    if d == 0:
        raise DegenerateDiscriminant(f"(c-a)^2 + 4(s-c) = 0 for {p.as_tuple()}")
    root = _isqrt_exact(d)
    if root is not None:
        t2 = Fraction(p.a - p.c + root, 2)
        t3 = Fraction(p.a - p.c - root, 2)
        m2 = -(p.k + t3 * (p.n - 1)) / (t2 - t3)
        m3 = (p.k + t2 * (p.n - 1)) / (t2 - t3)
        if m2.denominator != 1 or m3.denominator != 1 or m2 < 0 or m3 < 0:
            raise InvalidParams(f"multiplicities {m2}, {m3} are not nonnegative integers")
        return DuvalSpectrum(Fraction(p.k), t2, t3, 1, int(m2), int(m3), True)
    sq = complex(d) ** 0.5 if d < 0 else math.sqrt(d)
    t2 = (p.a - p.c + sq) / 2
    t3 = (p.a - p.c - sq) / 2
    m2 = -(p.k + t3 * (p.n - 1)) / (t2 - t3)
    m3 = (p.k + t2 * (p.n - 1)) / (t2 - t3)
    out = []
    for m in (m2, m3):
        m = complex(m)
        if abs(m.imag) > 1e-9 or abs(m.real - round(m.real)) > 1e-9 or m.real < -1e-9:
            raise InvalidParams(f"multiplicity {m} is not a nonnegative integer")
        out.append(int(round(m.real)))
    return DuvalSpectrum(float(p.k), t2, t3, 1, out[0], out[1], False)


class DsrgKind(str, enum.Enum):
    A = "A"
    L = "L"
    Q = "Q"
    D = "D"
    DL = "DL"
    DQ = "DQ"


def dsrg_derived_spectra(p: DsrgParams, kind) -> Spectrum:
    """Three-eigenvalue spectra of the matrices of a DSRG."""
    kind = DsrgKind(kind)
    ds = duval_spectrum(p)
    n, k = p.n, p.k
    first = {
        DsrgKind.A: k, DsrgKind.L: 0, DsrgKind.Q: 2 * k,
        DsrgKind.D: 2 * n - 2 - k, DsrgKind.DL: 0, DsrgKind.DQ: 4 * n - 4 - 2 * k,
    }[kind]
    shift = {
        DsrgKind.A: lambda th: th,
        DsrgKind.L: lambda th: k - th,
        DsrgKind.Q: lambda th: k + th,
        DsrgKind.D: lambda th: -2 - th,
        DsrgKind.DL: lambda th: 2 * n - k + th,
        DsrgKind.DQ: lambda th: 2 * n - k - 4 - th,
    }[kind]
    return Spectrum(((complex(first), 1), (complex(shift(ds.theta2)), ds.mult2),
                     (complex(shift(ds.theta3)), ds.mult3)))


@dataclass(frozen=True)
class Diam2Result:
    spectrum: Spectrum
    k: int
    eigvecs: list  # (eigenvalue of D, vector)


def diam2_distance_spectrum(g: Digraph, with_eigvecs: bool = False) -> Diam2Result:
    """``spec D = {2n - 2 - k, -(alpha_i + 2)}`` for a k-regular digraph of
    diameter at most 2; adjacency eigenvectors for ``alpha != k`` carry over."""
    mt = metrics(g)
    if not mt.is_regular:
        raise HypothesisViolated("regular")
    if not is_strongly_connected(g) or mt.diameter > 2:
        raise HypothesisViolated("diameter <= 2", f"diameter is {mt.diameter:g}")
    k = mt.out_degree
    n = g.n
    a = adjacency(g)
    sa = eigen.eigenvalues(a)
    vals = sa.values()
    i = min(range(n), key=lambda j: abs(vals[j] - k))
    rest = vals[:i] + vals[i + 1:]
    spec = Spectrum.from_values([2 * n - 2 - k] + [-(z + 2) for z in rest])
    pairs = []
    if with_eigvecs:
        pairs.append((complex(2 * n - 2 - k), np.ones(n)))
        for z, v in eigen.eigenpairs(a, sa):
            if abs(z - k) > 1e-8 * (1 + k):
                pairs.append((-(z + 2), v))
    return Diam2Result(spec, k, pairs)


def diam2_gmult(g: Digraph, z) -> int:
    """``gmult_D(z)`` via the adjacency matrix: ``gmult_A(-z-2)``, minus one at ``-k-2``."""
    from .formulas import complement_shift_gmult

    return complement_shift_gmult(adjacency(g), z)


def cartesian_power_spectrum(t, partial2, m: int, n: int, ell: int) -> Spectrum:
    """``{l t n^(l-1), (d2 n^(l-1))^(m l), 0^(n^l - 1 - m l)}``."""
    if ell < 1:
        raise ShapeViolated(f"power must be >= 1, got {ell}")
    if not 0 <= m <= n - 1:
        raise ShapeViolated(f"multiplicity {m} does not fit order {n}")
    scale = n ** (ell - 1)
    zeros = n ** ell - 1 - m * ell
    return Spectrum(((complex(ell * t * scale), 1), (complex(partial2 * scale), m * ell),
                     (0j, zeros)))


def power_shape(spec: Spectrum, n: int, tol: float = 1e-8):
    """Read ``(t, d2, m)`` off a spectrum of shape ``{t, d2^(m), 0^(n-1-m)}``."""
    if spec.order != n:
        raise ShapeViolated(f"spectrum has {spec.order} values for order {n}")
    t = spec.perron()
    if spec.multiplicity(t, tol) != 1:
        raise ShapeViolated("Perron value is not simple")
    rest = [(z, mult) for z, mult in spec.items if abs(z - t) > tol * (1 + abs(t))]
    nonzero = [(z, mult) for z, mult in rest if abs(z) > tol * (1 + abs(t))]
    if len(nonzero) > 1:
        raise ShapeViolated(f"more than one nonzero eigenvalue besides the Perron value: {spec}")
    if not nonzero:
        return t.real, 0.0, 0
    z, mult = nonzero[0]
    return t.real, z, mult


def cartesian_power_from_spectrum(spec: Spectrum, n: int, ell: int) -> Spectrum:
    t, d2, m = power_shape(spec, n)
    return cartesian_power_spectrum(t, d2, m, n, ell)


class NonrealClass(str, enum.Enum):
    ALL_RATIONAL = "ALL_RATIONAL"
    NONREAL = "NONREAL"


def nonreal_classification(p: DsrgParams) -> NonrealClass:
    if (p.n, p.s, p.c) == (2 * p.k + 1, 0, p.a + 1):
        return NonrealClass.NONREAL
    return NonrealClass.ALL_RATIONAL


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def directed_cycle(n: int) -> Digraph:
    return from_arc_list(n, [(i, (i + 1) % n) for i in range(n)]) if n > 1 else Digraph(1)


def digon() -> Digraph:
    return from_arc_list(2, [(0, 1), (1, 0)])


def figure1() -> Digraph:
    """Transmission regular digraph of diameter two without an eigenvector basis."""
    return from_arc_list(4, [(0, 1), (1, 0), (0, 3), (3, 0), (1, 2), (2, 1), (2, 0), (3, 2)])


FIGURE2_DOUBLE = ((1, 3), (1, 6), (1, 7), (2, 4), (2, 5), (2, 6),
                  (3, 5), (3, 8), (4, 7), (4, 8), (5, 7), (6, 8))
FIGURE2_SINGLE = ((1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5))
FIGURE2_PARAMS = DsrgParams(8, 4, 3, 1, 3)


def figure2_arcs() -> list:
    """Arcs of the Gamma(8,4,3,1,3) drawing, 0-based."""
    arcs = []
    for u, v in FIGURE2_DOUBLE:
        arcs += [(u - 1, v - 1), (v - 1, u - 1)]
    arcs += [(u - 1, v - 1) for u, v in FIGURE2_SINGLE]
    return sorted(arcs)


def arcs_checksum(arcs) -> str:
    text = "\n".join(f"{u} {v}" for u, v in sorted(arcs))
    return hashlib.sha256(text.encode()).hexdigest()


FIGURE2_SHA256 = "5e6606e3e27f5f60a6ff9bf59e1c785145daf8a144d3bc1ad728ce16c69901c7"


def figure2_dsrg() -> Digraph:
    arcs = figure2_arcs()
    if arcs_checksum(arcs) != FIGURE2_SHA256:
        raise RuntimeError("Figure 2 arc list does not match its checksum")
    return from_arc_list(8, arcs)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def paley_tournament(p: int) -> Digraph:
    """Arc ``i -> j`` iff ``j - i`` is a nonzero square mod ``p``."""
    if not (_is_prime(p) and p % 4 == 3):
        raise BadPrime(f"{p} is not a prime congruent to 3 mod 4")
    squares = {x * x % p for x in range(1, p)}
    return from_arc_list(p, [(i, j) for i in range(p) for j in range(p)
                             if i != j and (j - i) % p in squares])


def paley_params(p: int) -> DsrgParams:
    k = (p - 1) // 2
    a = (p - 3) // 4
    return DsrgParams(p, k, 0, a, a + 1)


def cartesian_power(g: Digraph, ell: int) -> Digraph:
    if ell < 1:
        raise ValueError("power must be >= 1")
    out = g
    for _ in range(ell - 1):
        out = product(out, g, ProductKind.CARTESIAN)
    return out


def random_strongly_connected(n: int, seed: int, p: float = 0.35) -> Digraph:
    """Hamiltonian cycle on a shuffled order plus random extra arcs."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


CATALOG = {
    "c3": lambda: directed_cycle(3),
    "c4": lambda: directed_cycle(4),
    "c5": lambda: directed_cycle(5),
    "digon": digon,
    "figure1": figure1,
    "figure2": figure2_dsrg,
    "paley7": lambda: paley_tournament(7),
}


def generators() -> dict:
    """Named fixture constructors."""
    return dict(CATALOG)
