"""Dense matrices attached to digraphs, Kronecker constructions, exact rank.

Real matrices are plain ``float64`` numpy arrays.  A matrix is treated as an
integer matrix (eligible for exact arithmetic) when it has an integer dtype
or all of its entries are integral; :func:`as_integer_matrix` does the check.
"""
from __future__ import annotations

import enum

import numpy as np

from .digraph import Digraph, distance_data, metrics
from .errors import ExactModeUnavailable, NonSquare, NotStronglyConnected


class MatrixKind(str, enum.Enum):
    A = "A"
    L = "L"
    Q = "Q"
    D = "D"
    DL = "DL"
    DQ = "DQ"

    @property
    def needs_distances(self) -> bool:
        return self in (MatrixKind.D, MatrixKind.DL, MatrixKind.DQ)


class Construction(str, enum.Enum):
    BOX_I = "BOX_I"  # M (x) I + I (x) M'
    BOX_J = "BOX_J"  # M (x) J + J (x) M'
    LEXP = "LEXP"    # M (x) J + I (x) M'


def adjacency(g: Digraph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.arcs:
        u, v = np.array(sorted(g.arcs)).T
        a[u, v] = 1.0
    return a


def digraph_matrix(g: Digraph, kind) -> np.ndarray:
    kind = MatrixKind(kind)
    if not kind.needs_distances:
        a = adjacency(g)
        if kind is MatrixKind.A:
            return a
        deg = np.diag(a.sum(axis=1))
        return deg - a if kind is MatrixKind.L else deg + a
    dd = distance_data(g)
    if not dd.strongly_connected:
        raise NotStronglyConnected(f"{kind.value} needs a strongly connected digraph")
    d = np.array(dd.dist, dtype=float)
    if kind is MatrixKind.D:
        return d
    t = np.diag(dd.transmissions)
    return t - d if kind is MatrixKind.DL else t + d


def _square(m, name="matrix") -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquare(f"{name} must be square, got shape {m.shape}")
    return m


def kronecker(a, b) -> np.ndarray:
    """Block matrix with ``(i*n' + j, k*n' + l)`` entry ``a[i,k] * b[j,l]``."""
    a = _square(a, "left factor")
    b = _square(b, "right factor")
    n, n2 = a.shape[0], b.shape[0]
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(n * n2, n * n2)


def construction(op, m, m2) -> np.ndarray:
    op = Construction(op)
    m = _square(m, "M")
    m2 = _square(m2, "M'")
    n, n2 = m.shape[0], m2.shape[0]
    if op is Construction.BOX_I:
        return kronecker(m, np.eye(n2)) + kronecker(np.eye(n), m2)
    if op is Construction.BOX_J:
        return kronecker(m, np.ones((n2, n2))) + kronecker(np.ones((n, n)), m2)
    return kronecker(m, np.ones((n2, n2))) + kronecker(np.eye(n), m2)


def is_integer_matrix(m) -> bool:
    m = np.asarray(m)
    if np.issubdtype(m.dtype, np.integer):
        return True
    if np.iscomplexobj(m):
        if np.any(m.imag != 0):
            return False
        m = m.real
    return bool(np.all(np.isfinite(m)) and np.all(m == np.round(m)))


def as_integer_matrix(m) -> list:
    """Entries as nested lists of Python ints (unbounded precision)."""
    if not is_integer_matrix(m):
        raise ExactModeUnavailable("matrix has non-integer entries")
    m = np.asarray(m)
    if np.iscomplexobj(m):
        m = m.real
    return [[int(round(x)) for x in row] for row in m.tolist()]


def _bareiss(rows: list) -> tuple:
    """Fraction-free elimination in place.  Returns (rank, sign, last pivot).

    After k pivots every updated entry is a (k+1)x(k+1) minor, so the
    division by the previous pivot is exact.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank, sign, prev = 0, 1, 1
    for col in range(nc):
        if rank == nr:
            break
        piv = next((r for r in range(rank, nr) if rows[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
            sign = -sign
        p = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, nr):
            row = rows[r]
            f = row[col]
            for c in range(col + 1, nc):
                row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, sign, prev


def exact_rank(m) -> int:
    """Rank over the rationals of an integer matrix."""
    rows = as_integer_matrix(m)
    if not rows:
        return 0
    return _bareiss(rows)[0]


def exact_det(m) -> int:
    rows = as_integer_matrix(_square(m))
    n = len(rows)
    if n == 0:
        return 1
    rank, sign, last = _bareiss(rows)
    return 0 if rank < n else sign * last
