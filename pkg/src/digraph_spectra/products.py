"""The four digraph products and closed-form product distance matrices.

Vertex ``(x, x')`` of a product of ``g`` (order ``n``) and ``h`` (order
``n'``) is the integer ``x * n' + x'``.
"""
from __future__ import annotations

import enum

import numpy as np

from .digraph import INF, Digraph, distance_data, metrics
from .errors import NotStronglyConnected
from .linalg import adjacency, kronecker


class ProductKind(str, enum.Enum):
    CARTESIAN = "cartesian"
    LEXICOGRAPHIC = "lexicographic"
    DIRECT = "direct"
    STRONG = "strong"


def product_adjacency(g: Digraph, h: Digraph, kind) -> np.ndarray:
    kind = ProductKind(kind)
    a, b = adjacency(g), adjacency(h)
    ig, ih = np.eye(g.n), np.eye(h.n)
    if kind is ProductKind.CARTESIAN:
        return kronecker(a, ih) + kronecker(ig, b)
    if kind is ProductKind.LEXICOGRAPHIC:
        return kronecker(a, np.ones((h.n, h.n))) + kronecker(ig, b)
    if kind is ProductKind.DIRECT:
        return kronecker(a, b)
    return kronecker(a, ih) + kronecker(ig, b) + kronecker(a, b)


def product(g: Digraph, h: Digraph, kind) -> Digraph:
    """Product digraph with arcs built directly from the factor arc sets."""
    kind = ProductKind(kind)
    m = h.n
    arcs = set()
    cart = kind in (ProductKind.CARTESIAN, ProductKind.STRONG)
    if cart or kind is ProductKind.LEXICOGRAPHIC:
        # (x, x') -> (x, y') for every arc x' -> y' of h
        for x in range(g.n):
            arcs.update((x * m + u, x * m + v) for u, v in h.arcs)
    if cart:
        for x, y in g.arcs:
            arcs.update((x * m + u, y * m + u) for u in range(m))
    if kind is ProductKind.LEXICOGRAPHIC:
        for x, y in g.arcs:
            arcs.update((x * m + u, y * m + v) for u in range(m) for v in range(m))
    if kind in (ProductKind.DIRECT, ProductKind.STRONG):
        for x, y in g.arcs:
            arcs.update((x * m + u, y * m + v) for u, v in h.arcs)
    return Digraph(g.n * m, frozenset(arcs))


def cartesian_distance_matrix(g: Digraph, h: Digraph) -> np.ndarray:
    """``d((x,x'),(y,y')) = d(x,y) + d'(x',y')``."""
    dg, dh = _finite_dist(g, "g"), _finite_dist(h, "h")
    return (dg[:, None, :, None] + dh[None, :, None, :]).reshape(g.n * h.n, g.n * h.n)


def _finite_dist(g: Digraph, name: str) -> np.ndarray:
    dd = distance_data(g)
    if not dd.strongly_connected:
        raise NotStronglyConnected(f"{name} is not strongly connected")
    return np.array(dd.dist)


def lexicographic_distance_matrix(g: Digraph, h: Digraph) -> np.ndarray:
    """Distances in the lexicographic product from factor data.

    Off the diagonal blocks the distance is ``d_g(x, y)``; inside block
    ``x`` it is ``min(xi_g(x), d_h(x', y'))`` off the diagonal.
    """
    dg = _finite_dist(g, "g")
    xi = np.array(metrics(g).xi, dtype=float)
    dh = np.array(distance_data(h).dist)
    n, m = g.n, h.n
    out = np.repeat(np.repeat(dg, m, axis=0), m, axis=1)
    for x in range(n):
        out[x * m:(x + 1) * m, x * m:(x + 1) * m] = np.minimum(xi[x], dh)
        np.fill_diagonal(out[x * m:(x + 1) * m, x * m:(x + 1) * m], 0.0)
    if not np.isfinite(out).all():
        raise NotStronglyConnected("lexicographic product is not strongly connected")
    return out


def strong_distance_matrix(g: Digraph, h: Digraph) -> np.ndarray:
    """``d((x,x'),(y,y')) = max(d(x,y), d'(x',y'))``."""
    dg, dh = _finite_dist(g, "g"), _finite_dist(h, "h")
    return np.maximum(dg[:, None, :, None], dh[None, :, None, :]).reshape(g.n * h.n, g.n * h.n)


def product_distance_matrix(g: Digraph, h: Digraph, kind) -> np.ndarray:
    """Distance matrix of a product by BFS on the product digraph."""
    dd = distance_data(product(g, h, kind))
    if not dd.strongly_connected:
        raise NotStronglyConnected(f"{ProductKind(kind).value} product is not strongly connected")
    return np.array(dd.dist)


__all__ = [
    "INF",
    "ProductKind",
    "product",
    "product_adjacency",
    "cartesian_distance_matrix",
    "lexicographic_distance_matrix",
    "strong_distance_matrix",
    "product_distance_matrix",
]
