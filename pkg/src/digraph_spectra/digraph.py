"""Digraphs, BFS distances and the per-vertex metrics used as hypotheses.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one Python
integer per vertex whose set bits are the out-neighbours, so a BFS sweep
is a sequence of word-parallel ORs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateArc, IndexOutOfRange, InvalidDigraph, LoopArc

#: Distance between vertices with no connecting dipath.  Absorbing under
#: addition and neutral under ``min``; compares greater than every integer.
INF = math.inf


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph on vertices ``0..n-1``."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDigraph(f"vertex count must be >= 1, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"arc ({u}, {v}) outside [0, {self.n})")
            if u == v:
                raise LoopArc(f"loop at vertex {u}")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def out_rows(self) -> tuple:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    @cached_property
    def in_rows(self) -> tuple:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[v] |= 1 << u
        return tuple(rows)

    def out_neighbors(self, v: int) -> list:
        return list(_bits(self.out_rows[v]))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def arc_list(self) -> list:
        return sorted(self.arcs)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def from_arc_list(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Build a digraph from an explicit arc list, rejecting loops and repeats."""
    seen = set()
    for arc in arcs:
        u, v = (int(x) for x in arc)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc ({u}, {v}) outside [0, {n})")
        if u == v:
            raise LoopArc(f"loop at vertex {u}")
        if (u, v) in seen:
            raise DuplicateArc(f"arc ({u}, {v}) listed twice")
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def _bfs(rows: tuple, n: int, src: int) -> list:
    dist = [INF] * n
    dist[src] = 0
    seen = frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def _reach_mask(rows: tuple, src: int) -> int:
    seen = frontier = 1 << src
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    full = (1 << g.n) - 1
    return _reach_mask(g.out_rows, 0) == full and _reach_mask(g.in_rows, 0) == full


@dataclass(frozen=True)
class DistanceData:
    """All-pairs distances.  ``dist`` is float so that ``INF`` can be stored;
    finite entries are exact integers."""

    dist: np.ndarray
    transmissions: np.ndarray

    @property
    def strongly_connected(self) -> bool:
        return bool(np.isfinite(self.dist).all())


def distance_data(g: Digraph) -> DistanceData:
    rows = g.out_rows
    dist = np.array([_bfs(rows, g.n, s) for s in range(g.n)], dtype=float)
    trans = dist.sum(axis=1)
    dist.setflags(write=False)
    trans.setflags(write=False)
    return DistanceData(dist, trans)


@dataclass(frozen=True)
class Metrics:
    out_degrees: tuple
    in_degrees: tuple
    is_out_regular: bool
    is_regular: bool
    transmissions: tuple
    is_transmission_regular: bool
    diameter: float
    girth: float
    xi: tuple
    every_vertex_on_doubly_directed_arc: bool

    @property
    def out_degree(self):
        """Common out-degree, or None when not out-regular."""
        return self.out_degrees[0] if self.is_out_regular else None

    @property
    def transmission(self):
        """Common transmission, or None when not transmission regular."""
        return self.transmissions[0] if self.is_transmission_regular else None


def metrics(g: Digraph, dd: DistanceData | None = None) -> Metrics:
    dd = dd if dd is not None else distance_data(g)
    dist = dd.dist
    out_deg = tuple(bin(r).count("1") for r in g.out_rows)
    in_deg = tuple(bin(r).count("1") for r in g.in_rows)
    xi = []
    for x in range(g.n):
        best = INF
        for y in _bits(g.out_rows[x]):
            best = min(best, 1 + dist[y, x])
        xi.append(best)
    trans = tuple(float(t) for t in dd.transmissions)
    sc = dd.strongly_connected
    doubly = all(g.out_rows[x] & g.in_rows[x] for x in range(g.n))
    return Metrics(
        out_degrees=out_deg,
        in_degrees=in_deg,
        is_out_regular=len(set(out_deg)) == 1,
        is_regular=len(set(out_deg)) == 1 and set(out_deg) == set(in_deg),
        transmissions=trans,
        is_transmission_regular=sc and len(set(trans)) == 1,
        diameter=float(dist.max()),
        girth=min(xi),
        xi=tuple(xi),
        every_vertex_on_doubly_directed_arc=doubly,
    )


def complement(g: Digraph) -> Digraph:
    full = (1 << g.n) - 1
    arcs = set()
    for u in range(g.n):
        for v in _bits(full & ~g.out_rows[u] & ~(1 << u)):
            arcs.add((u, v))
    return Digraph(g.n, frozenset(arcs))


def reverse(g: Digraph) -> Digraph:
    return Digraph(g.n, frozenset((v, u) for u, v in g.arcs))
