"""Digraph and matrix file formats.

Text digraph files: the first non-comment line is ``n``; each further line is
an arc ``u v`` with 0-based vertices.  ``#`` starts a comment; blank lines
are ignored.  A JSON alternative is ``{"n": n, "arcs": [[u, v], ...]}``.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np

from .digraph import Digraph, from_arc_list
from .errors import InvalidDigraph, SpectraError
from .verify import MatrixPair


class ParseError(SpectraError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def data_path(name: str) -> Path:
    return Path(str(resources.files("digraph_spectra") / "data" / name))


def resolve(path: str) -> Path:
    """A filesystem path, falling back to the packaged fixture of that name."""
    p = Path(path)
    if p.exists():
        return p
    shipped = data_path(p.name)
    if shipped.exists():
        return shipped
    raise ParseError("no such file", source=str(path))


def parse_digraph_text(text: str, source: str = "<input>") -> Digraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_digraph_json(text, source)
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno, source) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError("first line must be a positive vertex count", lineno, source)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno, source)
        arcs.append((lineno, nums[0], nums[1]))
    if n is None:
        raise ParseError("empty digraph file", None, source)
    seen = set()
    for lineno, u, v in arcs:
        try:
            from_arc_list(n, [(u, v)])
        except InvalidDigraph as exc:
            raise ParseError(str(exc), lineno, source) from None
        if (u, v) in seen:
            raise ParseError(f"arc ({u}, {v}) listed twice", lineno, source)
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def _parse_digraph_json(text: str, source: str) -> Digraph:
    try:
        obj = json.loads(text)
        n = int(obj["n"])
        arcs = [(int(u), int(v)) for u, v in obj["arcs"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON digraph: {exc}", None, source) from None
    try:
        return from_arc_list(n, arcs)
    except InvalidDigraph as exc:
        raise ParseError(str(exc), None, source) from None


def read_digraph(path: str) -> Digraph:
    p = resolve(path)
    return parse_digraph_text(p.read_text(), str(path))


def format_digraph(g: Digraph, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append(str(g.n))
    lines += [f"{u} {v}" for u, v in g.arc_list()]
    return "\n".join(lines) + "\n"


def write_digraph(g: Digraph, path: str, header: str = "") -> None:
    Path(path).write_text(format_digraph(g, header))


def _matrix(obj, key: str, source: str) -> np.ndarray:
    try:
        m = np.array(obj[key], dtype=float)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad matrix {key!r}: {exc}", None, source) from None
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParseError(f"matrix {key!r} is not square", None, source)
    return m


def read_matrix_pair(path: str) -> MatrixPair:
    """``{"M": [[...]], "M2": [[...]], "expected_gmult": [[re, im, g], ...]}``."""
    p = resolve(path)
    try:
        obj = json.loads(p.read_text())
    except ValueError as exc:
        raise ParseError(f"invalid JSON: {exc}", None, str(path)) from None
    expected = tuple((complex(re, im), int(g)) for re, im, g in obj.get("expected_gmult", []))
    return MatrixPair(_matrix(obj, "M", str(path)), _matrix(obj, "M2", str(path)), expected,
                      Path(path).name)


def read_input(path: str):
    """A digraph file, or a matrix-pair JSON file (detected by its ``M`` key)."""
    p = resolve(path)
    text = p.read_text()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except ValueError as exc:
            raise ParseError(f"invalid JSON: {exc}", None, str(path)) from None
        if isinstance(obj, dict) and "M" in obj:
            return read_matrix_pair(path)
    return parse_digraph_text(text, str(path))


def load_schema(name: str) -> dict:
    return json.loads(data_path(name).read_text())
