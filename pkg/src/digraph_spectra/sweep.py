"""Run every theorem on every fixture (or ordered fixture pair) of the catalog."""
from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass

from . import dsrg
from . import io as dio
from .verify import PAIR_INPUT, SINGLE_INPUT, THEOREMS, Verdict, verify

MATRIX_PAIRS = ("lexp_example.json",)


@dataclass
class SweepResult:
    verdicts: list
    seconds: float

    def counts(self) -> Counter:
        return Counter(v.status for v in self.verdicts)

    def failures(self) -> list:
        return [v for v in self.verdicts if v.status == "FAIL"]

    def passed_theorems(self) -> set:
        return {v.theorem for v in self.verdicts if v.status == "PASS"}

    def uncovered(self) -> list:
        return sorted(set(THEOREMS) - self.passed_theorems())


def jobs(names=None, theorems=None):
    """``(theorem, input names)`` for the whole catalog."""
    names = sorted(names or dsrg.CATALOG)
    for thm in sorted(theorems or THEOREMS):
        if thm in SINGLE_INPUT:
            yield from ((thm, (a,)) for a in names)
            continue
        yield from ((thm, pair) for pair in itertools.product(names, repeat=2))
        if thm in PAIR_INPUT:
            yield from ((thm, (m,)) for m in MATRIX_PAIRS)


def run_sweep(names=None, theorems=None, tol=None, progress=None) -> SweepResult:
    cache = {}

    def load(name):
        if name not in cache:
            cache[name] = dsrg.CATALOG[name]() if name in dsrg.CATALOG else dio.read_input(name)
        return cache[name]

    start = time.perf_counter()
    out = []
    for thm, ins in jobs(names, theorems):
        kw = {} if tol is None else {"tol": tol}
        v: Verdict = verify(thm, [load(x) for x in ins], names=list(ins), **kw)
        out.append(v)
        if progress:
            progress(v)
    return SweepResult(out, time.perf_counter() - start)
