#!/usr/bin/env python3
"""Run every theorem over the fixture catalog and write the verdicts as JSON.

    python scripts/run_sweep.py --out sweep.json
"""
import argparse
import json
import sys
from collections import Counter

from digraph_spectra import dsrg
from digraph_spectra.sweep import run_sweep
from digraph_spectra.verify import THEOREMS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None, help="JSON file for all verdicts")
    ap.add_argument("--fixtures", nargs="+", choices=sorted(dsrg.CATALOG))
    ap.add_argument("--theorem", action="append", choices=sorted(THEOREMS))
    args = ap.parse_args()

    res = run_sweep(args.fixtures, args.theorem)
    by_theorem = {}
    for v in res.verdicts:
        by_theorem.setdefault(v.theorem, Counter())[v.status] += 1
    print(f"{'theorem':18} {'PASS':>5} {'SKIP':>5} {'FAIL':>5}")
    for thm in sorted(by_theorem):
        c = by_theorem[thm]
        print(f"{thm:18} {c['PASS']:5} {c['SKIP']:5} {c['FAIL']:5}")
    print(f"total {dict(res.counts())} in {res.seconds:.1f} s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([v.to_dict() for v in res.verdicts], fh, indent=1)
    return 1 if res.failures() else 0


if __name__ == "__main__":
    sys.exit(main())
