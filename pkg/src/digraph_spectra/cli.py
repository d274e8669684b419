"""Command-line interface.

Exit codes: 0 success or PASS, 2 parse error, 3 hypothesis or connectivity
failure (and SKIP verdicts), 4 eigensolver non-convergence, 5 mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import sys

from . import dsrg, eigen, sweep
from . import io as dio
from .errors import (
    HypothesisViolated,
    InvalidParams,
    NoConvergence,
    NotStronglyConnected,
    ShapeViolated,
    DegenerateDiscriminant,
)
from .linalg import MatrixKind, digraph_matrix
from .products import ProductKind, product
from .verify import SPECTRUM_TOL, THEOREMS, verify

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_NUMERICS, EXIT_MISMATCH = 0, 2, 3, 4, 5

TOL_ENV = "DIGRAPH_SPECTRA_TOL"


def _tol(arg, default: float) -> float:
    if arg is not None:
        return arg
    env = os.environ.get(TOL_ENV)
    return float(env) if env else default


def spectrum_rows(s: eigen.Spectrum) -> list:
    return [{"re": z.real, "im": z.imag, "mult": m} for z, m in s]


def _emit(obj: dict, fmt: str, rows_key: str | None = None):
    if fmt == "csv" and rows_key is not None:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "mult"])
        for r in obj[rows_key]:
            w.writerow([repr(r["re"]), repr(r["im"]), r["mult"]])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_spectrum(args) -> int:
    g = dio.read_digraph(args.path)
    tol = _tol(args.tol, eigen.CLUSTER_TOL)
    m = digraph_matrix(g, args.matrix)
    s = eigen.eigenvalues(m, tol)
    report = {"matrix": args.matrix, "order": g.n, "spectrum": spectrum_rows(s),
              "tolerance": tol, "source": "eigensolver"}
    _emit(report, args.format, "spectrum")
    return EXIT_OK


def cmd_product(args) -> int:
    g = dio.read_digraph(args.g)
    h = dio.read_digraph(args.h)
    p = product(g, h, args.kind)
    header = (f"{args.kind} product of {args.g} (n={g.n}) and {args.h} (n={h.n})\n"
              f"vertex (x, x') is numbered x * {h.n} + x'")
    text = dio.format_digraph(p, header)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    inputs = [dio.read_input(p) for p in args.inputs]
    options = {"ell": args.ell} if args.theorem == "cartesian-power" and args.ell else {}
    v = verify(args.theorem, inputs, _tol(args.tol, SPECTRUM_TOL), names=args.inputs, **options)
    _emit(v.to_dict(), "json")
    return {"PASS": EXIT_OK, "SKIP": EXIT_HYPOTHESIS}.get(v.status, EXIT_MISMATCH)


def cmd_theorems(args) -> int:
    sys.stdout.write("\n".join(sorted(THEOREMS)) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    def show(v):
        if args.verbose or v.status == "FAIL":
            print(f"{v.status:4} {v.theorem:16} {' '.join(v.inputs)}", file=sys.stderr)

    res = sweep.run_sweep(args.fixtures or None, args.theorem or None,
                          _tol(args.tol, SPECTRUM_TOL), show)
    counts = res.counts()
    report = {"seconds": round(res.seconds, 3), "counts": dict(counts),
              "uncovered": res.uncovered() if not args.theorem else [],
              "failures": [v.to_dict() for v in res.failures()]}
    _emit(report, "json")
    return EXIT_MISMATCH if counts.get("FAIL") else EXIT_OK


def _dsrg_source(args):
    if args.figure2:
        return dsrg.FIGURE2_PARAMS, dsrg.figure2_dsrg()
    if args.paley is not None:
        return dsrg.paley_params(args.paley), dsrg.paley_tournament(args.paley)
    return dsrg.DsrgParams(*args.params), None


def cmd_dsrg(args) -> int:
    p, g = _dsrg_source(args)
    duval = dsrg.duval_spectrum(p)
    report = {
        "params": list(p.as_tuple()),
        "digraph": g is not None,
        "valid": dsrg.validate_dsrg(g, p) if g is not None else None,
        "classification": dsrg.nonreal_classification(p).value,
        "exact": duval.exact,
        "duval": spectrum_rows(duval.spectrum()),
        "spectra": {k: spectrum_rows(dsrg.dsrg_derived_spectra(p, k)) for k in ("D", "DL", "DQ")},
    }
    code = EXIT_OK if report["valid"] is not False else EXIT_HYPOTHESIS
    if args.power:
        d = dsrg.dsrg_derived_spectra(p, "D")
        report["power"] = {"ell": args.power,
                           "spectrum": spectrum_rows(dsrg.cartesian_power_from_spectrum(d, p.n, args.power))}
    _emit(report, args.format, None)
    return code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="digraph-spectra",
                                 description="Spectra of digraphs, digraph products and DSRGs.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigensolver spectrum of a digraph matrix")
    sp.add_argument("path")
    sp.add_argument("--matrix", choices=[k.value for k in MatrixKind], default="A")
    sp.add_argument("--tol", type=float, default=None)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_spectrum)

    pp = sub.add_parser("product", help="write the product of two digraphs")
    pp.add_argument("g")
    pp.add_argument("h")
    pp.add_argument("--kind", choices=[k.value for k in ProductKind], required=True)
    pp.add_argument("--out", default=None)
    pp.set_defaults(func=cmd_product)

    vp = sub.add_parser("verify", help="closed form against the brute-force oracle")
    vp.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    vp.add_argument("inputs", nargs="+")
    vp.add_argument("--tol", type=float, default=None)
    vp.add_argument("--ell", type=int, default=None, help="power for cartesian-power")
    vp.set_defaults(func=cmd_verify)

    tp = sub.add_parser("theorems", help="list theorem names accepted by verify")
    tp.set_defaults(func=cmd_theorems)

    wp = sub.add_parser("sweep", help="every theorem on every catalog fixture")
    wp.add_argument("--theorem", action="append", choices=sorted(THEOREMS))
    wp.add_argument("--fixtures", nargs="+", choices=sorted(dsrg.CATALOG))
    wp.add_argument("--tol", type=float, default=None)
    wp.add_argument("-v", "--verbose", action="store_true")
    wp.set_defaults(func=cmd_sweep)

    dp = sub.add_parser("dsrg", help="directed strongly regular graph report")
    src = dp.add_mutually_exclusive_group(required=True)
    src.add_argument("--params", type=int, nargs=5, metavar=("N", "K", "S", "A", "C"))
    src.add_argument("--paley", type=int)
    src.add_argument("--figure2", action="store_true")
    dp.add_argument("--power", type=int, default=None)
    dp.add_argument("--format", choices=["json"], default="json")
    dp.set_defaults(func=cmd_dsrg)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except dio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisViolated, NotStronglyConnected, InvalidParams, ShapeViolated,
            DegenerateDiscriminant, dsrg.BadPrime) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICS


if __name__ == "__main__":
    sys.exit(main())
