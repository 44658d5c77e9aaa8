"""Command-line surface.

Two entry points are installed:

* sdm: symmetric diagram matrices (build / eig / verify)
* gram: Gram-matrix spectra (partition / z2 / signed)

All commands are batch-style and deterministic: the same invocation produces
byte-identical output. Output format is json (default), csv, or
pretty-table; the default can be overridden with the DIAGRAM_SPECTRA_FORMAT
environment variable, and --out always wins.

Exit codes: 0 success, 1 usage or range error, 2 size cap exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import gram_partition, gram_signed_z2, oracle, sdm, spectrum
from .errors import SizeCapExceeded
from .poly import Polynomial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3

FORMATS = ("json", "csv", "pretty-table")
FORMAT_ENV_VAR = "DIAGRAM_SPECTRA_FORMAT"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for caps here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_format(explicit: str | None) -> str:
    fmt = explicit or os.environ.get(FORMAT_ENV_VAR) or "json"
    if fmt not in FORMATS:
        raise ValueError(
            f"unknown output format {fmt!r} (choose from {', '.join(FORMATS)})"
        )
    return fmt


def _print_json(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _print_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt_row(cells: list[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    sys.stdout.write(fmt_row(headers) + "\n")
    sys.stdout.write("  ".join("-" * w for w in widths) + "\n")
    for row in rows:
        sys.stdout.write(fmt_row(row) + "\n")


def _add_out_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--out",
        choices=FORMATS,
        default=None,
        help=f"output format (default json; env {FORMAT_ENV_VAR} overrides)",
    )


# ---------------------------------------------------------------- sdm entry


def _sdm_build(args: argparse.Namespace) -> int:
    fmt = _resolve_format(args.out)
    m = sdm.build(args.s, args.r, max_size=args.max_size)
    if fmt == "json":
        _print_json(m.to_json_dict())
    elif fmt == "csv":
        sys.stdout.write(m.to_csv())
    else:
        rows = [[f"x{v}" for v in row] for row in m.levels]
        headers = [f"c{j}" for j in range(m.n)]
        _print_table(headers, rows)
    return EXIT_OK


def _sdm_eig(args: argparse.Namespace) -> int:
    fmt = _resolve_format(args.out)
    forms = spectrum.distinct_eigenvalues(args.s, args.r)
    if fmt == "json":
        _print_json(spectrum.to_json_dict(args.s, args.r))
    elif fmt == "csv":
        lo = min(args.s, args.r)
        header = "l,multiplicity," + ",".join(f"c{v}" for v in range(lo + 1))
        lines = [header]
        for f in forms:
            lines.append(
                f"{f.l},{f.multiplicity}," + ",".join(str(c) for c in f.coeffs)
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _print_table(
            ["l", "eigenvalue", "multiplicity"],
            [[str(f.l), str(f), str(f.multiplicity)] for f in forms],
        )
    return EXIT_OK


def _sdm_verify(args: argparse.Namespace) -> int:
    fmt = _resolve_format(args.out)
    report = oracle.verify_sdm_spectrum(
        args.s, args.r, trials=args.trials, seed=args.seed, max_size=args.max_size
    )
    if fmt == "json":
        _print_json(report.to_json_dict())
    elif fmt == "csv":
        sys.stdout.write("target,s,r,trials,passed\n")
        sys.stdout.write(
            f"sdm_spectrum,{args.s},{args.r},{report.trials},{str(report.passed).lower()}\n"
        )
    else:
        verdict = "PASS" if report.passed else "FAIL"
        sys.stdout.write(
            f"{verdict} sdm spectrum s={args.s} r={args.r} trials={report.trials}\n"
        )
        for f in report.failures:
            sys.stdout.write(f"  trial {f['trial']}: substitution {f['substitution']}\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def sdm_main(argv: Sequence[str] | None = None) -> int:
    parser = _Parser(prog="sdm", description="Symmetric diagram matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", parents=[], help="construct the level matrix")
    p_build.add_argument("--s", type=int, required=True, help="through classes")
    p_build.add_argument("--r", type=int, required=True, help="horizontal edges")
    p_build.add_argument("--max-size", type=int, default=sdm.DEFAULT_MAX_SIZE)
    _add_out_flag(p_build)
    p_build.set_defaults(handler=_sdm_build)

    p_eig = sub.add_parser("eig", help="closed-form distinct eigenvalues")
    p_eig.add_argument("--s", type=int, required=True)
    p_eig.add_argument("--r", type=int, required=True)
    _add_out_flag(p_eig)
    p_eig.set_defaults(handler=_sdm_eig)

    p_verify = sub.add_parser("verify", help="oracle check of the closed form")
    p_verify.add_argument("--s", type=int, required=True)
    p_verify.add_argument("--r", type=int, required=True)
    p_verify.add_argument("--trials", type=int, default=5)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-size", type=int, default=oracle.DEFAULT_CHARPOLY_CAP)
    _add_out_flag(p_verify)
    p_verify.set_defaults(handler=_sdm_verify)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return _dispatch(args)


# --------------------------------------------------------------- gram entry


def _gram_partition(args: argparse.Namespace) -> int:
    fmt = _resolve_format(args.out)
    k, s = args.k, args.s
    if k < 1 or not (0 <= s <= k):
        raise ValueError(f"need k >= 1 and 0 <= s <= k, got k={k}, s={s}")
    build_cap = args.max_size if args.max_size is not None else gram_partition.DEFAULT_MAX_SIZE
    det_cap = args.max_size if args.max_size is not None else oracle.DEFAULT_DET_CAP

    det_sign = None
    det_report = None
    if args.det:
        det_report = oracle.verify_gram_det(k, s, max_size=det_cap)
        det_sign = det_report.extra["epsilon"]
    singular = gram_partition.semisimple_exceptions(k, s) if args.roots else None

    data = gram_partition.to_json_dict(
        k,
        s,
        include_matrix=args.matrix,
        det_sign=det_sign,
        singular_x=singular,
        max_size=build_cap,
    )
    if args.det:
        data["det"] = det_report.extra["det"]

    if fmt == "json":
        _print_json(data)
    elif fmt == "csv":
        if args.matrix:
            g = gram_partition.build_gram(k, s, max_size=build_cap)
            sys.stdout.write(g.to_csv())
        else:
            lines = ["r,l,multiplicity,poly"]
            for blk in data["blocks"]:
                for e in blk["eigen"]:
                    coeffs = ";".join(e["poly"])
                    lines.append(f"{blk['r']},{e['l']},{e['multiplicity']},{coeffs}")
            sys.stdout.write("\n".join(lines) + "\n")
    else:
        rows = []
        for r in range(0, k - s + 1):
            for l, p, mult in gram_partition.block_spectrum(k, s, r).eigenpolys:
                rows.append([str(r), str(l), str(p), str(mult)])
        _print_table(["r", "l", "eigenpoly", "multiplicity"], rows)
        if det_sign is not None:
            sys.stdout.write(f"det sign: {det_sign:+d}\n")
        if singular is not None:
            sys.stdout.write(f"singular x: {sorted(singular)}\n")
        if args.matrix:
            g = gram_partition.build_gram(k, s, max_size=build_cap)
            for line in g.monomial_strings():
                sys.stdout.write("  ".join(c.rjust(3) for c in line).rstrip() + "\n")

    if det_report is not None and not det_report.passed:
        return EXIT_VERIFY
    return EXIT_OK


def _gram_signed_like(args: argparse.Namespace, mode: str) -> int:
    fmt = _resolve_format(args.out)
    data = gram_signed_z2.to_json_dict(args.k, args.s1, args.s2, mode)
    if fmt == "json":
        _print_json(data)
    elif fmt == "csv":
        lines = ["r1,r2,l1,l2,multiplicity_per_copy,poly"]
        for blk in data["blocks"]:
            for e in blk["eigen"]:
                coeffs = ";".join(e["poly"])
                lines.append(
                    f"{blk['r1']},{blk['r2']},{e['l1']},{e['l2']},"
                    f"{e['multiplicity_per_copy']},{coeffs}"
                )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        rows = []
        for blk in data["blocks"]:
            for e in blk["eigen"]:
                p = Polynomial.of(int(c) for c in e["poly"])
                rows.append(
                    [
                        str(blk["r1"]),
                        str(blk["r2"]),
                        str(e["l1"]),
                        str(e["l2"]),
                        str(p),
                        str(e["multiplicity_per_copy"]),
                    ]
                )
        _print_table(["r1", "r2", "l1", "l2", "eigenpoly", "mult/copy"], rows)
    return EXIT_OK


def gram_main(argv: Sequence[str] | None = None) -> int:
    parser = _Parser(prog="gram", description="Gram-matrix block spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_part = sub.add_parser("partition", help="partition-algebra Gram blocks")
    p_part.add_argument("--k", type=int, required=True, help="points per row")
    p_part.add_argument("--s", type=int, required=True, help="through classes")
    p_part.add_argument("--matrix", action="store_true", help="emit the Gram matrix")
    p_part.add_argument("--det", action="store_true", help="oracle determinant check")
    p_part.add_argument("--roots", action="store_true", help="emit singular integer x")
    p_part.add_argument(
        "--max-size",
        type=int,
        default=None,
        help=f"cap for matrix side (default {gram_partition.DEFAULT_MAX_SIZE} build, "
        f"{oracle.DEFAULT_DET_CAP} determinant)",
    )
    _add_out_flag(p_part)
    p_part.set_defaults(handler=_gram_partition)

    for mode in ("z2", "signed"):
        p_m = sub.add_parser(mode, help=f"{mode} tensor-block spectra")
        p_m.add_argument("--k", type=int, required=True)
        p_m.add_argument("--s1", type=int, required=True)
        p_m.add_argument("--s2", type=int, required=True)
        _add_out_flag(p_m)
        p_m.set_defaults(handler=lambda a, m=mode: _gram_signed_like(a, m))

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return _dispatch(args)


def _dispatch(args: argparse.Namespace) -> int:
    try:
        return args.handler(args)
    except SizeCapExceeded as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CAP
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
