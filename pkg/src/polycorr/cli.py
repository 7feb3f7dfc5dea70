"""Command-line interface.

Four subcommands cover the library surface:

* ``analyze``  — admissibility, rank, classification, separation,
  additive decomposition and symmetry flags for one polynomial;
* ``star``     — the slice-pairing product of two polynomials with
  validity diagnostics (``--check`` re-derives the product from traces);
* ``verify``   — seeded numerical branch-list verification;
* ``factor``   — the degree-1 shell factorization of a rank-2 input.

Polynomials are given with ``--expr "<text>"`` or ``--file <path>``
(UTF-8, ``#`` comments ignored) in the shared grammar.  ``--json``
switches to machine-readable output; every JSON document conforms to the
schema shipped at ``polycorr/schema/cli_output.schema.json``.

Exit codes: 0 success, 2 parse/usage, 3 validation, 4 conformability,
5 vanishing corner minor, 6 rank not two.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numeric as numeric_mod
from .corr import (
    Classification,
    RankNotTwoError,
    ValidationError,
    classify,
    conj_symmetry,
    consecutive_columns_independent,
    decompose,
    separate,
    sign_symmetry,
    validate,
)
from .linalg import rank
from .parser import ParseError, format_poly, format_unipoly, parse_poly
from .poly import BiPoly, coeff_matrix
from .star import (
    DegenerateProductError,
    DegreeMismatchError,
    JZeroError,
    build_product_via_traces,
    canonical_factor,
    diagnostics,
    star,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_CONFORMABILITY = 4
EXIT_J_ZERO = 5
EXIT_RANK = 6


class _CliError(Exception):
    def __init__(self, code: int, kind: str, message: str, **extra):
        super().__init__(message)
        self.code = code
        self.kind = kind
        self.extra = extra


def _read_inputs(args, count: int) -> list[BiPoly]:
    sources: list[str] = []
    for text in args.expr or []:
        sources.append(text)
    for path in args.file or []:
        try:
            with open(path, encoding="utf-8") as fh:
                lines = [line.split("#", 1)[0] for line in fh]
        except OSError as exc:
            raise _CliError(EXIT_PARSE, "parse", f"cannot read {path}: {exc}")
        sources.append(" ".join(lines))
    if len(sources) != count:
        raise _CliError(
            EXIT_PARSE,
            "usage",
            f"expected {count} polynomial input(s) via --expr/--file, "
            f"got {len(sources)}",
        )
    polys = []
    for text in sources:
        try:
            polys.append(parse_poly(text))
        except ParseError as exc:
            raise _CliError(
                EXIT_PARSE, "parse", str(exc), offset=exc.pos,
                expected=list(exc.expected),
            )
    return polys


def _validated(p: BiPoly):
    try:
        return validate(p)
    except ValidationError as exc:
        raise _CliError(
            EXIT_VALIDATION, "validation", str(exc), condition=exc.condition
        )


def _bidegree_doc(p: BiPoly) -> dict:
    return {"z_degree": p.deg_z, "w_degree": p.deg_w}


def _classification_doc(cls: Classification) -> dict:
    return {
        "verdict": cls.verdict.value,
        "rank": cls.rank,
        "power": cls.power,
        "root": format_poly(cls.root) if cls.root is not None else None,
        "evidence": cls.evidence,
    }


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(human)


def _matrix_text(p: BiPoly) -> str:
    m = coeff_matrix(p)
    cells = [[str(c) for c in row] for row in m.rows]
    widths = [max(len(cells[i][j]) for i in range(m.nrows)) for j in range(m.ncols)]
    lines = [
        "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]"
        for row in cells
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    (p,) = _read_inputs(args, 1)
    c = _validated(p)
    cls = classify(c)
    doc = {
        "command": "analyze",
        "input": format_poly(p),
        "bidegree": _bidegree_doc(p),
        "p1_ok": True,
        "p2_ok": True,
        "rank": cls.rank,
        "classification": _classification_doc(cls),
        "separation": None,
        "decomposition": [],
        "symmetry": {
            "sign": sign_symmetry(c),
            "conjugation": conj_symmetry(c),
            "consecutive_columns_independent": consecutive_columns_independent(c),
        },
    }
    if cls.rank == 2:
        sep = separate(c)
        doc["separation"] = {
            "r_num": format_unipoly(sep.r_num, "z"),
            "r_den": format_unipoly(sep.r_den, "z"),
            "s_num": format_unipoly(sep.s_num, "w"),
            "s_den": format_unipoly(sep.s_den, "w"),
        }
    dec = decompose(c)
    doc["decomposition"] = [
        {"g": format_unipoly(g, "w"), "h": format_unipoly(h, "z")}
        for g, h in dec.terms
    ]
    lines = [
        f"input:       {doc['input']}",
        f"bidegree:    ({p.deg_z}, {p.deg_w})   [z-degree, w-degree]",
        "coefficient matrix:",
        _matrix_text(p),
        f"rank:        {cls.rank}",
        f"verdict:     {cls.verdict.value}"
        + (f" (power {cls.power} of {format_poly(cls.root)})" if cls.root else ""),
    ]
    if cls.evidence:
        lines.append(f"evidence:    {cls.evidence}")
    if doc["separation"]:
        s = doc["separation"]
        lines.append(f"separation:  R(z) = ({s['r_num']}) / ({s['r_den']})")
        lines.append(f"             S(w) = ({s['s_num']}) / ({s['s_den']})")
    lines.append("decomposition:")
    for term in doc["decomposition"]:
        lines.append(f"  g = {term['g']}   |   h = {term['h']}")
    sym = doc["symmetry"]
    lines.append(
        "symmetry:    sign "
        + ("yes" if sym["sign"] else "no")
        + ", conjugation "
        + ("yes" if sym["conjugation"] else "no")
        + ", consecutive columns independent "
        + ("yes" if sym["consecutive_columns_independent"] else "no")
    )
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _cmd_star(args) -> int:
    p, q = _read_inputs(args, 2)
    try:
        product = star(p, q)
    except DegreeMismatchError as exc:
        raise _CliError(EXIT_CONFORMABILITY, "conformability", str(exc))
    doc = {
        "command": "star",
        "product": format_poly(product),
        "product_bidegree": _bidegree_doc(product),
        "product_rank": rank(coeff_matrix(product)),
        "diagnostics": None,
        "diagnostics_skipped": None,
        "check": None,
    }
    diag = None
    try:
        cp, cq = validate(p), validate(q)
        diag = diagnostics(cp, cq)
        doc["diagnostics"] = {
            "pairing_corner_top": str(diag.pairing_corner_top),
            "pairing_corner_bottom": str(diag.pairing_corner_bottom),
            "pairing_nr_s1_q0": str(diag.pairing_nr_s1_q0),
            "pairing_dr_s1_qnz": str(diag.pairing_dr_s1_qnz),
            "traces": [str(t) for t in diag.traces],
            "beta_degenerate": diag.beta_degenerate,
            "beta": str(diag.beta) if diag.beta is not None else None,
            "verdict": diag.verdict,
            "reasons": list(diag.reasons),
        }
    except (ValidationError, RankNotTwoError) as exc:
        doc["diagnostics_skipped"] = f"factors not separable: {exc}"
    if args.check:
        try:
            t = build_product_via_traces(validate(p), validate(q))
            doc["check"] = {"t_matches_star": t == product, "detail": None}
        except (ValidationError, RankNotTwoError, DegenerateProductError) as exc:
            doc["check"] = {"t_matches_star": None, "detail": str(exc)}
    lines = [
        f"product:     {doc['product']}",
        f"bidegree:    ({product.deg_z}, {product.deg_w})",
        f"rank:        {doc['product_rank']}",
    ]
    if diag is not None:
        lines.append(f"verdict:     {diag.verdict}")
        for r in diag.reasons:
            lines.append(f"  - {r}")
        lines.append(
            "traces:      ("
            + ", ".join(str(t) for t in diag.traces)
            + ")"
        )
    elif doc["diagnostics_skipped"]:
        lines.append(f"diagnostics: skipped ({doc['diagnostics_skipped']})")
    if doc["check"] is not None:
        lines.append(f"trace check: {doc['check']}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.samples < 1:
        raise _CliError(EXIT_PARSE, "usage", "--samples must be at least 1")
    (p,) = _read_inputs(args, 1)
    c = _validated(p)
    report = numeric_mod.verify_restrictive(
        c, samples=args.samples, seed=args.seed, tol=args.tol
    )
    doc = {
        "command": "verify",
        "input": format_poly(p),
        "verdict": report.verdict.value,
        "samples": report.samples,
        "clean_probes": report.clean_probes,
        "inconclusive_events": report.inconclusive_events,
        "max_list_discrepancy": report.max_list_discrepancy,
        "failures": [
            {
                "start": [f.start.real, f.start.imag],
                "axis": f.axis,
                "branch_pair": list(f.branch_pair),
                "distance": f.distance,
            }
            for f in report.failures
        ],
        "tol": args.tol,
        "seed": args.seed,
    }
    lines = [
        f"verdict:          {report.verdict.value}",
        f"samples:          {report.samples} (x2 planes)",
        f"clean probes:     {report.clean_probes}",
        f"inconclusive:     {report.inconclusive_events}",
        f"max discrepancy:  {report.max_list_discrepancy:.3e}",
        f"failures:         {len(report.failures)}",
    ]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _cmd_factor(args) -> int:
    (p,) = _read_inputs(args, 1)
    c = _validated(p)
    try:
        factors = canonical_factor(c)
    except RankNotTwoError as exc:
        raise _CliError(EXIT_RANK, "rank", str(exc))
    except JZeroError as exc:
        raise _CliError(EXIT_J_ZERO, "j_zero", str(exc))
    exact = factors.constant == 1
    doc = {
        "command": "factor",
        "input": format_poly(p),
        "p1": format_poly(factors.left),
        "p2": format_poly(factors.right),
        "recovery": {
            "status": "exact" if exact else "proportional",
            "constant": str(factors.constant),
        },
    }
    lines = [
        f"left factor:  {doc['p1']}",
        f"right factor: {doc['p2']}",
        f"recovery:     {doc['recovery']['status']}"
        + ("" if exact else f" (constant {factors.constant})"),
    ]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_io_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--expr", action="append", metavar="TEXT", help="polynomial text"
    )
    sub.add_argument(
        "--file", action="append", metavar="PATH",
        help="file with one polynomial ('#' comments ignored)",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polycorr",
        description="Exact analysis of restrictive polynomial correspondences.",
    )
    subs = ap.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="classify one correspondence")
    _add_io_arguments(analyze)
    analyze.set_defaults(func=_cmd_analyze)

    star_cmd = subs.add_parser("star", help="slice-pairing product of two inputs")
    _add_io_arguments(star_cmd)
    star_cmd.add_argument(
        "--check", action="store_true",
        help="also rebuild the product from separation traces",
    )
    star_cmd.set_defaults(func=_cmd_star)

    verify = subs.add_parser("verify", help="numerical branch-list verification")
    _add_io_arguments(verify)
    verify.add_argument("--samples", type=int, default=20)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tol", type=float, default=numeric_mod.DEFAULT_TOL)
    verify.set_defaults(func=_cmd_verify)

    factor = subs.add_parser("factor", help="degree-1 shell factorization")
    _add_io_arguments(factor)
    factor.set_defaults(func=_cmd_factor)

    return ap


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        doc = {
            "command": args.command,
            "error": {
                "kind": exc.kind,
                "message": str(exc),
                **exc.extra,
            },
        }
        if args.json:
            print(json.dumps(doc, indent=2))
        else:
            print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
