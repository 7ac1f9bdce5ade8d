"""Command-line front end.

One job per invocation: parse the algebra (a JSON file or a preset
string), the matrix and the multiplier, dispatch the computation, and
print a JSON document.  Every result echoes the digests of its inputs so
golden files can cross-reference them.  Errors print a JSON document with
the exception name and exit with its code: 2 parse, 3 precondition, 4
mathematical, 5 verification failure.
"""

import argparse
import json

from .algebra import twist
from .berezinian import gber
from .errors import GradedetError, IncompatibleGroups, ParseError
from .gdet import all_ns_multipliers, canonical_sigma, gdet0, gdet_sigma
from .gmatrix import GradedMatrix, graded_trace
from .oracles import SUITES, run_property_sweeps
from .serialize import (FORMAT, digest_algebra, digest_matrix,
                        digest_multiplier, format_algebra, format_multiplier,
                        load_json, parse_algebra, parse_matrix,
                        parse_multiplier, parse_preset, result_doc)


def _parser():
    parser = argparse.ArgumentParser(
        prog="gradedet",
        description="Exact linear algebra over graded-commutative algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, matrix=False, sigma=False, algebra=True):
        p = sub.add_parser(name, help=help_text)
        if algebra:
            p.add_argument("--algebra", required=True,
                           help="algebra JSON file or preset:NAME[:a,b,...]")
        if matrix:
            p.add_argument("--matrix", required=True,
                           help="matrix JSON file")
            p.add_argument("--degrees", default=None,
                           help="inline JSON degree override: a list for "
                                "both vectors or {\"row\": ..., \"col\": ...}")
        if sigma:
            p.add_argument("--sigma", default="auto",
                           help="multiplier JSON file, or auto for the "
                                "internal one")
        p.add_argument("--format", default="json",
                       choices=("json", "pretty"), help="output layout")
        return p

    add("trace", "graded trace of a matrix", matrix=True)
    add("gdet0", "graded determinant of a degree-0 matrix", matrix=True)
    add("gdet", "graded determinant for a chosen multiplier",
        matrix=True, sigma=True)
    add("gber", "graded Berezinian for a chosen multiplier",
        matrix=True, sigma=True)
    add("twist", "the twisted algebra as a JSON document", sigma=True)
    add("solve-sigma", "multipliers whose twist is the super sign rule")
    verify = add("verify", "run the seeded verification sweeps",
                 algebra=False)
    verify.add_argument("--suite", default=None, choices=sorted(SUITES),
                        help="run one suite instead of all")
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _load_algebra(text, sigma=None):
    if text.startswith("preset:"):
        return parse_preset(text, sigma)
    return parse_algebra(load_json(text), where=text)


def _load_sigma(text, algebra):
    if text == "auto":
        return canonical_sigma(algebra)
    m = parse_multiplier(load_json(text), where=text)
    if m.group != algebra.group:
        raise IncompatibleGroups(
            f"multiplier group {m.group!r} does not match the algebra "
            f"group {algebra.group!r}")
    return m


def _apply_degrees(x, text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--degrees: invalid JSON: {exc}") from exc
    if isinstance(doc, dict):
        rows = doc.get("row", [list(d.residues) for d in x.row_degrees])
        cols = doc.get("col", [list(d.residues) for d in x.col_degrees])
    elif isinstance(doc, list):
        rows = cols = doc
    else:
        raise ParseError("--degrees: expected a list or an object")
    group = x.algebra.group
    try:
        mu = [group.element(d) for d in rows]
        nu = [group.element(d) for d in cols]
    except GradedetError as exc:
        raise ParseError(f"--degrees: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ParseError(f"--degrees: bad degree vector: {exc}") from exc
    if len(mu) != x.nrows or len(nu) != x.ncols:
        raise ParseError(
            f"--degrees: the matrix is {x.nrows}x{x.ncols}, got "
            f"{len(mu)} row and {len(nu)} column degrees")
    return GradedMatrix(x.algebra, mu, nu, x.entries)


def _matrix_job(args, sigma_needed=False):
    sigma = None
    algebra = _load_algebra(args.algebra)
    if sigma_needed:
        sigma = _load_sigma(args.sigma, algebra)
    x = parse_matrix(load_json(args.matrix), algebra, where=args.matrix)
    if args.degrees:
        x = _apply_degrees(x, args.degrees)
    inputs = {"algebra": digest_algebra(algebra),
              "matrix": digest_matrix(x)}
    if sigma is not None:
        inputs["sigma"] = digest_multiplier(sigma)
    return algebra, x, sigma, inputs


def _dispatch(args):
    if args.command == "trace":
        _, x, _, inputs = _matrix_job(args)
        return result_doc(graded_trace(x), inputs), 0
    if args.command == "gdet0":
        _, x, _, inputs = _matrix_job(args)
        return result_doc(gdet0(x), inputs), 0
    if args.command == "gdet":
        _, x, sigma, inputs = _matrix_job(args, sigma_needed=True)
        return result_doc(gdet_sigma(x, sigma), inputs), 0
    if args.command == "gber":
        _, x, sigma, inputs = _matrix_job(args, sigma_needed=True)
        return result_doc(gber(x, sigma), inputs), 0
    if args.command == "twist":
        algebra = _load_algebra(args.algebra)
        sigma = _load_sigma(args.sigma, algebra)
        doc = format_algebra(twist(algebra, sigma))
        doc["inputs"] = {"algebra": digest_algebra(algebra),
                         "sigma": digest_multiplier(sigma)}
        return doc, 0
    if args.command == "solve-sigma":
        algebra = _load_algebra(args.algebra)
        sigmas = all_ns_multipliers(algebra.lam)
        return {"format": FORMAT,
                "multiplier": format_multiplier(sigmas[0]),
                "all": [format_multiplier(s) for s in sigmas],
                "inputs": {"algebra": digest_algebra(algebra)}}, 0
    # verify
    suites = None if args.suite is None else [args.suite]
    reports = run_property_sweeps(seed=args.seed, suites=suites)
    doc = {"format": FORMAT, "seed": args.seed,
           "reports": [r.to_doc() for r in reports]}
    status = 0 if all(r.ok for r in reports) else 5
    return doc, status


def _dump(doc, layout):
    if layout == "pretty":
        return json.dumps(doc, indent=2, sort_keys=True)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        doc, status = _dispatch(args)
    except GradedetError as exc:
        print(_dump({"format": FORMAT, "error": type(exc).__name__,
                     "message": str(exc)}, args.format))
        return exc.exit_code
    print(_dump(doc, args.format))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
