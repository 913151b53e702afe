"""Command-line front end.

Commands: classify (one germ or a @file batch), catalog (the xy^2 module
list), knorrer (double-branched-cover lift of a factorization), construct
(big indecomposables over the built-in conductor squares), verify
(check a matrix factorization identity).

Exit codes: 0 success, 1 parse/usage error, 2 unsupported characteristic,
3 insufficient precision (with a suggested retry).  JSON output is
canonical: UTF-8, keys sorted, integers bare, rationals as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .classify import classify, default_precision
from .dinfty import catalog_export_text, enumerate_dinfty
from .errors import (
    CharacteristicTwoError,
    CmTypeError,
    ParseError,
    PrecisionInsufficientError,
    SmallCharacteristicError,
    UnsupportedCharacteristicError,
    ZeroOrUnitInputError,
)
from .fields import FieldSpec, QQ, prime_field
from .mf import MatrixFactorization, knorrer_lift, verify_mf
from .pairs import (
    conductor_square,
    extension_cusp_cube,
    extension_double_line,
    pair_invariants,
    pair_k_into_small_fat_point,
)
from .pairmodules import (
    build_indecomposable_pair_module,
    is_indecomposable_pair_module,
    lift_module,
)
from .parser import infer_variables, parse_matrix, parse_series, matrix_to_text

_FIELD_RE = re.compile(r"^F[a-zA-Z0-9]*?:?(\d+)$")


def parse_field(text: str) -> FieldSpec:
    if text in ("Q", "q"):
        return QQ
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"field must be Q or Fp:<prime>, got {text!r}")
    try:
        return prime_field(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cmtype",
        description="Cohen-Macaulay representation type of hypersurface germs")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", default="Q",
                       help="coefficient field: Q or Fp:<prime> (default Q)")
        p.add_argument("--prec", type=int, default=None,
                       help="working precision (default 2*deg + 6)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=None,
                       help="reserved; all current algorithms are deterministic")

    p_classify = sub.add_parser("classify", help="classify a hypersurface germ")
    p_classify.add_argument("input", nargs="?", default=None,
                            help="expression, or @file with one per line")
    p_classify.add_argument("-f", "--function", default=None,
                            help="the defining power series (polynomial text)")
    p_classify.add_argument("--vars", default=None,
                            help="comma-separated variable order (default: "
                                 "inferred by first appearance)")
    common(p_classify)

    p_catalog = sub.add_parser("catalog",
                               help="indecomposables over k[[x,y]]/(xy^2)")
    p_catalog.add_argument("--kmax", type=int, default=3)
    common(p_catalog)

    p_knorrer = sub.add_parser("knorrer",
                               help="double-branched-cover lift of a factorization")
    p_knorrer.add_argument("-f", "--function", required=True)
    p_knorrer.add_argument("--phi", required=True, help="rows ';', entries ','")
    p_knorrer.add_argument("--psi", required=True)
    p_knorrer.add_argument("--var", default="z", help="fresh cover variable")
    common(p_knorrer)

    p_construct = sub.add_parser(
        "construct", help="indecomposable module of given constant rank")
    p_construct.add_argument("--rank", type=int, default=2)
    p_construct.add_argument("--family", choices=("y3", "y2q"), default="y3",
                             help="conductor square: y^3 or y^2(y+x^2)")
    common(p_construct)

    p_verify = sub.add_parser("verify", help="check phi*psi = psi*phi = f*I")
    p_verify.add_argument("-f", "--function", required=True)
    p_verify.add_argument("--phi", required=True)
    p_verify.add_argument("--psi", required=True)
    common(p_verify)

    return top


def _classify_one(text: str, field: FieldSpec, prec: int | None,
                  variables) -> dict:
    vars_ = variables or infer_variables(text)
    if not vars_:
        raise ParseError("expression contains no variables")
    probe = parse_series(text, vars_, field, 2 * 64)
    precision = prec if prec else default_precision(probe)
    f = parse_series(text, vars_, field, precision)
    report = classify(f, precision)
    return report.to_json_dict(text, str(field))


def _emit_classify(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(canonical_json(doc) + "\n")
        return
    bound = doc["generator_bound"]
    nf = doc["normal_form"]
    out.write(f"{doc['input']}: {doc['verdict']}"
              + (f", normal form {nf}" if nf else "")
              + (f", generator bound {bound}" if bound is not None else "")
              + f"  [d={doc['dimension']}, e={doc['multiplicity']}, "
                f"precision {doc['precision_used']}]\n")


def _run_classify(args, out) -> int:
    field = parse_field(args.field)
    variables = [v.strip() for v in args.vars.split(",")] if args.vars else None
    text = args.function if args.function is not None else args.input
    if text is None:
        raise ParseError("classify needs an expression (-f) or @file input")
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        for line in lines:
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            doc = _classify_one(stripped, field, args.prec, variables)
            _emit_classify(doc, args.format, out)
        return 0
    doc = _classify_one(text, field, args.prec, variables)
    _emit_classify(doc, args.format, out)
    return 0


def _run_catalog(args, out) -> int:
    field = parse_field(args.field)
    entries = enumerate_dinfty(args.kmax, field)
    if args.format == "json":
        docs = []
        for e in entries:
            docs.append({
                "label": e.label,
                "k": e.k_param,
                "phi": matrix_to_text(e.mf.phi),
                "psi": matrix_to_text(e.mf.psi),
                "degenerate": e.degenerate,
                "generators": e.minimized_size,
            })
        out.write(canonical_json({"equation": "x*y^2", "entries": docs}) + "\n")
    else:
        out.write(catalog_export_text(entries) + "\n")
    return 0


def _parse_mf(args, field: FieldSpec):
    texts = " ".join([args.function, args.phi, args.psi])
    variables = infer_variables(texts)
    prec = args.prec
    if prec is None:
        probe = parse_series(args.function, variables, field, 128)
        prec = default_precision(probe) + 4
    f = parse_series(args.function, variables, field, prec)
    phi = parse_matrix(args.phi, variables, field, prec)
    psi = parse_matrix(args.psi, variables, field, prec)
    return MatrixFactorization(f=f, phi=phi, psi=psi)


def _run_knorrer(args, out) -> int:
    field = parse_field(args.field)
    mf = _parse_mf(args, field)
    if not verify_mf(mf):
        sys.stderr.write("input is not a matrix factorization of f\n")
        return 1
    lifted = knorrer_lift(mf, args.var)
    ok = verify_mf(lifted)
    doc = {
        "equation": str(lifted.f).replace(" ", ""),
        "phi": matrix_to_text(lifted.phi),
        "psi": matrix_to_text(lifted.psi),
        "size": lifted.size,
        "verified": ok,
    }
    if args.format == "json":
        out.write(canonical_json(doc) + "\n")
    else:
        out.write(f"equation: {doc['equation']}\nphi: {doc['phi']}\n"
                  f"psi: {doc['psi']}\nverified: {ok}\n")
    return 0


def _run_construct(args, out) -> int:
    field = parse_field(args.field)
    if args.rank < 1:
        raise ParseError("--rank must be >= 1")
    ext = extension_cusp_cube(field) if args.family == "y3" \
        else extension_double_line(field)
    nu_rs, codim = pair_invariants(ext)
    square = conductor_square(ext)
    module = build_indecomposable_pair_module(pair_k_into_small_fat_point(field),
                                              args.rank)
    indec = is_indecomposable_pair_module(module)
    lifted = lift_module(module, square)
    doc = {
        "family": args.family,
        "field": str(field),
        "extension_generators": nu_rs,
        "noncyclicity": codim,
        "rank": lifted.rank,
        "module_generators": lifted.nu,
        "indecomposable": indec,
        "presentation_rows": lifted.presentation.rows,
        "presentation_cols": lifted.presentation.cols,
    }
    if args.format == "json":
        out.write(canonical_json(doc) + "\n")
    else:
        out.write(
            f"family {doc['family']} over {doc['field']}: nu_R(S) = {nu_rs}, "
            f"noncyclicity {codim}\n"
            f"indecomposable rank-{doc['rank']} module: {indec}, "
            f"nu = {doc['module_generators']}, presentation "
            f"{doc['presentation_rows']}x{doc['presentation_cols']}\n")
    return 0


def _run_verify(args, out) -> int:
    field = parse_field(args.field)
    mf = _parse_mf(args, field)
    ok = verify_mf(mf)
    if args.format == "json":
        out.write(canonical_json({"verified": ok}) + "\n")
    else:
        out.write(f"verified: {ok}\n")
    return 0 if ok else 1


def run_cli(argv) -> int:
    """Dispatch; returns the process exit code."""
    top = _build_argparser()
    try:
        args = top.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    out = sys.stdout
    try:
        if args.command == "classify":
            return _run_classify(args, out)
        if args.command == "catalog":
            return _run_catalog(args, out)
        if args.command == "knorrer":
            return _run_knorrer(args, out)
        if args.command == "construct":
            return _run_construct(args, out)
        if args.command == "verify":
            return _run_verify(args, out)
        raise ParseError(f"unknown command {args.command!r}")
    except (CharacteristicTwoError, UnsupportedCharacteristicError,
            SmallCharacteristicError) as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return 2
    except PrecisionInsufficientError as exc:
        sys.stderr.write(f"precision insufficient: {exc}\n")
        return 3
    except (ParseError, ZeroOrUnitInputError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except CmTypeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
