"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 violated construction hypothesis, 4 eigensolver non-convergence.
Data goes to stdout (or --out), diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize as ser
from .canon import local_orders_at, smith_form, smith_mcmillan
from .constructors import (PreconditionError, assemble_rational, build_block_kronecker, build_block_kronecker_rev,
                           build_comrade, build_comrade_rev, build_cork, build_cork_rev, build_extended_bk,
                           build_extended_bk_rev, build_frobenius, build_frobenius_rev, comrade_polynomial,
                           pencil_system)
from .numeig import ConvergenceError, default_tol, pencil_eig, pencil_matrices, recover_and_check
from .polymat import Pencil, PolyMatrix, RatMatrix
from .rosenbrock import SingularStateError, SystemMatrix
from .verify import reversed_partition, verify_linearization, verify_strong_direct, verify_strong_local

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NONCONVERGENCE = 4

CLI_FAMILIES = ("frobenius", "comrade", "cork", "blockkron", "extblockkron", "rational")


class UsageError(ValueError):
    pass


def _emit(payload, out: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=1)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _poly_json(p) -> dict:
    return {"text": str(p), "coeffs": ser.enc_poly(p)}


# -- construct ----------------------------------------------------------------
def construct(family: str, doc: dict, rev: bool) -> tuple:
    """Build the system matrix for a parsed family document.

    Returns ``(system_matrix, polynomial)`` where the polynomial is the one
    the forward pencil linearizes.
    """
    if doc.get("kind") == "poly_matrix" and family == "frobenius":
        P = ser.from_doc(doc)
    else:
        spec = ser.from_doc(doc)
        if not isinstance(spec, ser.FamilySpec):
            raise UsageError(f"--family {family} needs a family_spec document")
        if spec.family != family:
            raise UsageError(f"input describes family {spec.family!r}, not {family!r}")
        P = spec.data
    if family == "frobenius":
        return (build_frobenius_rev(P) if rev else build_frobenius(P)), P
    if family == "comrade":
        coeffs, basis = P
        return (build_comrade_rev if rev else build_comrade)(coeffs, basis), comrade_polynomial(coeffs, basis)
    if family == "cork":
        return (build_cork_rev(P) if rev else build_cork(P)), P.polynomial()
    if family == "blockkron":
        return (build_block_kronecker_rev(P) if rev else build_block_kronecker(P)[0]), P.induced_polynomial()
    if family == "extblockkron":
        return (build_extended_bk_rev(P) if rev else build_extended_bk(P)[0]), P.induced_polynomial()
    real, Ppoly, Rsp = P
    if rev:
        raise UsageError("--rev is only defined for the polynomial families")
    if Rsp is not None and real.transfer() != Rsp:
        raise PreconditionError("C_s (lambda I - A_s)^-1 B_s equals the strictly proper part of R")
    psm = build_frobenius(Ppoly) if Ppoly.degree() >= 2 else pencil_system(Ppoly)
    return assemble_rational(real, psm), Ppoly


def cmd_construct(args) -> int:
    sm, P = construct(args.family, ser.load_doc(args.input), args.rev)
    _emit(ser.dumps(sm, role="reversed" if args.rev else "forward"), args.out)
    if args.poly_out:
        ser.write(args.poly_out, P)
    print(f"constructed {args.family}{' (reversed)' if args.rev else ''}: {sm}", file=sys.stderr)
    return EXIT_OK


# -- verify -------------------------------------------------------------------
def _read_system(path: str) -> tuple:
    doc = ser.load_doc(path)
    obj = ser.from_doc(doc)
    if not isinstance(obj, SystemMatrix):
        raise UsageError(f"{path} is not a system_matrix document")
    return obj, doc.get("role", "forward")


def _read_poly(path: str) -> PolyMatrix:
    obj = ser.read(path)
    if isinstance(obj, RatMatrix) and obj.is_polynomial():
        obj = obj.to_polymatrix()
    if not isinstance(obj, PolyMatrix):
        raise UsageError(f"{path} is not a polynomial matrix")
    return obj


def cmd_verify(args) -> int:
    sm, role = _read_system(args.pencil)
    P = _read_poly(args.poly)
    reports = []
    lin = None
    if role != "reversed":
        lin = verify_linearization(sm, P, smith=not args.no_smith)
        reports.append(lin)
    if args.strong or role == "reversed":
        ell = args.ell if args.ell is not None else P.degree()
        if role == "reversed":
            rev = sm
        elif args.rev_pencil:
            rev = _read_system(args.rev_pencil)[0]
        else:
            rev = reversed_partition(sm)
        if args.mode == "local":
            reports.append(verify_strong_local(rev, P, ell, linearization=lin))
        else:
            reports.append(verify_strong_direct(rev, P, ell))
    passed = all(r.passed for r in reports)
    _emit({"passed": passed, "reports": [r.to_dict() for r in reports]}, args.out)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


# -- smith --------------------------------------------------------------------
def cmd_smith(args) -> int:
    M = ser.read(args.input)
    if isinstance(M, Pencil):
        M = M.as_poly()
    if isinstance(M, SystemMatrix):
        M = M.S
    if not isinstance(M, (PolyMatrix, RatMatrix)):
        raise UsageError("smith needs a poly_matrix, rat_matrix, pencil or system_matrix")
    out: dict = {"rows": M.rows, "cols": M.cols}
    if args.mcmillan or isinstance(M, RatMatrix):
        d = smith_mcmillan(M)
        out["normal_rank"] = d.normal_rank
        out["numerators"] = [_poly_json(e) for e in d.numerators]
        out["denominators"] = [_poly_json(p) for p in d.denominators]
    else:
        out["invariant_factors"] = [_poly_json(f) for f in smith_form(M).invariant_factors]
    if args.at is not None:
        try:
            pt = Fraction(args.at)
        except (ValueError, ZeroDivisionError):
            raise ser.ParseError(f"bad point {args.at!r}") from None
        lo = local_orders_at(M, pt)
        out["local_orders"] = {"point": str(pt), "orders": list(lo.orders)}
    _emit(out, args.out)
    return EXIT_OK


# -- eig ----------------------------------------------------------------------
def cmd_eig(args) -> int:
    obj = ser.read(args.pencil)
    sm = obj if isinstance(obj, SystemMatrix) else None
    if isinstance(obj, SystemMatrix):
        M1, M0 = pencil_matrices(obj.S)
    elif isinstance(obj, Pencil):
        M1, M0 = pencil_matrices(obj.as_poly())
    elif isinstance(obj, PolyMatrix):
        M1, M0 = pencil_matrices(obj)
    else:
        raise UsageError("eig needs a pencil, system_matrix or degree-1 poly_matrix")
    tol = args.tol if args.tol is not None else default_tol()
    res = pencil_eig(M1, M0, tol)
    out = res.to_dict()
    if args.recover:
        if sm is None or not args.poly:
            raise UsageError("--recover needs a system_matrix pencil and --poly")
        target = ser.read(args.poly)
        out["recovery"] = recover_and_check(sm, res, target, tol).to_dict()
    _emit(out, args.out)
    if not res.ok:
        print(f"{sum(not c for c in res.converged)} eigenpair(s) did not reach tol {tol}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


def cmd_demo(args) -> int:
    from .demo import run_demo

    return run_demo(as_json=args.json)


# -- driver -------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rosenlin", description="Linearizations of polynomial and rational matrices "
                                                               "checked through polynomial system matrices.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a linearization from a family spec")
    c.add_argument("--family", required=True, choices=CLI_FAMILIES)
    c.add_argument("--input", required=True)
    c.add_argument("--rev", action="store_true", help="emit the reversed-pencil partition")
    c.add_argument("--out")
    c.add_argument("--poly-out", help="also write the linearized polynomial")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify that a system matrix linearizes a polynomial")
    v.add_argument("--pencil", required=True)
    v.add_argument("--poly", required=True)
    v.add_argument("--strong", action="store_true")
    v.add_argument("--ell", type=int)
    v.add_argument("--mode", choices=("direct", "local"), default="direct")
    v.add_argument("--rev-pencil", help="reversed partition (default: rev_1 S, state bottom-right)")
    v.add_argument("--no-smith", action="store_true", help="skip the Smith padding check")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("smith", help="Smith or Smith-McMillan form")
    s.add_argument("--input", required=True)
    s.add_argument("--at", help="rational point for local orders")
    s.add_argument("--mcmillan", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_smith)

    e = sub.add_parser("eig", help="eigenvalues of a pencil")
    e.add_argument("--pencil", required=True)
    e.add_argument("--recover", action="store_true")
    e.add_argument("--poly")
    e.add_argument("--tol", type=float)
    e.add_argument("--out")
    e.set_defaults(func=cmd_eig)

    d = sub.add_parser("demo", help="run every worked example")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_demo)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ser.ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
