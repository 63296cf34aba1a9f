"""Worked examples, each re-derived end to end and reported as a pass/fail table."""
from __future__ import annotations

import contextlib
import io
import json
import math
import os
import random
import sys
import tempfile
import time
from fractions import Fraction

import numpy as np

from . import serialize as ser
from .canon import equivalent_at_zero, gcd_minors_oracle, local_orders_at, smith_form, smith_mcmillan
from .constructors import (BlockKroneckerSpec, RecurrenceBasis, Realization, assemble_rational, build_block_kronecker,
                           build_block_kronecker_rev, build_comrade, build_comrade_rev, build_cork, build_cork_rev,
                           build_extended_bk, build_extended_bk_rev, build_frobenius, build_frobenius_rev,
                           comrade_polynomial, comrade_rev_scale, cork_rev_scale, monomial_cork_spec,
                           pencil_system, realization_minimal, recurrence_cork_spec, split_poly_sp)
from .exactalg import LAMBDA, ONE, RatFunc, UniPoly, poly_gcd, poly_reverse, valuation_at
from .families import random_bk_spec, random_square_regular
from .numeig import eigvec_at, pencil_eig, pencil_matrices, recover_and_check, system_eig
from .polymat import (PolyMatrix, RatMatrix, build_Lambda, build_Lk, is_unimodular, pm_det, pm_eval, pm_reversal,
                      rank_at, rm_solve)
from .rosenbrock import (SystemMatrix, check_rosenbrock_theorem, is_minimal, recover_left, recover_right,
                         transfer_function)
from .verify import run_family_suite, verify_linearization, verify_strong_direct, verify_strong_local

EXAMPLES: list = []


def example(group: str, name: str):
    def deco(fn):
        EXAMPLES.append((group, name, fn))
        return fn
    return deco


def U(*coeffs) -> UniPoly:
    return UniPoly(coeffs)


def pm(rows) -> PolyMatrix:
    return PolyMatrix([[e if isinstance(e, UniPoly) else UniPoly.const(e) for e in r] for r in rows])


def scalar(p: UniPoly) -> PolyMatrix:
    return PolyMatrix([[p]], rows=1, cols=1)


def G(sm) -> RatMatrix:
    return transfer_function(sm).G


def is_poly(sm, P) -> bool:
    return G(sm) == P.to_ratmatrix()


P_SQ = scalar(U(-1, 0, 1))          # lambda^2 - 1
FROB_SQ = pm([[LAMBDA, -1], [-1, LAMBDA]])
CHEB = RecurrenceBasis.chebyshev(3)
T2_COEFFS = [[[0]], [[0]], [[1]]]
S_POLE = pm([[LAMBDA, 1], [-1, 0]])


def lambda3_spec(Y=None, Z=None) -> BlockKroneckerSpec:
    return BlockKroneckerSpec([[0, 0], [0, 0]], [[1, 0], [0, 0]], 1, 1, 1, 1, Y, Z)


def cubic_assembly() -> SystemMatrix:
    return assemble_rational(Realization([[0]], [[1]], [[1]]), build_frobenius(scalar(U(0, 0, 1))))


def cheb_cork():
    coeffs = [[[1]], [[-2]], [[3]], [[5]]]
    return recurrence_cork_spec(coeffs, RecurrenceBasis.chebyshev(4)), coeffs


# -- exact scalars ------------------------------------------------------------
@example("exactalg", "divmod(l^2-1, l-1) = (l+1, 0)")
def _():
    return divmod(U(-1, 0, 1), U(-1, 1)) == (U(1, 1), U())


@example("exactalg", "gcd(2l^2-2, 4l-4) = l-1")
def _():
    return poly_gcd(U(-2, 0, 2), U(-4, 4)) == U(-1, 1)


@example("exactalg", "rev_3(l+2) = 2l^3 + l^2")
def _():
    return poly_reverse(U(2, 1), 3) == U(0, 0, 1, 2)


@example("exactalg", "1/l + l = (l^2+1)/l")
def _():
    return RatFunc(ONE, LAMBDA) + RatFunc(LAMBDA) == RatFunc(U(1, 0, 1), LAMBDA)


@example("exactalg", "valuation of (l^3+1)/l at 0 is -1")
def _():
    return valuation_at(RatFunc(U(1, 0, 0, 1), LAMBDA), 0) == -1


# -- polynomial matrices --------------------------------------------------------
@example("polymat", "[[l,-1],[-1,l]] at 1 = [[1,-1],[-1,1]]")
def _():
    return pm_eval(FROB_SQ, Fraction(1)) == ((1, -1), (-1, 1))


@example("polymat", "det [[l,-1],[-1,l]] = l^2-1")
def _():
    return pm_det(FROB_SQ) == U(-1, 0, 1)


@example("polymat", "det of the rational assembly = -l^3-1")
def _():
    return pm_det(pm([[LAMBDA, 0, 1], [0, -1, LAMBDA], [-1, LAMBDA, 0]])) == U(-1, 0, 0, -1)


@example("polymat", "Frobenius state block, k=3, m=2, is unimodular")
def _():
    P = PolyMatrix.from_coeffs([[[1, 2], [3, 4]], [[0, 1], [1, 0]], [[5, 0], [0, 6]], [[1, 0], [0, 1]]])
    return is_unimodular(build_frobenius(P).A)


@example("polymat", "rank of [[l,-1],[-1,l]] at 1 is 1")
def _():
    return rank_at(FROB_SQ, 1) == 1


@example("polymat", "Lambda(2,1) = [l; 1], Lambda(3,1) = [l^2; l; 1]")
def _():
    return (build_Lambda(2, 1) == pm([[LAMBDA], [1]])
            and build_Lambda(3, 1) == pm([[U(0, 0, 1)], [LAMBDA], [1]]))


@example("polymat", "L_1 = [-1, l], L_2 = [[-1,l,0],[0,-1,l]]")
def _():
    return (build_Lk(1, 1) == pm([[-1, LAMBDA]])
            and build_Lk(2, 1) == pm([[-1, LAMBDA, 0], [0, -1, LAMBDA]]))


@example("polymat", "Frobenius k=3, m=1: A^-1 B = -[l^2; l]")
def _():
    sm = build_frobenius(scalar(U(1, 2, 3, 1)))
    return rm_solve(sm.A, sm.B) == pm([[U(0, 0, -1)], [U(0, -1)]]).to_ratmatrix()


# -- canonical forms ------------------------------------------------------------
@example("canon", "Smith [[l,1],[0,l]] = (1, l^2)")
def _():
    sd = smith_form(pm([[LAMBDA, 1], [0, LAMBDA]]), with_transforms=True)
    M = pm([[LAMBDA, 1], [0, LAMBDA]])
    return (sd.invariant_factors == (ONE, U(0, 0, 1))
            and sd.left_transform @ M @ sd.right_transform == sd.diagonal(2, 2))


@example("canon", "Smith of Frobenius pencil of l^2-1 = (1, l^2-1)")
def _():
    f = smith_form(FROB_SQ).invariant_factors
    return f == (ONE, U(-1, 0, 1)) and gcd_minors_oracle(FROB_SQ).invariant_factors == f


@example("canon", "Smith-McMillan of (l^3+1)/l: eps = l^3+1, psi = l")
def _():
    d = smith_mcmillan(RatMatrix([[RatFunc(U(1, 0, 0, 1), LAMBDA)]]))
    return d.numerators == (U(1, 0, 0, 1),) and d.denominators == (LAMBDA,)


@example("canon", "Smith-McMillan of diag(1/l, l) = (1/l, l)")
def _():
    R = RatMatrix([[RatFunc(ONE, LAMBDA), RatFunc(U())], [RatFunc(U()), RatFunc(LAMBDA)]])
    return smith_mcmillan(R).invariant_functions() == (RatFunc(ONE, LAMBDA), RatFunc(LAMBDA))


@example("canon", "orders of [[l,1],[0,l]] at 0 = [0, 2]")
def _():
    return local_orders_at(pm([[LAMBDA, 1], [0, LAMBDA]]), 0).orders == (0, 2)


@example("canon", "[[l]] and [[2l + l^2]] equivalent at 0")
def _():
    return equivalent_at_zero(pm([[LAMBDA]]), pm([[U(0, 2, 1)]]))


@example("canon", "gcd-of-minors oracle on [[l,1],[0,l]] = (1, l^2)")
def _():
    return gcd_minors_oracle(pm([[LAMBDA, 1], [0, LAMBDA]])).invariant_factors == (ONE, U(0, 0, 1))


# -- system matrices --------------------------------------------------------------
@example("rosenbrock", "transfer of Frobenius l^2-1 = l^2-1")
def _():
    sm = SystemMatrix.from_layout(FROB_SQ, 1, "state_bottom_left")
    return (sm.A, sm.B, sm.minus_C, sm.D) == (pm([[-1]]), pm([[LAMBDA]]), pm([[LAMBDA]]), pm([[-1]])) and \
        is_poly(sm, P_SQ)


@example("rosenbrock", "[[l,1],[-1,0]]: transfer 1/l, not polynomial")
def _():
    tr = transfer_function(SystemMatrix.from_layout(S_POLE, 1, "state_top_left"))
    return tr.G == RatMatrix([[RatFunc(ONE, LAMBDA)]]) and not tr.is_polynomial


@example("rosenbrock", "[[l,1],[-1,0]] minimal; [[l,l],[-l,0]] not")
def _():
    a = is_minimal(SystemMatrix.from_layout(S_POLE, 1, "state_top_left"))
    b = is_minimal(SystemMatrix.from_layout(pm([[LAMBDA, LAMBDA], [U(0, -1), 0]]), 1, "state_top_left"))
    return a and not b


@example("rosenbrock", "unimodular state implies minimal (Frobenius, random CORK)")
def _():
    from .families import gen_cork

    sms = [build_frobenius(scalar(U(1, 2, 3, 4))), gen_cork(random.Random(11)).forward]
    return all(is_unimodular(s.A) and is_minimal(s) for s in sms)


@example("rosenbrock", "poles/zeros of [[l,1],[-1,0]] at 0")
def _():
    rep = check_rosenbrock_theorem(SystemMatrix.from_layout(S_POLE, 1, "state_top_left"), [0])
    row = rep.points[0]
    return rep.passed and row["pole_orders"] == [1] and row["zero_orders"] == []


@example("rosenbrock", "poles/zeros of the rational assembly at 0 and -1")
def _():
    rep = check_rosenbrock_theorem(cubic_assembly(), [0, -1])
    a, b = rep.points
    return rep.passed and a["pole_orders"] == [1] and b["zero_orders"] == [1]


@example("rosenbrock", "right recovery at 1: x=[1] -> [1; 1], C_1(1) v = 0")
def _():
    sm = build_frobenius(P_SQ)
    v = recover_right(sm, 1, [1])
    M = pm_eval(sm.S, Fraction(1))
    return v == [1, 1] and all(sum(M[i][j] * v[j] for j in range(2)) == 0 for i in range(2))


@example("rosenbrock", "right recovery at -1: x=[1] -> [-1; 1]")
def _():
    return recover_right(build_frobenius(P_SQ), -1, [1]) == [-1, 1]


@example("rosenbrock", "left recovery at 1: y=[1] -> [1, 1], w C_1(1) = 0")
def _():
    sm = build_frobenius(P_SQ)
    w = recover_left(sm, 1, [1])
    M = pm_eval(sm.S, Fraction(1))
    return w == [1, 1] and all(sum(w[i] * M[i][j] for i in range(2)) == 0 for j in range(2))


@example("rosenbrock", "left recovery at -1: y=[1] -> [-1, 1] (state part first)")
def _():
    return recover_left(build_frobenius(P_SQ), -1, [1], order="canonical") == [-1, 1]


# -- constructors -------------------------------------------------------------------
@example("constructors", "Frobenius of l^2-1")
def _():
    sm = build_frobenius(P_SQ)
    return sm.S == FROB_SQ and sm.n == 1 and is_poly(sm, P_SQ)


@example("constructors", "Frobenius of l^3: 3x3, transfer l^3")
def _():
    P = scalar(U(0, 0, 0, 1))
    sm = build_frobenius(P)
    return sm.S.shape == (3, 3) and is_poly(sm, P)


@example("constructors", "reversed Frobenius of l^2-1: transfer 1-l^2")
def _():
    sm = build_frobenius_rev(P_SQ)
    return sm.S == pm([[1, U(0, -1)], [U(0, -1), 1]]) and is_poly(sm, scalar(U(1, 0, -1)))


@example("constructors", "reversed Frobenius of l^3+l^2: transfer 1+l")
def _():
    return is_poly(build_frobenius_rev(scalar(U(0, 0, 1, 1))), scalar(U(1, 1)))


@example("constructors", "comrade of T_2: [[2l,-1],[-1,l]], transfer 2l^2-1")
def _():
    sm = build_comrade(T2_COEFFS, CHEB)
    return sm.S == pm([[U(0, 2), -1], [-1, LAMBDA]]) and is_poly(sm, scalar(U(-1, 0, 2)))


@example("constructors", "comrade with monomial recurrence = Frobenius")
def _():
    coeffs = [[[1, 2]], [[0, 3]], [[4, 0]], [[1, 1]]]
    P = PolyMatrix.from_coeffs(coeffs)
    return build_comrade(coeffs, RecurrenceBasis.monomial(3)).S == build_frobenius(P).S


@example("constructors", "reversed comrade of T_2: f = 1, transfer 2-l^2")
def _():
    sm = build_comrade_rev(T2_COEFFS, CHEB)
    return comrade_rev_scale(CHEB, 2) == ONE and is_poly(sm, scalar(U(2, 0, -1)))


@example("constructors", "reversed comrade, monomial basis = reversed Frobenius")
def _():
    coeffs = [[[1]], [[2]], [[3]], [[4]]]
    a = build_comrade_rev(coeffs, RecurrenceBasis.monomial(3))
    b = build_frobenius_rev(PolyMatrix.from_coeffs(coeffs))
    return comrade_rev_scale(RecurrenceBasis.monomial(3), 3) == ONE and a.S == b.S


@example("constructors", "monomial CORK, k=3: transfer l^3 + 2l")
def _():
    P = scalar(U(0, 2, 0, 1))
    spec = monomial_cork_spec(P)
    rel = spec.relation()
    sm = build_cork(spec)
    return (rel == pm([[-1, LAMBDA, 0], [0, -1, LAMBDA]]) and sm.S.shape == (3, 3) and is_poly(sm, P))


@example("constructors", "Chebyshev CORK, k=3 = comrade transfer")
def _():
    spec, coeffs = cheb_cork()
    P = comrade_polynomial(coeffs, RecurrenceBasis.chebyshev(4))
    return is_poly(build_cork(spec), P) and is_poly(build_comrade(coeffs, RecurrenceBasis.chebyshev(4)), P)


@example("constructors", "reversed monomial CORK: q = 1, transfer rev_3 P")
def _():
    P = scalar(U(0, 2, 0, 1))
    spec = monomial_cork_spec(P)
    return cork_rev_scale(spec) == ONE and is_poly(build_cork_rev(spec), pm_reversal(P, 3))


@example("constructors", "reversed Chebyshev CORK: q = 2 - l^2")
def _():
    spec, _ = cheb_cork()
    q = cork_rev_scale(spec)
    g = G(build_cork_rev(spec))
    return q == U(2, 0, -1) and q(0) == 2 and g.scale(RatFunc(q)) == pm_reversal(spec.polynomial(), 3).to_ratmatrix()


@example("constructors", "block Kronecker eps=eta=1: P = l^3, state det -1")
def _():
    sm, P = build_block_kronecker(lambda3_spec())
    return (P == scalar(U(0, 0, 0, 1)) and sm.A == pm([[LAMBDA, -1], [-1, 0]]) and pm_det(sm.A) == U(-1)
            and is_poly(sm, P))


@example("constructors", "block Kronecker eps=2, eta=1: P = l^4")
def _():
    M1 = [[1, 0, 0], [0, 0, 0]]
    spec = BlockKroneckerSpec([[0] * 3] * 2, M1, 2, 1, 1, 1)
    sm, P = build_block_kronecker(spec)
    return P == scalar(U(0, 0, 0, 0, 1)) and is_poly(sm, P)


@example("constructors", "reversed block Kronecker of l^3: transfer 1")
def _():
    return is_poly(build_block_kronecker_rev(lambda3_spec()), scalar(ONE))


@example("constructors", "reversed block Kronecker, random eps=eta=1")
def _():
    rng = random.Random(2024)
    M0 = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2)] for _ in range(2)]
    M1 = [[Fraction(1), Fraction(rng.randint(-9, 9), 7)], [Fraction(rng.randint(-9, 9), 5), Fraction(2, 3)]]
    spec = BlockKroneckerSpec(M0, M1, 1, 1, 1, 1)
    P = spec.induced_polynomial()
    return P.degree() == 3 and is_poly(build_block_kronecker_rev(spec), pm_reversal(P, 3))


@example("constructors", "extended block Kronecker with Y=[2], Z=[3]: transfer l^3")
def _():
    sm, P = build_extended_bk(lambda3_spec([[2]], [[3]]))
    return P == scalar(U(0, 0, 0, 1)) and is_poly(sm, P)


@example("constructors", "extended block Kronecker, random Y, Z: transfer invariant")
def _():
    rng = random.Random(7)
    base = random_bk_spec(rng, extended=True)
    P = base.induced_polynomial()
    ok = True
    for _ in range(3):
        other = random_bk_spec(random.Random(rng.random()), extended=True)
        spec = BlockKroneckerSpec(base.M0, base.M1, base.eps, base.eta, base.p, base.m,
                                  _resize(other.Yext, base.eps * base.m, rng),
                                  _resize(other.Zext, base.eta * base.p, rng))
        ok &= is_poly(build_extended_bk(spec)[0], P)
    return ok


def _resize(_, n, rng):
    from .families import rand_invertible

    return rand_invertible(rng, n)


@example("constructors", "reversed extended BK, Y=[2], Z=[3]: l^3 -> 1; random -> rev_3 P")
def _():
    a = is_poly(build_extended_bk_rev(lambda3_spec([[2]], [[3]])), scalar(ONE))
    rng = random.Random(99)
    M0 = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2)] for _ in range(2)]
    spec = BlockKroneckerSpec(M0, [[1, 0], [Fraction(1, 2), 3]], 1, 1, 1, 1, [[2]], [[3]])
    P = spec.induced_polynomial()
    return a and is_poly(build_extended_bk_rev(spec), pm_reversal(P, 3))


@example("constructors", "split (l^3+1)/l = l^2 + 1/l")
def _():
    P, R = split_poly_sp(RatMatrix([[RatFunc(U(1, 0, 0, 1), LAMBDA)]]))
    return P == scalar(U(0, 0, 1)) and R == RatMatrix([[RatFunc(ONE, LAMBDA)]])


@example("constructors", "rational assembly: L = [[l,0,1],[0,-1,l],[-1,l,0]], transfer l^2 + 1/l")
def _():
    L = cubic_assembly()
    return (L.S == pm([[LAMBDA, 0, 1], [0, -1, LAMBDA], [-1, LAMBDA, 0]])
            and G(L) == RatMatrix([[RatFunc(U(1, 0, 0, 1), LAMBDA)]]) and pm_det(L.S) == U(-1, 0, 0, -1))


@example("constructors", "rational assembly: l + 1/(l-1) + 1/(l-2)")
def _():
    real = Realization([[1, 0], [0, 2]], [[1], [1]], [[1, 1]])
    L = assemble_rational(real, pencil_system(scalar(LAMBDA)))
    want = RatFunc(LAMBDA) + RatFunc(ONE, U(-1, 1)) + RatFunc(ONE, U(-2, 1))
    return G(L) == RatMatrix([[want]])


@example("constructors", "realization (diag(1,2), [1;1], [1,1]) is minimal")
def _():
    return realization_minimal(Realization([[1, 0], [0, 2]], [[1], [1]], [[1, 1]]))


# -- verification ---------------------------------------------------------------------
@example("verify", "linearization check: Frobenius of l^2-1")
def _():
    return verify_linearization(build_frobenius(P_SQ), P_SQ).passed


@example("verify", "strong (direct): reversed Frobenius of l^2-1, ell=2")
def _():
    return verify_strong_direct(build_frobenius_rev(P_SQ), P_SQ, 2).passed


@example("verify", "strong (direct): reversed block Kronecker of l^3, ell=3")
def _():
    sm = build_block_kronecker_rev(lambda3_spec())
    return verify_strong_direct(sm, scalar(U(0, 0, 0, 1)), 3).passed and is_poly(sm, scalar(ONE))


@example("verify", "strong (local): reversed Chebyshev CORK, ell=3")
def _():
    spec, _ = cheb_cork()
    lin = verify_linearization(build_cork(spec), spec.polynomial())
    rep = verify_strong_local(build_cork_rev(spec), spec.polynomial(), 3, linearization=lin)
    return rep.passed and rep.claims.get("strong_linearization") is True


@example("verify", "strong (local): reversed comrade of T_2, ell=2")
def _():
    return verify_strong_local(build_comrade_rev(T2_COEFFS, CHEB), scalar(U(-1, 0, 2)), 2).passed


@example("verify", "suite: frobenius, 100 trials, seed 42")
def _():
    s = run_family_suite("frobenius", 100, 42)
    return s.passed == 100, f"{s.passed} passed"


@example("verify", "suite: extended block Kronecker, 100 trials, seed 7")
def _():
    s = run_family_suite("extblockkron", 100, 7)
    return s.passed == 100, f"{s.passed} passed"


# -- numerics -------------------------------------------------------------------------
@example("numeig", "eigenvalues of Frobenius l^2-1 = {1,-1} within 1e-10")
def _():
    ev = sorted(z.real for z in system_eig(build_frobenius(P_SQ)).eigenvalues)
    return max(abs(a - b) for a, b in zip(ev, [-1, 1])) <= 1e-10


@example("numeig", "Frobenius of prod (l-j), j=1..5: eigenvalues within 1e-6")
def _():
    P = scalar(UniPoly.from_roots([1, 2, 3, 4, 5]))
    ev = sorted(z.real for z in system_eig(build_frobenius(P)).eigenvalues)
    err = max(abs(a - b) for a, b in zip(ev, range(1, 6)))
    return err <= 1e-6, f"max error {err:.1e}"


@example("numeig", "null vector of [[l,-1],[-1,l]] at 1 ~ [1,1]/sqrt2")
def _():
    r, _, res = eigvec_at([[1, 0], [0, 1]], [[0, -1], [-1, 0]], 1.0)
    return np.allclose(r, np.array([1, 1]) / math.sqrt(2), atol=1e-10) and res <= 1e-10


@example("numeig", "rational assembly at a cube root of -1: residual <= 1e-8")
def _():
    M1, M0 = pencil_matrices(cubic_assembly().S)
    lam = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    res = eigvec_at(M1, M0, lam).residual
    return res <= 1e-8, f"residual {res:.1e}"


@example("numeig", "Frobenius l^2-1: eigenvector at 1 ~ [1;1], P(1)*1 = 0")
def _():
    sm = build_frobenius(P_SQ)
    e = system_eig(sm)
    i = int(np.argmin([abs(z - 1) for z in e.eigenvalues]))
    v = e.right_vectors[i]
    rep = recover_and_check(sm, e, P_SQ)
    return abs(v[0] - v[1]) <= 1e-10 and rep.passed


@example("numeig", "comrade of T_2: eigenvalues +-cos(pi/4), recovered residual <= 1e-8")
def _():
    sm = build_comrade(T2_COEFFS, CHEB)
    e = system_eig(sm)
    c = math.cos(math.pi / 4)
    ev = sorted(z.real for z in e.eigenvalues)
    rep = recover_and_check(sm, e, scalar(U(-1, 0, 2)))
    return abs(ev[0] + c) <= 1e-10 and abs(ev[1] - c) <= 1e-10 and rep.max_right <= 1e-8


@example("numeig", "random regular 3x3, k=3: recovered residuals <= 1e-8")
def _():
    worst = 0.0
    for s in range(3):
        P = random_square_regular(random.Random(s), 3, 3)
        sm = build_frobenius(P)
        rep = recover_and_check(sm, system_eig(sm), P)
        worst = max(worst, rep.max_right, rep.max_left)
    return worst <= 1e-8, f"worst {worst:.1e}"


# -- command line -----------------------------------------------------------------------
def _run_cli(argv) -> tuple:
    from .cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


def _tmpfile(tmp, name, obj) -> str:
    path = os.path.join(tmp, name)
    if isinstance(obj, dict):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(obj, fh)
    else:
        ser.write(path, obj)
    return path


@example("cli", "construct frobenius l^2-1 -> [[l,-1],[-1,l]], n=1, bottom-left")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        inp = _tmpfile(tmp, "p.json", P_SQ)
        out = os.path.join(tmp, "s.json")
        code, _ = _run_cli(["construct", "--family", "frobenius", "--input", inp, "--out", out])
        sm = ser.read(out)
        return code == 0 and sm.S == FROB_SQ and sm.n == 1 and sm.layout == "state_bottom_left"


@example("cli", "construct rational from the running example -> 3x3 L")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        R = RatMatrix([[RatFunc(U(1, 0, 0, 1), LAMBDA)]])
        doc = {"kind": "family_spec", "family": "rational", "R": ser.to_doc(R),
               "realization": {"A_s": [[["0", "1"]]], "B_s": [[["1", "1"]]], "C_s": [[["1", "1"]]]}}
        inp = _tmpfile(tmp, "r.json", doc)
        out = os.path.join(tmp, "L.json")
        code, _ = _run_cli(["construct", "--family", "rational", "--input", inp, "--out", out])
        return code == 0 and ser.read(out).S == cubic_assembly().S


@example("cli", "verify Frobenius vs l^2-1 --strong --ell 2 --mode direct -> exit 0")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        pen = _tmpfile(tmp, "s.json", build_frobenius(P_SQ))
        poly = _tmpfile(tmp, "p.json", P_SQ)
        code, _ = _run_cli(["verify", "--pencil", pen, "--poly", poly, "--strong", "--ell", "2", "--mode", "direct"])
        return code == 0


@example("cli", "verify reversed comrade --mode local -> exit 0 with orders at 0")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        spec = _tmpfile(tmp, "c.json", ser.family_doc("comrade", ([ser.dec_qmat(ser.enc_qmat(c)) for c in
                                                                   [((0,),), ((0,),), ((1,),)]], CHEB)))
        pen = os.path.join(tmp, "rev.json")
        c1, _ = _run_cli(["construct", "--family", "comrade", "--input", spec, "--rev", "--out", pen])
        poly = _tmpfile(tmp, "p.json", scalar(U(-1, 0, 2)))
        c2, text = _run_cli(["verify", "--pencil", pen, "--poly", poly, "--mode", "local"])
        rep = json.loads(text)["reports"][0]
        return c1 == 0 and c2 == 0 and "orders at 0" in rep["details"]["equivalent_at_0"]


@example("cli", "smith [[l,1],[0,l]] -> 1, l^2")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        inp = _tmpfile(tmp, "m.json", pm([[LAMBDA, 1], [0, LAMBDA]]))
        code, text = _run_cli(["smith", "--input", inp])
        return code == 0 and [f["text"] for f in json.loads(text)["invariant_factors"]] == ["1", "λ^2"]


@example("cli", "smith --mcmillan [[(l^3+1)/l]] -> eps = l^3+1, psi = l")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        inp = _tmpfile(tmp, "r.json", RatMatrix([[RatFunc(U(1, 0, 0, 1), LAMBDA)]]))
        code, text = _run_cli(["smith", "--input", inp, "--mcmillan"])
        d = json.loads(text)
        return code == 0 and d["numerators"][0]["text"] == "λ^3 + 1" and d["denominators"][0]["text"] == "λ"


@example("cli", "eig of Frobenius l^2-1 -> +-1")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        pen = _tmpfile(tmp, "s.json", build_frobenius(P_SQ))
        code, text = _run_cli(["eig", "--pencil", pen])
        ev = sorted(z[0] for z in json.loads(text)["eigenvalues"])
        return code == 0 and np.allclose(ev, [-1, 1], atol=1e-10)


@example("cli", "eig --recover on the rational assembly -> cube roots of -1")
def _():
    with tempfile.TemporaryDirectory() as tmp:
        L = cubic_assembly()
        pen = _tmpfile(tmp, "L.json", L)
        poly = _tmpfile(tmp, "R.json", G(L))
        code, text = _run_cli(["eig", "--pencil", pen, "--recover", "--poly", poly])
        d = json.loads(text)
        cubes = all(abs(complex(*z) ** 3 + 1) <= 1e-8 for z in d["eigenvalues"])
        return code == 0 and len(d["eigenvalues"]) == 3 and cubes and d["recovery"]["max_right_residual"] <= 1e-8


# -- driver -------------------------------------------------------------------------------
def run_examples(selected=None) -> list:
    rows = []
    for group, name, fn in EXAMPLES:
        if selected and group not in selected:
            continue
        t0 = time.perf_counter()
        try:
            res = fn()
            ok, detail = res if isinstance(res, tuple) else (res, "")
        except Exception as exc:  # report, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append({"group": group, "example": name, "passed": bool(ok), "detail": detail,
                     "seconds": round(time.perf_counter() - t0, 3)})
    return rows


def run_demo(as_json: bool = False, stream=None) -> int:
    stream = stream or sys.stdout
    rows = run_examples()
    failed = [r for r in rows if not r["passed"]]
    if as_json:
        stream.write(json.dumps({"passed": not failed, "examples": rows}, indent=1) + "\n")
    else:
        width = max(len(r["example"]) for r in rows)
        for r in rows:
            mark = "PASS" if r["passed"] else "FAIL"
            extra = f"  {r['detail']}" if r["detail"] else ""
            stream.write(f"{mark}  {r['group']:<12} {r['example']:<{width}}{extra}\n")
        stream.write(f"\n{len(rows) - len(failed)}/{len(rows)} examples passed\n")
    return 0 if not failed else 1
