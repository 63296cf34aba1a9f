"""Seeded random instances of every family, plus corruption helpers.

Sizes follow the desk-scale envelope: p, m <= 3, degree k <= 5,
eps + eta + 1 <= 5, entries num/den with |num|, den <= 9.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .constructors import (BlockKroneckerSpec, CorkSpec, PreconditionError, RecurrenceBasis, build_block_kronecker,
                           build_block_kronecker_rev, build_comrade, build_comrade_rev, build_cork, build_cork_rev,
                           build_extended_bk, build_extended_bk_rev, build_frobenius, build_frobenius_rev,
                           comrade_polynomial)
from .exactalg import LAMBDA, ONE, UniPoly
from .polymat import PolyMatrix, q_det, q_matmul, q_shape
from .rosenbrock import SystemMatrix

BOUND = 9


@dataclass
class FamilyInstance:
    family: str
    P: PolyMatrix
    forward: SystemMatrix
    reverse: SystemMatrix
    ell: int
    strong_mode: str
    params: dict = field(default_factory=dict)


def rand_q(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-BOUND, BOUND), rng.randint(1, BOUND))
        if v or not nonzero:
            return v


def rand_qmat(rng: random.Random, r: int, c: int, density: float = 0.7) -> tuple:
    return tuple(tuple(rand_q(rng) if rng.random() < density else Fraction(0) for _ in range(c)) for _ in range(r))


def rand_nonzero_qmat(rng, r, c, density=0.7):
    while True:
        M = rand_qmat(rng, r, c, density)
        if any(v for row in M for v in row):
            return M


def rand_invertible(rng, n: int, density: float = 0.7) -> tuple:
    while True:
        M = rand_qmat(rng, n, n, density)
        if n == 0 or q_det(M) != 0:
            return M


def _dims(rng):
    return rng.randint(1, 3), rng.randint(1, 3)


def _degree(rng, p, m):
    return rng.randint(2, 5)


def random_poly_matrix(rng, p: int, m: int, k: int, density: float = 0.7) -> PolyMatrix:
    coeffs = [rand_qmat(rng, p, m, density) for _ in range(k)] + [rand_nonzero_qmat(rng, p, m, density)]
    return PolyMatrix.from_coeffs(coeffs, cols=m)


def random_square_regular(rng, n: int, k: int) -> PolyMatrix:
    """Square P with invertible leading coefficient (so regular, no infinite eigenvalues)."""
    coeffs = [rand_qmat(rng, n, n, 0.9) for _ in range(k)] + [rand_invertible(rng, n, 0.9)]
    return PolyMatrix.from_coeffs(coeffs, cols=n)


# ---------------------------------------------------------------------------
def gen_frobenius(rng) -> FamilyInstance:
    p, m = _dims(rng)
    k = _degree(rng, p, m)
    P = random_poly_matrix(rng, p, m, k)
    return FamilyInstance("frobenius", P, build_frobenius(P), build_frobenius_rev(P), k, "direct",
                          {"p": p, "m": m, "k": k})


def random_basis(rng, k: int) -> RecurrenceBasis:
    return RecurrenceBasis([rand_q(rng, True) for _ in range(k)], [rand_q(rng) for _ in range(k)],
                           [rand_q(rng) for _ in range(k)])


def gen_comrade(rng) -> FamilyInstance:
    p, m = _dims(rng)
    k = _degree(rng, p, m)
    basis = random_basis(rng, k)
    coeffs = [rand_qmat(rng, p, m) for _ in range(k)] + [rand_nonzero_qmat(rng, p, m)]
    P = comrade_polynomial(coeffs, basis)
    return FamilyInstance("comrade", P, build_comrade(coeffs, basis), build_comrade_rev(coeffs, basis), k, "local",
                          {"p": p, "m": m, "k": k})


def random_graded_basis(rng, k: int) -> list:
    """p_0 = 1 and random p_i of exact degree i."""
    out = [ONE]
    for i in range(1, k):
        out.append(UniPoly([rand_q(rng) for _ in range(i)] + [rand_q(rng, True)]))
    return out


def _express(target: UniPoly, basis: list) -> list:
    # coefficients c with target = sum c_j basis[j], basis graded by degree
    rest = target
    cs = [Fraction(0)] * len(basis)
    for j in range(len(basis) - 1, -1, -1):
        c = rest.coeff(j) / basis[j].lc
        cs[j] = c
        rest = rest - basis[j] * c
    if not rest.is_zero():
        raise ValueError("target lies outside the span of the basis")
    return cs


def graded_relations(basis: list) -> tuple:
    """Rows lambda p_(i-1) = sum_j c_j p_j for i = 1..k-1, columns ordered [p_(k-1), ..., p_0]."""
    k = len(basis)
    X, Y = [], []
    for i in range(1, k):
        cs = _express(LAMBDA * basis[i - 1], basis[:i + 1]) + [Fraction(0)] * (k - 1 - i)
        X.append([cs[k - 1 - c] for c in range(k)])
        Y.append([Fraction(int(k - 1 - c == i - 1)) for c in range(k)])
    return X, Y


def random_cork_spec(rng, p: int, m: int, k: int, mix: bool = True) -> CorkSpec:
    basis = random_graded_basis(rng, k)
    X, Y = graded_relations(basis)
    if mix:
        T = rand_invertible(rng, k - 1)
        X, Y = q_matmul(T, X), q_matmul(T, Y)
    A = [rand_qmat(rng, p, m) for _ in range(k)]
    B = [rand_qmat(rng, p, m) for _ in range(k - 1)] + [rand_nonzero_qmat(rng, p, m)]
    return CorkSpec(A, B, X, Y, basis)


def gen_cork(rng) -> FamilyInstance:
    p, m = _dims(rng)
    k = _degree(rng, p, m)
    spec = random_cork_spec(rng, p, m, k)
    P = spec.polynomial()
    return FamilyInstance("cork", P, build_cork(spec), build_cork_rev(spec), k, "local",
                          {"p": p, "m": m, "k": k})


def degenerate_cork_spec(rng) -> CorkSpec:
    """Valid CORK data with rank Y < k-1 (basis lambda, 1, 1)."""
    A = [rand_qmat(rng, 1, 1) for _ in range(3)]
    B = [rand_qmat(rng, 1, 1) for _ in range(2)] + [((Fraction(1),),)]
    X = [[0, 1, -1], [1, 0, 0]]
    Y = [[0, 0, 0], [0, 0, 1]]
    return CorkSpec(A, B, X, Y, [ONE, ONE, LAMBDA])


def gen_cork_degenerate(rng) -> FamilyInstance:
    spec = degenerate_cork_spec(rng)
    P = spec.polynomial()
    return FamilyInstance("cork", P, build_cork(spec), build_cork_rev(spec), 3, "local", {})


def _bk_dims(rng, p, m):
    while True:
        eps, eta = rng.randint(0, 4), rng.randint(0, 4)
        if 1 <= eps + eta <= 4:
            return eps, eta


def random_bk_spec(rng, extended: bool = False) -> BlockKroneckerSpec:
    p, m = _dims(rng)
    eps, eta = _bk_dims(rng, p, m)
    R, C = (eta + 1) * p, (eps + 1) * m
    M0 = rand_qmat(rng, R, C, 0.5)
    M1 = rand_qmat(rng, R, C, 0.5)
    Yx = rand_invertible(rng, eps * m) if extended else None
    Zx = rand_invertible(rng, eta * p) if extended else None
    return BlockKroneckerSpec(M0, M1, eps, eta, p, m, Yx, Zx)


def gen_blockkron(rng) -> FamilyInstance:
    spec = random_bk_spec(rng)
    sm, P = build_block_kronecker(spec)
    return FamilyInstance("blockkron", P, sm, build_block_kronecker_rev(spec), spec.degree_bound, "direct",
                          {"p": spec.p, "m": spec.m, "eps": spec.eps, "eta": spec.eta})


def gen_extblockkron(rng) -> FamilyInstance:
    spec = random_bk_spec(rng, extended=True)
    sm, P = build_extended_bk(spec)
    return FamilyInstance("extblockkron", P, sm, build_extended_bk_rev(spec), spec.degree_bound, "direct",
                          {"p": spec.p, "m": spec.m, "eps": spec.eps, "eta": spec.eta})


GENERATORS = {
    "frobenius": gen_frobenius,
    "comrade": gen_comrade,
    "cork": gen_cork,
    "blockkron": gen_blockkron,
    "extblockkron": gen_extblockkron,
}


# ---------------------------------------------------------------------------
# corruptions for negative controls
# ---------------------------------------------------------------------------
CORRUPTIONS = ("wrong_P", "non_unimodular_state", "lambda_scaled")


def corrupt_target(rng, P: PolyMatrix) -> PolyMatrix:
    """P plus a nonzero constant perturbation."""
    return P + PolyMatrix.const(rand_nonzero_qmat(rng, P.rows, P.cols), cols=P.cols)


def corrupt_state(sm: SystemMatrix) -> SystemMatrix:
    """Border S with a decoupled lambda so the state determinant gains a root at 0."""
    R, C = sm.S.shape
    S = PolyMatrix.block([[PolyMatrix([[LAMBDA]], rows=1, cols=1), PolyMatrix.zeros(1, C)],
                          [PolyMatrix.zeros(R, 1), sm.S]])
    return SystemMatrix(S, (0,) + tuple(i + 1 for i in sm.state_rows), (0,) + tuple(j + 1 for j in sm.state_cols))


def scale_transfer(sm: SystemMatrix) -> SystemMatrix:
    """Multiply the output rows by lambda, so the transfer becomes lambda * G."""
    out = set(sm.out_rows)
    grid = [[e * LAMBDA if i in out else e for e in row] for i, row in enumerate(sm.S.entries)]
    return SystemMatrix(PolyMatrix(grid, rows=sm.S.rows, cols=sm.S.cols), sm.state_rows, sm.state_cols, sm.layout)
