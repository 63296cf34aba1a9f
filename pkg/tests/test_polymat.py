import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import L, pm, poly_matrices, scalar, small_q
from rosenlin.exactalg import ONE, UniPoly
from rosenlin.polymat import (Pencil, PolyMatrix, RatMatrix, build_Lambda, build_Lk, det_leibniz, is_unimodular,
                              pm_det, pm_eval, pm_reversal, q_det, q_inv, q_matmul, q_nullspace, q_rank, rank_at,
                              rm_solve, rm_solve_field)
from rosenlin.constructors import build_frobenius

FROB = pm([[L, -1], [-1, L]])


def U(*c):
    return UniPoly(c)


def test_eval_example():
    assert pm_eval(FROB, 1) == ((1, -1), (-1, 1))


def test_det_examples():
    assert pm_det(FROB) == U(-1, 0, 1)
    assert pm_det(pm([[L, 0, 1], [0, -1, L], [-1, L, 0]])) == U(-1, 0, 0, -1)


def test_det_requires_square():
    with pytest.raises(ValueError):
        pm_det(pm([[L, 1]]))


def test_empty_det_is_one():
    assert pm_det(PolyMatrix.zeros(0, 0)) == ONE


def test_rank_at():
    assert rank_at(FROB, 1) == 1
    assert rank_at(FROB, 2) == 2


def test_frobenius_state_unimodular_k3_m2():
    coeffs = [[[1, 2], [3, 4]], [[0, 1], [1, 0]], [[5, 0], [0, 6]], [[1, 0], [0, 1]]]
    sm = build_frobenius(PolyMatrix.from_coeffs(coeffs))
    assert is_unimodular(sm.A) and pm_det(sm.A).degree == 0
    assert not is_unimodular(FROB)


def test_lambda_and_lk():
    assert build_Lambda(2, 1) == pm([[L], [1]])
    assert build_Lambda(3, 1) == pm([[L * L], [L], [1]])
    assert build_Lk(1, 1) == pm([[-1, L]])
    assert build_Lk(2, 1) == pm([[-1, L, 0], [0, -1, L]])
    assert build_Lk(3, 2) @ build_Lambda(4, 2) == PolyMatrix.zeros(6, 2)


def test_frobenius_resolvent_block():
    sm = build_frobenius(scalar(U(1, 2, 3, 1)))
    assert rm_solve(sm.A, sm.B) == pm([[-L * L], [-L]]).to_ratmatrix()


def test_rm_solve_singular():
    with pytest.raises(ZeroDivisionError):
        rm_solve(pm([[L, L], [1, 1]]), pm([[1], [0]]))


def test_reversal():
    assert pm_reversal(FROB, 1) == pm([[1, -L], [-L, 1]])
    with pytest.raises(ValueError):
        pm_reversal(FROB, 0)


def test_pencil_roundtrip():
    P = Pencil.from_polymatrix(FROB)
    assert P.as_poly() == FROB
    assert P.rev().as_poly() == pm_reversal(FROB, 1)
    with pytest.raises(ValueError):
        Pencil.from_polymatrix(pm([[L * L]]))


def test_ratmatrix_common_denominator():
    from rosenlin.exactalg import RatFunc
    R = RatMatrix([[RatFunc(ONE, L), RatFunc(ONE, L - 1)]])
    assert R.common_denominator() == L * (L - 1)
    assert not R.is_polynomial()


@given(poly_matrices(square=True), small_q)
def test_det_commutes_with_eval(M, x):
    assert pm_det(M)(x) == q_det(pm_eval(M, x))


@given(poly_matrices(square=True))
def test_bareiss_matches_leibniz(M):
    assert pm_det(M) == det_leibniz(M.entries)


@given(poly_matrices(), poly_matrices(), small_q)
def test_product_eval(A, B, x):
    if A.cols != B.rows:
        return
    assert pm_eval(A @ B, x) == tuple(map(tuple, q_matmul(pm_eval(A, x), pm_eval(B, x))))


@given(poly_matrices(max_dim=3, max_deg=2, square=True), st.integers(1, 2), st.randoms(use_true_random=False))
def test_rm_solve_agrees_with_field_version(A, c, r):
    if pm_det(A).is_zero():
        return
    B = PolyMatrix([[UniPoly([r.randint(-3, 3) for _ in range(2)]) for _ in range(c)] for _ in range(A.rows)],
                   rows=A.rows, cols=c)
    X = rm_solve(A, B)
    assert X == rm_solve_field(A, B)
    assert A.to_ratmatrix() @ X == B.to_ratmatrix()


def test_constant_helpers():
    a = [[Fraction(2), Fraction(1)], [Fraction(4), Fraction(2)]]
    assert q_rank(a) == 1 and q_det(a) == 0
    ns = q_nullspace(a)
    assert len(ns) == 1 and all(x == 0 for row in q_matmul(a, [[v] for v in ns[0]]) for x in row)
    b = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert [list(r) for r in q_matmul(b, q_inv(b))] == [[1, 0], [0, 1]]


def test_random_nullspaces():
    rng = random.Random(3)
    for _ in range(50):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        a = [[Fraction(rng.randint(-2, 2)) for _ in range(c)] for _ in range(r)]
        ns = q_nullspace(a, cols=c)
        assert len(ns) == c - q_rank(a)
        for v in ns:
            assert all(sum(a[i][j] * v[j] for j in range(c)) == 0 for i in range(r))
