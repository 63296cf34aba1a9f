import pytest
from hypothesis import given

from conftest import L, pm, poly_matrices
from rosenlin.canon import equivalent_at_zero, gcd_minors_oracle, local_orders_at, smith_form, smith_mcmillan
from rosenlin.exactalg import ONE, RatFunc, UniPoly
from rosenlin.polymat import PolyMatrix, RatMatrix, is_unimodular


def U(*c):
    return UniPoly(c)


J = pm([[L, 1], [0, L]])


def test_jordan_block():
    sd = smith_form(J, with_transforms=True)
    assert sd.invariant_factors == (ONE, L * L)
    assert sd.left_transform @ J @ sd.right_transform == sd.diagonal(2, 2)
    assert is_unimodular(sd.left_transform) and is_unimodular(sd.right_transform)


def test_frobenius_pencil_factors():
    assert smith_form(pm([[L, -1], [-1, L]])).invariant_factors == (ONE, U(-1, 0, 1))


def test_zero_and_rectangular():
    assert smith_form(PolyMatrix.zeros(2, 3)).invariant_factors == ()
    assert smith_form(pm([[L, L * L, 0]])).invariant_factors == (L,)


def test_smcm_examples():
    d = smith_mcmillan(RatMatrix([[RatFunc(U(1, 0, 0, 1), L)]]))
    assert d.numerators == (U(1, 0, 0, 1),) and d.denominators == (L,)
    R = RatMatrix([[RatFunc(ONE, L), RatFunc(U())], [RatFunc(U()), RatFunc(L)]])
    assert smith_mcmillan(R).invariant_functions() == (RatFunc(ONE, L), RatFunc(L))


def test_smcm_divisibility_chain():
    R = RatMatrix([[RatFunc(ONE, L * (L - 1)), RatFunc(ONE, L)], [RatFunc(ONE, L), RatFunc(L - 1)]])
    d = smith_mcmillan(R)
    for i in range(d.normal_rank - 1):
        assert (d.numerators[i + 1] % d.numerators[i]).is_zero()
        assert (d.denominators[i] % d.denominators[i + 1]).is_zero()


def test_local_orders():
    assert local_orders_at(J, 0).orders == (0, 2)
    assert local_orders_at(J, 1).orders == (0, 0)
    lo = local_orders_at(RatMatrix([[RatFunc(U(1, 0, 0, 1), L)]]), 0)
    assert lo.pole_orders == (1,)


def test_equivalence_at_zero():
    assert equivalent_at_zero(pm([[L]]), pm([[U(0, 2, 1)]]))
    assert not equivalent_at_zero(pm([[L]]), pm([[L * L]]))


def test_oracle_jordan():
    assert gcd_minors_oracle(J).invariant_factors == (ONE, L * L)


@given(poly_matrices())
def test_smith_matches_oracle(M):
    sd = smith_form(M, with_transforms=True)
    assert sd.invariant_factors == gcd_minors_oracle(M).invariant_factors
    assert sd.left_transform @ M @ sd.right_transform == sd.diagonal(M.rows, M.cols)
    assert is_unimodular(sd.left_transform) and is_unimodular(sd.right_transform)
    for i in range(sd.rank - 1):
        assert (sd.invariant_factors[i + 1] % sd.invariant_factors[i]).is_zero()


@given(poly_matrices(max_dim=2, max_deg=2))
def test_smcm_of_polynomial_is_smith(M):
    d = smith_mcmillan(M)
    assert all(p == ONE for p in d.denominators)
    assert d.numerators == smith_form(M).invariant_factors
