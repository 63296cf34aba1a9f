from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_polys, polys, small_q
from rosenlin.exactalg import (LAMBDA, ONE, RatFunc, UniPoly, as_rational, poly_gcd, poly_reverse, ratfunc_arith,
                               valuation_at)


def U(*c):
    return UniPoly(c)


def test_trailing_zeros_trimmed():
    assert U(1, 2, 0, 0) == U(1, 2)
    assert U().degree == -1 and U(0).is_zero()


def test_divmod_example():
    assert divmod(U(-1, 0, 1), U(-1, 1)) == (U(1, 1), U())


def test_gcd_is_monic():
    assert poly_gcd(U(-2, 0, 2), U(-4, 4)) == U(-1, 1)
    assert poly_gcd(U(0, 3), U()) == LAMBDA
    with pytest.raises(ValueError):
        poly_gcd(U(), U())


def test_reverse_example():
    assert poly_reverse(U(2, 1), 3) == U(0, 0, 1, 2)
    with pytest.raises(ValueError):
        poly_reverse(U(0, 0, 1), 1)


def test_ratfunc_sum_reduces():
    assert RatFunc(ONE, LAMBDA) + RatFunc(LAMBDA) == RatFunc(U(1, 0, 1), LAMBDA)
    f = RatFunc(U(-1, 0, 1), U(-1, 1))
    assert f.is_polynomial() and f.to_poly() == U(1, 1)


def test_valuation():
    assert valuation_at(RatFunc(U(1, 0, 0, 1), LAMBDA), 0) == -1
    assert valuation_at(U(1, 0, 0, 1), -1) == 1
    assert valuation_at(U(0, 0, 3), 0) == 2


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(ONE, U())


def test_float_coercion_is_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_arith_dispatch():
    a, b = RatFunc(ONE, LAMBDA), RatFunc(LAMBDA)
    assert ratfunc_arith(a, b, "mul") == RatFunc(ONE)
    assert ratfunc_arith(a, b, "inv") == RatFunc(LAMBDA)
    with pytest.raises(ValueError):
        ratfunc_arith(a, b, "div")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == U()


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    assert g.lc == 1


@given(polys)
def test_reverse_involution_when_nonvanishing_at_zero(p):
    if p.is_zero() or p(0) == 0:
        return
    assert poly_reverse(poly_reverse(p, p.degree), p.degree) == p


@given(polys, nonzero_polys, small_q)
def test_ratfunc_eval_homomorphism(a, b, x):
    f = RatFunc(a, b)
    if b(x) == 0:
        return
    assert f(x) == a(x) / b(x)
    assert (f * f)(x) == f(x) ** 2


@given(polys, small_q)
def test_eval_matches_horner(p, x):
    assert p(x) == sum(c * x ** i for i, c in enumerate(p.coeffs))
    assert isinstance(p(x), Fraction)
