import random
from fractions import Fraction

import pytest

from conftest import L, pm, scalar
from rosenlin.constructors import (BlockKroneckerSpec, CorkSpec, PreconditionError, Realization, RecurrenceBasis,
                                   assemble_rational, bk_spec_for, build_block_kronecker, build_block_kronecker_rev,
                                   build_comrade, build_comrade_rev, build_cork, build_cork_rev, build_extended_bk,
                                   build_extended_bk_rev, build_frobenius, build_frobenius_rev, comrade_polynomial,
                                   comrade_rev_scale, cork_rev_scale, expand_in_basis, monomial_cork_spec,
                                   pencil_system, realization_minimal, recurrence_cork_spec, split_poly_sp)
from rosenlin.exactalg import ONE, RatFunc, UniPoly
from rosenlin.families import degenerate_cork_spec, random_poly_matrix
from rosenlin.polymat import PolyMatrix, RatMatrix, is_unimodular, pm_det, pm_reversal
from rosenlin.rosenbrock import transfer_function


def U(*c):
    return UniPoly(c)


def G(sm):
    return transfer_function(sm).G


def lin_of(sm, P):
    return G(sm) == P.to_ratmatrix()


def test_frobenius_basic():
    P = scalar(U(-1, 0, 1))
    sm = build_frobenius(P)
    assert sm.S == pm([[L, -1], [-1, L]]) and lin_of(sm, P)
    assert lin_of(build_frobenius_rev(P), scalar(U(1, 0, -1)))


def test_frobenius_rejects_degree_one():
    with pytest.raises(PreconditionError) as exc:
        build_frobenius(scalar(U(1, 1)))
    assert exc.value.hypothesis == "degree k > 1"


def test_frobenius_rectangular():
    P = random_poly_matrix(random.Random(1), 2, 3, 4)
    sm = build_frobenius(P)
    assert is_unimodular(sm.A) and lin_of(sm, P)
    assert lin_of(build_frobenius_rev(P), pm_reversal(P, P.degree()))


def test_comrade_t2():
    cheb = RecurrenceBasis.chebyshev(3)
    coeffs = [[[0]], [[0]], [[1]]]
    assert build_comrade(coeffs, cheb).S == pm([[2 * L, -1], [-1, L]])
    assert comrade_rev_scale(cheb, 2) == ONE
    assert lin_of(build_comrade_rev(coeffs, cheb), scalar(U(2, 0, -1)))


def test_comrade_alpha_zero():
    with pytest.raises(PreconditionError):
        RecurrenceBasis([1, 0], [0, 0], [0, 1])


def test_expand_in_basis_roundtrip():
    cheb = RecurrenceBasis.chebyshev(5)
    P = scalar(UniPoly.from_roots([1, 2, 3, 4]))
    coeffs = expand_in_basis(P, cheb)
    assert comrade_polynomial(coeffs, cheb) == P
    assert lin_of(build_comrade(coeffs, cheb), P)


def test_cork_monomial_and_reverse():
    P = scalar(U(0, 2, 0, 1))
    spec = monomial_cork_spec(P)
    assert spec.relation() == pm([[-1, L, 0], [0, -1, L]])
    assert lin_of(build_cork(spec), P)
    assert cork_rev_scale(spec) == ONE
    assert lin_of(build_cork_rev(spec), pm_reversal(P, 3))


def test_cork_chebyshev_reverse_scale():
    spec = recurrence_cork_spec([[[1]], [[-2]], [[3]], [[5]]], RecurrenceBasis.chebyshev(4))
    q = cork_rev_scale(spec)
    assert q == U(2, 0, -1)
    assert G(build_cork_rev(spec)).scale(RatFunc(q)) == pm_reversal(spec.polynomial(), 3).to_ratmatrix()


def test_cork_bad_relation():
    z = [[0]]
    spec = CorkSpec([z, z, [[1]]], [z, z, z], [[-1, 1, 0], [0, -1, 1]], [[0, 1, 0], [0, 0, 1]],
                    (ONE, L, U(0, 0, 1)))
    with pytest.raises(PreconditionError):
        build_cork(spec)


def test_cork_degenerate_reverse_rejected():
    spec = degenerate_cork_spec(random.Random(0))
    with pytest.raises(PreconditionError) as exc:
        build_cork_rev(spec)
    assert exc.value.hypothesis in ("rank Y = k-1", "deg p_(k-1) = k-1")


def test_cork_p0_must_be_one():
    z = [[0]]
    with pytest.raises(PreconditionError):
        CorkSpec([z, z], [z, z], [[1, 0]], [[0, 1]], (L, U(2)))


def test_block_kronecker_lambda3():
    spec = BlockKroneckerSpec([[0, 0], [0, 0]], [[1, 0], [0, 0]], 1, 1, 1, 1)
    sm, P = build_block_kronecker(spec)
    assert P == scalar(U(0, 0, 0, 1))
    assert sm.A == pm([[L, -1], [-1, 0]]) and pm_det(sm.A) == U(-1)
    assert lin_of(sm, P)
    assert lin_of(build_block_kronecker_rev(spec), scalar(ONE))


@pytest.mark.parametrize("eps,eta", [(1, 1), (2, 0), (0, 2), (1, 2), (3, 1)])
def test_bk_spec_for_reproduces_target(eps, eta):
    P = random_poly_matrix(random.Random(eps * 10 + eta), 2, 2, eps + eta + 1)
    spec = bk_spec_for(P, eps, eta)
    sm, P2 = build_block_kronecker(spec)
    assert P2 == P and lin_of(sm, P)
    assert lin_of(build_block_kronecker_rev(spec), pm_reversal(P, eps + eta + 1))


def test_block_kronecker_bad_dims():
    with pytest.raises(PreconditionError):
        build_block_kronecker(BlockKroneckerSpec([[0]], [[1]], 0, 0, 1, 1))


def test_extended_bk():
    spec = BlockKroneckerSpec([[0, 0], [0, 0]], [[1, 0], [0, 0]], 1, 1, 1, 1, [[2]], [[3]])
    sm, P = build_extended_bk(spec)
    assert P == scalar(U(0, 0, 0, 1)) and lin_of(sm, P)
    assert lin_of(build_extended_bk_rev(spec), scalar(ONE))


def test_extended_bk_singular():
    spec = BlockKroneckerSpec([[0, 0], [0, 0]], [[1, 0], [0, 0]], 1, 1, 1, 1, [[0]], [[3]])
    with pytest.raises(PreconditionError) as exc:
        build_extended_bk(spec)
    assert exc.value.hypothesis == "Y and Z invertible"


def test_rational_assembly_cubic_over_lambda():
    R = RatMatrix([[RatFunc(U(1, 0, 0, 1), L)]])
    P, Rsp = split_poly_sp(R)
    assert P == scalar(L * L) and Rsp == RatMatrix([[RatFunc(ONE, L)]])
    real = Realization([[0]], [[1]], [[1]])
    assert realization_minimal(real) and real.transfer() == Rsp
    Lsm = assemble_rational(real, build_frobenius(P))
    assert Lsm.S == pm([[L, 0, 1], [0, -1, L], [-1, L, 0]])
    assert G(Lsm) == R and pm_det(Lsm.S) == U(-1, 0, 0, -1)


def test_rational_assembly_two_poles():
    real = Realization([[1, 0], [0, 2]], [[1], [1]], [[1, 1]])
    Lsm = assemble_rational(real, pencil_system(scalar(L)))
    want = RatFunc(L) + RatFunc(ONE, U(-1, 1)) + RatFunc(ONE, U(-2, 1))
    assert G(Lsm) == RatMatrix([[want]])


def test_nonminimal_realization():
    assert not realization_minimal(Realization([[1, 0], [0, 1]], [[1], [1]], [[1, 1]]))


def test_assembly_needs_unimodular_state():
    from rosenlin.rosenbrock import SystemMatrix
    psm = SystemMatrix.from_layout(pm([[L, 1], [-1, 0]]), 1, "state_top_left")
    with pytest.raises(PreconditionError):
        assemble_rational(Realization([[0]], [[1]], [[1]]), psm)
