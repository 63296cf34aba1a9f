from fractions import Fraction

import pytest

from conftest import L, pm, scalar
from rosenlin.constructors import assemble_rational, build_frobenius, Realization
from rosenlin.exactalg import ONE, RatFunc, UniPoly
from rosenlin.polymat import PolyMatrix, RatMatrix, is_unimodular, pm_eval
from rosenlin.rosenbrock import (SingularStateError, SystemMatrix, block_diag, check_rosenbrock_theorem, is_minimal,
                                 recover_left, recover_right, transfer_function, unimodular_witnesses)

P_SQ = scalar(UniPoly((-1, 0, 1)))
POLE = pm([[L, 1], [-1, 0]])


def cubic_assembly():
    return assemble_rational(Realization([[0]], [[1]], [[1]]), build_frobenius(scalar(L * L)))


def test_blocks_of_frobenius():
    sm = SystemMatrix.from_layout(pm([[L, -1], [-1, L]]), 1, "state_bottom_left")
    assert (sm.A, sm.B, sm.minus_C, sm.D) == (pm([[-1]]), pm([[L]]), pm([[L]]), pm([[-1]]))
    assert transfer_function(sm).G == P_SQ.to_ratmatrix()
    assert sm.canonical() == pm([[-1, L], [L, -1]])


def test_pole_transfer():
    tr = transfer_function(SystemMatrix.from_layout(POLE, 1, "state_top_left"))
    assert tr.G == RatMatrix([[RatFunc(ONE, L)]]) and not tr.is_polynomial


def test_singular_state_rejected():
    with pytest.raises(SingularStateError):
        SystemMatrix.from_layout(pm([[0, 1], [1, L]]), 1, "state_top_left")


def test_bad_indices():
    with pytest.raises(ValueError):
        SystemMatrix(POLE, (0, 0), (0, 1))
    with pytest.raises(ValueError):
        SystemMatrix(POLE, (5,), (0,))
    with pytest.raises(ValueError):
        SystemMatrix.from_layout(POLE, 1, "diagonal")


def test_noncontiguous_state():
    S = pm([[L, 2, 1], [3, 1, 0], [-1, 4, 1]])
    sm = SystemMatrix(S, (0, 2), (0, 2))
    assert sm.out_rows == (1,) and sm.in_cols == (1,)
    G = transfer_function(sm).G
    # Schur complement computed directly
    from rosenlin.polymat import rm_solve
    want = sm.D.to_ratmatrix() - sm.minus_C.to_ratmatrix() @ rm_solve(sm.A, sm.B)
    assert G == want


def test_witnesses():
    for sm in (build_frobenius(P_SQ), build_frobenius(scalar(UniPoly((1, 2, 3, 4))))):
        U, V = unimodular_witnesses(sm)
        G = transfer_function(sm).G.to_polymatrix()
        assert is_unimodular(U) and is_unimodular(V)
        assert U @ sm.S @ V == block_diag(G, PolyMatrix.identity(sm.n))


def test_minimality():
    assert is_minimal(SystemMatrix.from_layout(POLE, 1, "state_top_left"))
    assert not is_minimal(SystemMatrix.from_layout(pm([[L, L], [-L, 0]]), 1, "state_top_left"))
    assert is_minimal(build_frobenius(P_SQ))


def test_theorem_battery():
    rep = check_rosenbrock_theorem(SystemMatrix.from_layout(POLE, 1, "state_top_left"), [0, 1])
    assert rep.passed and rep.points[0]["pole_orders"] == [1] and rep.points[1]["pole_orders"] == []
    rep = check_rosenbrock_theorem(cubic_assembly(), [0, -1, 2])
    assert rep.passed
    assert rep.points[0]["pole_orders"] == [1] and rep.points[1]["zero_orders"] == [1]


def test_theorem_needs_minimal():
    with pytest.raises(ValueError):
        check_rosenbrock_theorem(SystemMatrix.from_layout(pm([[L, L], [-L, 0]]), 1, "state_top_left"), [0])


def test_recovery_exact():
    sm = build_frobenius(P_SQ)
    assert recover_right(sm, 1, [1]) == [1, 1]
    assert recover_right(sm, -1, [1]) == [-1, 1]
    assert recover_left(sm, 1, [1]) == [1, 1]
    assert recover_left(sm, -1, [1], order="canonical") == [-1, 1]
    assert recover_left(sm, -1, [1]) == [1, -1]


def test_recovery_is_null_vector():
    P = scalar(UniPoly.from_roots([1, 2, 3]))
    sm = build_frobenius(P)
    for r in (1, 2, 3):
        v = recover_right(sm, r, [1])
        M = pm_eval(sm.S, Fraction(r))
        assert all(sum(M[i][j] * v[j] for j in range(len(v))) == 0 for i in range(len(M)))
