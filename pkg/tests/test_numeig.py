import math
import random

import numpy as np
import pytest

from conftest import scalar
from rosenlin.constructors import RecurrenceBasis, assemble_rational, build_comrade, build_frobenius, Realization
from rosenlin.exactalg import LAMBDA, UniPoly
from rosenlin.families import random_square_regular
from rosenlin.numeig import (default_tol, eigvec_at, pencil_eig, pencil_matrices, recover_and_check, system_eig)


def test_two_roots():
    ev = sorted(z.real for z in system_eig(build_frobenius(scalar(UniPoly((-1, 0, 1))))).eigenvalues)
    assert np.allclose(ev, [-1, 1], atol=1e-10)


def test_null_vector():
    r, _, res = eigvec_at([[1, 0], [0, 1]], [[0, -1], [-1, 0]], 1.0)
    assert np.allclose(r, np.array([1, 1]) / math.sqrt(2), atol=1e-10)
    assert res <= 1e-10


def test_infinite_eigenvalues_dropped():
    # lam*diag(1,0) + I has one finite eigenvalue -1 and one at infinity
    res = pencil_eig([[1, 0], [0, 0]], [[1, 0], [0, 1]])
    assert len(res.eigenvalues) == 1 and abs(res.eigenvalues[0] + 1) < 1e-12
    assert res.infinite_count == 1


def test_colleague_t2():
    sm = build_comrade([[[0]], [[0]], [[1]]], RecurrenceBasis.chebyshev(3))
    ev = sorted(z.real for z in system_eig(sm).eigenvalues)
    c = math.cos(math.pi / 4)
    assert abs(ev[0] + c) <= 1e-10 and abs(ev[1] - c) <= 1e-10


def test_rational_recovery():
    P = scalar(LAMBDA * LAMBDA)
    L = assemble_rational(Realization([[0]], [[1]], [[1]]), build_frobenius(P))
    e = system_eig(L)
    assert all(abs(z ** 3 + 1) < 1e-10 for z in e.eigenvalues)
    from rosenlin.rosenbrock import transfer_function
    rep = recover_and_check(L, e, transfer_function(L).G)
    assert rep.passed and rep.max_right <= 1e-8


@pytest.mark.parametrize("seed", range(4))
def test_random_recovery(seed):
    P = random_square_regular(random.Random(seed), 3, 3)
    sm = build_frobenius(P)
    rep = recover_and_check(sm, system_eig(sm), P)
    assert rep.max_right <= 1e-8 and rep.max_left <= 1e-8


def test_exact_angle_at_rational_eigenvalues():
    P = scalar(UniPoly.from_roots([1, 2, 3]))
    sm = build_frobenius(P)
    rep = recover_and_check(sm, system_eig(sm), P)
    assert rep.max_angle <= 1e-6 and all(e.get("exact_angle") is not None for e in rep.entries)


def test_tol_env(monkeypatch):
    monkeypatch.setenv("ROSENLIN_TOL", "1e-6")
    assert default_tol() == 1e-6
    monkeypatch.setenv("ROSENLIN_TOL", "-1")
    with pytest.raises(ValueError):
        default_tol()


def test_bad_shapes():
    with pytest.raises(ValueError):
        pencil_eig([[1, 0]], [[1, 0]])


def test_pencil_matrices_rejects_quadratic():
    from rosenlin.polymat import PolyMatrix
    with pytest.raises(ValueError):
        pencil_matrices(PolyMatrix([[LAMBDA * LAMBDA]]))
