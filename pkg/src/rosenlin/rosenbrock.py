"""Polynomial system matrices: transfer functions, minimality, recovery maps.

A :class:`SystemMatrix` is a polynomial matrix ``S`` together with the row and
column indices of its state block ``A``. The remaining rows are the output
rows and the remaining columns the input columns, so in canonical order::

    S ~ [[ A,  B],
         [-C,  D]]

and the transfer function is ``G = D + C A^{-1} B``. The block stored in
``S`` at the output/state position is ``-C``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .canon import local_orders_at, smith_form
from .exactalg import ONE, ZERO, UniPoly, as_rational
from .polymat import PolyMatrix, RatMatrix, pm_det, pm_eval, q_inv, q_matmul, rm_solve

LAYOUTS = ("state_top_left", "state_bottom_left", "state_bottom_right", "state_top_right")


class SingularStateError(ZeroDivisionError):
    """The state block is singular (identically, or at a given point)."""


@dataclass(frozen=True, eq=False)
class SystemMatrix:
    S: PolyMatrix
    state_rows: tuple
    state_cols: tuple
    layout: str = "custom"
    _state_det: UniPoly = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "state_rows", tuple(int(i) for i in self.state_rows))
        object.__setattr__(self, "state_cols", tuple(int(j) for j in self.state_cols))
        if len(self.state_rows) != len(self.state_cols):
            raise ValueError("state block must be square")
        if len(set(self.state_rows)) != len(self.state_rows) or len(set(self.state_cols)) != len(self.state_cols):
            raise ValueError("repeated state indices")
        if any(not 0 <= i < self.S.rows for i in self.state_rows) or any(
                not 0 <= j < self.S.cols for j in self.state_cols):
            raise ValueError("state indices out of range")
        d = pm_det(self.A)
        if d.is_zero():
            raise SingularStateError("state block has zero determinant")
        object.__setattr__(self, "_state_det", d)

    @classmethod
    def from_layout(cls, S: PolyMatrix, n: int, layout: str) -> "SystemMatrix":
        if layout not in LAYOUTS:
            raise ValueError(f"unknown layout {layout!r}")
        top = layout in ("state_top_left", "state_top_right")
        left = layout in ("state_top_left", "state_bottom_left")
        rows = range(n) if top else range(S.rows - n, S.rows)
        cols = range(n) if left else range(S.cols - n, S.cols)
        return cls(S, tuple(rows), tuple(cols), layout)

    # -- block access ---------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.state_rows)

    @property
    def out_rows(self) -> tuple:
        st = set(self.state_rows)
        return tuple(i for i in range(self.S.rows) if i not in st)

    @property
    def in_cols(self) -> tuple:
        st = set(self.state_cols)
        return tuple(j for j in range(self.S.cols) if j not in st)

    @property
    def p(self) -> int:
        return self.S.rows - self.n

    @property
    def m(self) -> int:
        return self.S.cols - self.n

    @property
    def A(self) -> PolyMatrix:
        return self.S.sub(self.state_rows, self.state_cols)

    @property
    def B(self) -> PolyMatrix:
        return self.S.sub(self.state_rows, self.in_cols)

    @property
    def minus_C(self) -> PolyMatrix:
        return self.S.sub(self.out_rows, self.state_cols)

    @property
    def C(self) -> PolyMatrix:
        return -self.minus_C

    @property
    def D(self) -> PolyMatrix:
        return self.S.sub(self.out_rows, self.in_cols)

    @property
    def state_det(self) -> UniPoly:
        return self._state_det

    def canonical(self) -> PolyMatrix:
        """``S`` permuted to ``[[A, B], [-C, D]]``."""
        return self.S.sub(self.state_rows + self.out_rows, self.state_cols + self.in_cols)

    def is_pencil(self) -> bool:
        return self.S.degree() <= 1

    def __eq__(self, other):
        if not isinstance(other, SystemMatrix):
            return NotImplemented
        return (self.S, self.state_rows, self.state_cols, self.layout) == (
            other.S, other.state_rows, other.state_cols, other.layout)

    def __hash__(self):
        return hash((self.S, self.state_rows, self.state_cols))

    def __repr__(self):
        return f"SystemMatrix({self.S.rows}x{self.S.cols}, n={self.n}, layout={self.layout})"


@dataclass(frozen=True)
class TransferResult:
    G: RatMatrix
    is_polynomial: bool

    def as_poly(self) -> PolyMatrix:
        return self.G.to_polymatrix()


def transfer_function(sm: SystemMatrix) -> TransferResult:
    """Schur complement ``D + C A^{-1} B`` of the state block."""
    D = sm.D.to_ratmatrix()
    if sm.n == 0:
        return TransferResult(D, D.is_polynomial())
    X = rm_solve(sm.A, sm.B)
    G = D - (sm.minus_C.to_ratmatrix() @ X)
    return TransferResult(G, G.is_polynomial())


def state_inverse(sm: SystemMatrix) -> PolyMatrix:
    """``A^{-1}`` as a polynomial matrix; requires a unimodular state block."""
    if sm.state_det.degree != 0:
        raise ValueError(f"state block is not unimodular (det = {sm.state_det})")
    return rm_solve(sm.A, PolyMatrix.identity(sm.n)).to_polymatrix()


def _perm_rows(perm: Sequence[int]) -> PolyMatrix:
    # P with (P @ X)[i] = X[perm[i]]
    n = len(perm)
    grid = [[ZERO] * n for _ in range(n)]
    for i, src in enumerate(perm):
        grid[i][src] = ONE
    return PolyMatrix(grid, rows=n, cols=n)


def unimodular_witnesses(sm: SystemMatrix) -> tuple:
    """Transforms ``(U, V)`` with ``U @ S @ V == diag(G, I_n)``.

    They are the two explicit unimodular factors of the classical
    equivalence, conjugated by the permutation that brings ``S`` into
    canonical block order.
    """
    Ainv = state_inverse(sm)
    n, p, m = sm.n, sm.p, sm.m
    CAinv = sm.C @ Ainv
    AinvB = Ainv @ sm.B
    Uc = PolyMatrix.block([[CAinv, PolyMatrix.identity(p)], [Ainv, PolyMatrix.zeros(n, p)]])
    Vc = PolyMatrix.block([[-AinvB, PolyMatrix.identity(n)], [PolyMatrix.identity(m), PolyMatrix.zeros(m, n)]])
    Pr = _perm_rows(sm.state_rows + sm.out_rows)
    Pc = _perm_rows(sm.state_cols + sm.in_cols).T
    return Uc @ Pr, Pc @ Vc


def block_diag(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return PolyMatrix.block([[a, PolyMatrix.zeros(a.rows, b.cols)], [PolyMatrix.zeros(b.rows, a.cols), b]])


def is_minimal(sm: SystemMatrix) -> bool:
    """Full rank of [A B] and [A; -C] at every point of the closure."""
    n = sm.n
    if n == 0:
        return True
    for M in (PolyMatrix.hstack([sm.A, sm.B]), PolyMatrix.vstack([sm.A, sm.minus_C])):
        sd = smith_form(M)
        if sd.rank != n or not sd.is_trivial():
            return False
    return True


@dataclass
class RosenbrockReport:
    passed: bool
    points: list

    def to_dict(self) -> dict:
        return {"passed": self.passed, "points": self.points}


def check_rosenbrock_theorem(sm: SystemMatrix, probe_points: Sequence) -> RosenbrockReport:
    """Compare elementary divisors of A and S with poles and zeros of G."""
    if not is_minimal(sm):
        raise ValueError("system matrix is not minimal; the pole/zero recovery theorem does not apply")
    G = transfer_function(sm).G
    rows = []
    ok_all = True
    for pt in probe_points:
        pt = as_rational(pt)
        g = local_orders_at(G, pt)
        a = local_orders_at(sm.A, pt) if sm.n else None
        s = local_orders_at(sm.S, pt)
        state_ed = tuple(sorted(a.zero_orders)) if a else ()
        system_ed = tuple(sorted(s.zero_orders))
        poles = g.pole_orders
        zeros = tuple(sorted(g.zero_orders))
        ok = state_ed == poles and system_ed == zeros
        ok_all &= ok
        rows.append({
            "point": str(pt),
            "state_elementary_divisors": list(state_ed),
            "pole_orders": list(poles),
            "system_elementary_divisors": list(system_ed),
            "zero_orders": list(zeros),
            "ok": ok,
        })
    return RosenbrockReport(ok_all, rows)


def _is_exact(point, vec) -> bool:
    return isinstance(point, (int, Fraction)) and all(isinstance(v, (int, Fraction)) for v in vec)


def _place(sm_idx_state, sm_idx_other, total, state_part, other_part, order, exact):
    if order == "canonical":
        return list(state_part) + list(other_part) if exact else np.concatenate([state_part, other_part])
    if order != "native":
        raise ValueError(f"unknown order {order!r}")
    out = [Fraction(0)] * total if exact else np.zeros(total, dtype=complex)
    for i, v in zip(sm_idx_state, state_part):
        out[i] = v
    for i, v in zip(sm_idx_other, other_part):
        out[i] = v
    return out


def recover_right(sm: SystemMatrix, point, x, order: str = "native"):
    """Map x to ``[-A(pt)^{-1} B(pt) x; x]`` (kernel of G -> kernel of S).

    ``order="native"`` lays the result out in the column order of ``S`` so that
    ``S(pt) @ v = 0``; ``"canonical"`` returns the state part first.
    """
    if len(x) != sm.m:
        raise ValueError(f"expected a vector of length {sm.m}")
    exact = _is_exact(point, x)
    if exact:
        pt = Fraction(point)
        A, B = pm_eval(sm.A, pt), pm_eval(sm.B, pt)
        try:
            Ainv = q_inv(A)
        except ZeroDivisionError:
            raise SingularStateError(f"state matrix singular at {pt}") from None
        AinvB = q_matmul(Ainv, B)
        xs = [as_rational(v) for v in x]
        state = [-sum((AinvB[i][j] * xs[j] for j in range(sm.m)), Fraction(0)) for i in range(sm.n)]
        return _place(sm.state_cols, sm.in_cols, sm.S.cols, state, xs, order, True)
    A = np.asarray(pm_eval(sm.A, complex(point)))
    B = np.asarray(pm_eval(sm.B, complex(point)))
    xv = np.asarray(x, dtype=complex)
    if sm.n and np.linalg.cond(A) > 1 / np.finfo(float).eps:
        raise SingularStateError(f"state matrix numerically singular at {point}")
    state = -np.linalg.solve(A, B @ xv) if sm.n else np.zeros(0, dtype=complex)
    return _place(sm.state_cols, sm.in_cols, sm.S.cols, state, xv, order, False)


def recover_left(sm: SystemMatrix, point, y, order: str = "native"):
    """Map y^T to ``y^T [C(pt) A(pt)^{-1}, I]`` (left kernel of G -> of S)."""
    if len(y) != sm.p:
        raise ValueError(f"expected a vector of length {sm.p}")
    exact = _is_exact(point, y)
    if exact:
        pt = Fraction(point)
        A, C = pm_eval(sm.A, pt), pm_eval(sm.C, pt)
        try:
            Ainv = q_inv(A)
        except ZeroDivisionError:
            raise SingularStateError(f"state matrix singular at {pt}") from None
        CAinv = q_matmul(C, Ainv)
        ys = [as_rational(v) for v in y]
        state = [sum((ys[i] * CAinv[i][j] for i in range(sm.p)), Fraction(0)) for j in range(sm.n)]
        return _place(sm.state_rows, sm.out_rows, sm.S.rows, state, ys, order, True)
    A = np.asarray(pm_eval(sm.A, complex(point)))
    C = np.asarray(pm_eval(sm.C, complex(point)))
    yv = np.asarray(y, dtype=complex)
    if sm.n and np.linalg.cond(A) > 1 / np.finfo(float).eps:
        raise SingularStateError(f"state matrix numerically singular at {point}")
    state = np.linalg.solve(A.T, C.T @ yv) if sm.n else np.zeros(0, dtype=complex)
    return _place(sm.state_rows, sm.out_rows, sm.S.rows, state, yv, order, False)


def frobenius_recover_right(point, x, k: int):
    """``[point^(k-1) x; ...; point x; x]`` for the companion form."""
    if _is_exact(point, x):
        pt = Fraction(point)
        return [pt ** (k - 1 - i) * as_rational(v) for i in range(k) for v in x]
    xv = np.asarray(x, dtype=complex)
    return np.concatenate([point ** (k - 1 - i) * xv for i in range(k)])
