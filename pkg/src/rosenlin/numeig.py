"""Floating-point layer: pencil eigenvalues, inverse iteration, eigenvector recovery.

Eigenvalues come from the QZ algorithm (``scipy.linalg.eig`` on the pair
``(-M0, M1)``) in homogeneous form, so infinite eigenvalues can be separated
and counted. Eigenvectors are then refined by inverse iteration on
``L(lam) = lam*M1 + M0`` and certified by the relative residual
``||L v|| / (||L|| ||v||)``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
import scipy.linalg as sla

from .polymat import PolyMatrix, RatMatrix, pm_det, pm_eval, q_nullspace, q_to_numpy
from .rosenbrock import SingularStateError, SystemMatrix, recover_left, recover_right

DEFAULT_TOL = 1e-8
DEFAULT_BUDGET = 100
# |beta| / |(alpha, beta)| below this marks an infinite eigenvalue
INFINITE_THRESHOLD = 1e-7
NEGLIGIBLE = 1e-8


def default_tol() -> float:
    """Default relative tolerance, overridable through ROSENLIN_TOL."""
    raw = os.environ.get("ROSENLIN_TOL")
    if not raw:
        return DEFAULT_TOL
    val = float(raw)
    if not val > 0:
        raise ValueError("ROSENLIN_TOL must be positive")
    return val


class ConvergenceError(RuntimeError):
    """The dense eigensolver itself failed."""


@dataclass
class EigResult:
    eigenvalues: list
    right_vectors: Optional[list]
    left_vectors: Optional[list]
    residuals: list
    converged: list
    infinite_count: int
    tol: float

    @property
    def ok(self) -> bool:
        return all(self.converged)

    def to_dict(self) -> dict:
        def cplx(z):
            return [float(z.real), float(z.imag)]

        return {
            "eigenvalues": [cplx(z) for z in self.eigenvalues],
            "residuals": [float(r) for r in self.residuals],
            "converged": list(map(bool, self.converged)),
            "infinite_count": self.infinite_count,
            "tol": self.tol,
            "right_vectors": None if self.right_vectors is None else [[cplx(z) for z in v] for v in self.right_vectors],
            "left_vectors": None if self.left_vectors is None else [[cplx(z) for z in v] for v in self.left_vectors],
        }


def _as_array(M) -> np.ndarray:
    if isinstance(M, np.ndarray):
        return M.astype(complex)
    if isinstance(M, tuple) and M and isinstance(M[0], tuple) and M[0] and isinstance(M[0][0], Fraction):
        return q_to_numpy(M, complex)
    return np.asarray(M, dtype=complex)


def pencil_matrices(S: PolyMatrix) -> tuple:
    """(M1, M0) as complex arrays for a degree-<=1 polynomial matrix."""
    if S.degree() > 1:
        raise ValueError(f"degree-{S.degree()} matrix is not a pencil")
    return q_to_numpy(S.coeff(1), complex), q_to_numpy(S.coeff(0), complex)


def _residual(L: np.ndarray, v: np.ndarray, coef_norm: Optional[float] = None) -> float:
    """||L v|| / (||L|| ||v||).

    When L itself is negligible next to ``coef_norm`` (for instance any 1x1
    matrix at its root) that ratio is meaningless, and the coefficient-weighted
    norm sum_i |lam|^i ||L_i|| is used as the denominator instead.
    """
    nl = np.linalg.norm(L, 2)
    nv = np.linalg.norm(v)
    if nv == 0:
        return np.inf
    if coef_norm is not None and nl <= NEGLIGIBLE * coef_norm:
        nl = coef_norm
    if nl == 0:
        return 0.0
    return float(np.linalg.norm(L @ v) / (nl * nv))


def _normalize(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k])


def _inverse_iteration(L: np.ndarray, tol: float, budget: int, coef_norm: Optional[float] = None) -> tuple:
    n = L.shape[0]
    scale = max(np.linalg.norm(L, 2), 1.0)
    # regularize so the LU of an (almost) singular matrix stays finite
    shift = scale * 1e-14
    lu = sla.lu_factor(L + shift * np.eye(n), check_finite=False)
    rng = np.random.default_rng(0)
    v = _normalize(rng.standard_normal(n) + 1j * rng.standard_normal(n))
    res = _residual(L, v, coef_norm)
    for _ in range(budget):
        w = sla.lu_solve(lu, v, check_finite=False)
        if not np.all(np.isfinite(w)) or np.linalg.norm(w) == 0:
            break
        v = _normalize(w)
        res = _residual(L, v, coef_norm)
        if res <= tol * 1e-3:
            break
    return v, res


class EigVec(tuple):
    """``(right, left, residual)`` with a ``converged`` flag attached."""

    def __new__(cls, right, left, residual, converged):
        obj = super().__new__(cls, (right, left, residual))
        obj.converged = converged
        return obj

    @property
    def right(self):
        return self[0]

    @property
    def left(self):
        return self[1]

    @property
    def residual(self):
        return self[2]


def eigvec_at(M1, M0, lam, tol: Optional[float] = None, budget: int = DEFAULT_BUDGET) -> EigVec:
    """Unit right and left null vectors of ``lam*M1 + M0`` by inverse iteration.

    The left vector y satisfies ``y^T L(lam) = 0`` (plain transpose).
    """
    tol = default_tol() if tol is None else tol
    M1, M0 = _as_array(M1), _as_array(M0)
    L = complex(lam) * M1 + M0
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError("eigvec_at needs a square pencil")
    cn = abs(complex(lam)) * np.linalg.norm(M1, 2) + np.linalg.norm(M0, 2)
    x, rx = _inverse_iteration(L, tol, budget, cn)
    y, ry = _inverse_iteration(L.T, tol, budget, cn)
    res = max(rx, ry)
    return EigVec(x, y, res, res <= tol)


def pencil_eig(M1, M0, tol: Optional[float] = None, vectors: bool = True,
               budget: int = DEFAULT_BUDGET) -> EigResult:
    """Finite eigenvalues of ``lam*M1 + M0`` with certified eigenvectors."""
    tol = default_tol() if tol is None else tol
    if not tol > 0:
        raise ValueError("tol must be positive")
    M1, M0 = _as_array(M1), _as_array(M0)
    if M1.shape != M0.shape or M1.ndim != 2 or M1.shape[0] != M1.shape[1]:
        raise ValueError(f"pencil_eig needs square coefficients of equal shape, got {M1.shape} and {M0.shape}")
    n = M1.shape[0]
    if n == 0:
        return EigResult([], [], [], [], [], 0, tol)
    s = max(np.linalg.norm(M1), np.linalg.norm(M0), 1e-300)
    try:
        ab = sla.eig(-M0 / s, M1 / s, right=False, homogeneous_eigvals=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceError(f"QZ iteration failed: {exc}") from exc
    alpha, beta = ab[0], ab[1]
    mag = np.hypot(np.abs(alpha), np.abs(beta))
    finite = np.abs(beta) > INFINITE_THRESHOLD * mag
    lams = [complex(a / b) for a, b, f in zip(alpha, beta, finite) if f]
    lams.sort(key=lambda z: (round(z.real, 10), z.imag))
    rights, lefts, res, conv = [], [], [], []
    for lam in lams:
        if vectors:
            ev = eigvec_at(M1, M0, lam, tol, budget)
            rights.append(ev.right)
            lefts.append(ev.left)
            res.append(ev.residual)
            conv.append(ev.converged)
        else:
            sv = np.linalg.svd(lam * M1 + M0, compute_uv=False)
            r = float(sv[-1] / sv[0]) if sv[0] else 0.0
            res.append(r)
            conv.append(r <= tol)
    return EigResult(lams, rights if vectors else None, lefts if vectors else None, res, conv,
                     int(n - len(lams)), tol)


def system_eig(sm: SystemMatrix, tol: Optional[float] = None, budget: int = DEFAULT_BUDGET) -> EigResult:
    M1, M0 = pencil_matrices(sm.S)
    return pencil_eig(M1, M0, tol, True, budget)


# ---------------------------------------------------------------------------
# recovery
# ---------------------------------------------------------------------------
@dataclass
class RecoveryReport:
    entries: list = field(default_factory=list)
    tol: float = DEFAULT_TOL

    @property
    def max_right(self) -> float:
        return max((e["right_residual"] for e in self.entries), default=0.0)

    @property
    def max_left(self) -> float:
        return max((e["left_residual"] for e in self.entries), default=0.0)

    @property
    def max_angle(self) -> float:
        return max((e["exact_angle"] for e in self.entries if e.get("exact_angle") is not None), default=0.0)

    @property
    def passed(self) -> bool:
        return max(self.max_right, self.max_left) <= self.tol and self.max_angle <= 1e-6

    def to_dict(self) -> dict:
        return {"passed": self.passed, "tol": self.tol, "max_right_residual": self.max_right,
                "max_left_residual": self.max_left, "max_exact_angle": self.max_angle, "entries": self.entries}


def _coef_norm(P: PolyMatrix, lam: complex) -> float:
    return float(sum(abs(lam) ** d * np.linalg.norm(q_to_numpy(c, complex), 2)
                     for d, c in enumerate(P.coeff_list())))


def _angle(u: np.ndarray, basis: np.ndarray) -> float:
    """Angle between the vector u and the column span of ``basis``."""
    q, _ = np.linalg.qr(basis)
    u = u / np.linalg.norm(u)
    r = float(np.linalg.norm(u - q @ (q.conj().T @ u)))
    return float(np.arcsin(min(1.0, r)))


def rational_guess(lam: complex, max_den: int = 1000, tol: float = 1e-9) -> Optional[Fraction]:
    if abs(lam.imag) > tol:
        return None
    r = Fraction(lam.real).limit_denominator(max_den)
    return r if abs(float(r) - lam.real) <= tol * max(1.0, abs(lam.real)) else None


def _numerator(P):
    if isinstance(P, RatMatrix):
        d = P.common_denominator()
        return PolyMatrix([[(e * d).to_poly() for e in row] for row in P.entries], rows=P.rows, cols=P.cols)
    return P


def recover_and_check(sm: SystemMatrix, eig: EigResult, P, tol: Optional[float] = None) -> RecoveryReport:
    """Extract eigenvectors of P from the pencil's and measure their residuals.

    The candidate right vector is the part of the pencil vector on the input
    columns, the left one the part on the output rows. At eigenvalues that are
    (numerically) small rationals, the exact recovery map applied to an exact
    kernel basis of P gives a reference subspace and the angle to it is
    reported. A rational P is replaced by P times its common denominator.
    """
    tol = default_tol() if tol is None else tol
    P = _numerator(P)
    if not P.is_square() or pm_det(P).is_zero():
        raise ValueError("recovery needs a square regular P")
    if eig.right_vectors is None:
        raise ValueError("eigenvectors were not computed")
    rep = RecoveryReport(tol=tol)
    ins, outs = list(sm.in_cols), list(sm.out_rows)
    for lam, v, w in zip(eig.eigenvalues, eig.right_vectors, eig.left_vectors):
        Pl = np.asarray(pm_eval(P, complex(lam)), dtype=complex)
        x, y = v[ins], w[outs]
        cn = _coef_norm(P, lam)
        entry = {"eigenvalue": [lam.real, lam.imag],
                 "right_residual": _residual(Pl, x, cn),
                 "left_residual": _residual(Pl.T, y, cn),
                 "exact_angle": None}
        r = rational_guess(lam)
        if r is not None:
            kernel = q_nullspace(pm_eval(P, r), P.cols)
            if kernel:
                try:
                    mapped = [np.array([complex(t) for t in recover_right(sm, r, vec)]) for vec in kernel]
                    entry["exact_angle"] = _angle(v, np.column_stack(mapped))
                    entry["exact_point"] = str(r)
                except SingularStateError:
                    pass
        rep.entries.append(entry)
    return rep


def recover_left_numeric(sm: SystemMatrix, lam, y):
    """Float version of the left recovery map, in the row order of S."""
    return np.asarray(recover_left(sm, complex(lam), y), dtype=complex)
