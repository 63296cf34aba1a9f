"""Linearization families and their system-matrix partitions.

Every forward constructor returns a :class:`SystemMatrix` whose state block is
unimodular and whose transfer function is the linearized polynomial. Reversed
constructors partition ``rev_1`` of the same pencil.

Block orders follow the usual printed layouts: coefficient blocks run from
the highest index on the left to the lowest on the right, and CORK relation
columns are ordered like ``[p_(k-1), ..., p_1, p_0]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .canon import smith_form
from .exactalg import LAMBDA, ONE, ZERO, RatFunc, UniPoly, as_rational, poly_reverse
from .polymat import (Pencil, PolyMatrix, QMatrix, RatMatrix, _lambda_block, _lk_block, pm_reversal, q_det, q_eye,
                      q_rank, q_shape, q_zeros, qmat, rank_at, rm_solve)
from .rosenbrock import SystemMatrix, transfer_function


class PreconditionError(ValueError):
    """A hypothesis required by a construction does not hold."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis violated: {hypothesis}" + (f" ({detail})" if detail else ""))


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------
def _const(a: QMatrix, rows: int, cols: int) -> PolyMatrix:
    if rows == 0 or cols == 0:
        return PolyMatrix.zeros(rows, cols)
    return PolyMatrix.const(a)


def _lin(m0: QMatrix, m1: QMatrix, rows: int, cols: int) -> PolyMatrix:
    if rows == 0 or cols == 0:
        return PolyMatrix.zeros(rows, cols)
    return PolyMatrix.pencil(m0, m1, cols=cols)


def _scalar_lin(c0, c1) -> UniPoly:
    return UniPoly((c0, c1))


def rev1(sm_S: PolyMatrix) -> PolyMatrix:
    return pm_reversal(sm_S, 1)


def _coeffs_of(P: PolyMatrix) -> list:
    return P.coeff_list()


# ---------------------------------------------------------------------------
# Frobenius companion form
# ---------------------------------------------------------------------------
def frobenius_pencil(P: PolyMatrix) -> PolyMatrix:
    k = P.degree()
    if k < 2:
        raise PreconditionError("degree k > 1", f"degree is {k}")
    p, m = P.shape
    Pk = _coeffs_of(P)
    top = [_lin(Pk[k - 1], Pk[k], p, m)] + [_const(Pk[i], p, m) for i in range(k - 2, -1, -1)]
    return PolyMatrix.vstack([PolyMatrix.hstack(top), _lk_block(k - 1, m)])


def build_frobenius(P: PolyMatrix) -> SystemMatrix:
    """Companion pencil with the identity-bidiagonal state block bottom-left."""
    S = frobenius_pencil(P)
    k = P.degree()
    return SystemMatrix.from_layout(S, (k - 1) * P.cols, "state_bottom_left")


def build_frobenius_rev(P: PolyMatrix) -> SystemMatrix:
    """rev_1 of the companion pencil; its transfer function is rev_k P."""
    S = rev1(frobenius_pencil(P))
    k = P.degree()
    return SystemMatrix.from_layout(S, (k - 1) * P.cols, "state_bottom_right")


# ---------------------------------------------------------------------------
# comrade pencils (three-term recurrences)
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RecurrenceBasis:
    """alpha_j phi_(j+1) = (lambda - beta_j) phi_j - gamma_j phi_(j-1)."""

    alphas: tuple
    betas: tuple
    gammas: tuple

    def __post_init__(self):
        for name in ("alphas", "betas", "gammas"):
            object.__setattr__(self, name, tuple(as_rational(v) for v in getattr(self, name)))
        if not len(self.alphas) == len(self.betas) == len(self.gammas):
            raise ValueError("recurrence coefficient lists of different lengths")
        if any(a == 0 for a in self.alphas):
            raise PreconditionError("alpha_j != 0")

    @classmethod
    def monomial(cls, k: int) -> "RecurrenceBasis":
        return cls((1,) * k, (0,) * k, (0,) * k)

    @classmethod
    def chebyshev(cls, k: int) -> "RecurrenceBasis":
        """Chebyshev polynomials of the first kind."""
        half = Fraction(1, 2)
        return cls((1,) + (half,) * (k - 1), (0,) * k, (0,) + (half,) * (k - 1))

    def __len__(self):
        return len(self.alphas)

    def polys(self, k: int) -> list:
        """phi_0, ..., phi_k."""
        if k > len(self.alphas):
            raise ValueError(f"recurrence covers indices up to {len(self.alphas) - 1}, need {k - 1}")
        phis = [ONE]
        prev = ZERO
        for j in range(k):
            nxt = (UniPoly((-self.betas[j], 1)) * phis[j] - prev * self.gammas[j]) * (1 / self.alphas[j])
            prev = phis[j]
            phis.append(nxt)
        return phis


def comrade_polynomial(coeffs: Sequence, basis: RecurrenceBasis) -> PolyMatrix:
    """sum_j P_j phi_j."""
    mats = [qmat(c) for c in coeffs]
    k = len(mats) - 1
    phis = basis.polys(k)
    p, m = q_shape(mats[0])
    out = PolyMatrix.zeros(p, m)
    for Pj, phi in zip(mats, phis):
        out = out + PolyMatrix.const(Pj).scale(phi)
    return out


def expand_in_basis(P: PolyMatrix, basis: RecurrenceBasis) -> list:
    """Coefficients P_0..P_k of P in the recurrence basis (exact)."""
    k = P.degree()
    phis = basis.polys(k)
    rest = [list(map(list, c)) for c in P.coeff_list()]
    p, m = P.shape
    out = [None] * (k + 1)
    for j in range(k, -1, -1):
        lc = phis[j].lc
        cj = [[rest[j][a][b] / lc for b in range(m)] for a in range(p)]
        out[j] = qmat(cj)
        for d, c in enumerate(phis[j].coeffs):
            for a in range(p):
                for b in range(m):
                    rest[d][a][b] -= c * cj[a][b]
    return out


def _check_comrade(coeffs, basis):
    mats = [qmat(c) for c in coeffs]
    k = len(mats) - 1
    if k < 2:
        raise PreconditionError("degree k > 1", f"{k + 1} coefficients given")
    if len(basis) < k:
        raise ValueError(f"recurrence must cover indices 0..{k - 1}")
    shape = q_shape(mats[0])
    if any(q_shape(c) != shape for c in mats):
        raise ValueError("inconsistent coefficient shapes")
    return mats, k, shape


def comrade_pencil(coeffs: Sequence, basis: RecurrenceBasis) -> PolyMatrix:
    mats, k, (p, m) = _check_comrade(coeffs, basis)
    a, b, g = basis.alphas, basis.betas, basis.gammas
    Pk = mats[k]
    top0 = PolyMatrix.pencil(
        [[Pk[i][j] * (-b[k - 1] / a[k - 1]) + mats[k - 1][i][j] for j in range(m)] for i in range(p)],
        [[Pk[i][j] / a[k - 1] for j in range(m)] for i in range(p)], cols=m)
    top1 = PolyMatrix.const([[mats[k - 2][i][j] - g[k - 1] / a[k - 1] * Pk[i][j] for j in range(m)]
                             for i in range(p)])
    top = [top0, top1] + [PolyMatrix.const(mats[i]) for i in range(k - 3, -1, -1)]
    rel = [[ZERO] * k for _ in range(k - 1)]
    for r in range(k - 1):
        j = k - 2 - r
        rel[r][r] = UniPoly.const(-a[j])
        rel[r][r + 1] = UniPoly((-b[j], 1))
        if r + 2 <= k - 1:
            rel[r][r + 2] = UniPoly.const(-g[j])
    bottom = PolyMatrix(rel, rows=k - 1, cols=k).kron_eye(m)
    return PolyMatrix.vstack([PolyMatrix.hstack(top), bottom])


def build_comrade(coeffs: Sequence, basis: RecurrenceBasis) -> SystemMatrix:
    mats, k, (p, m) = _check_comrade(coeffs, basis)
    return SystemMatrix.from_layout(comrade_pencil(mats, basis), (k - 1) * m, "state_bottom_left")


def build_comrade_rev(coeffs: Sequence, basis: RecurrenceBasis) -> SystemMatrix:
    """rev_1 of the comrade pencil; transfer is rev_k P / f with f(0) != 0."""
    mats, k, (p, m) = _check_comrade(coeffs, basis)
    S = rev1(comrade_pencil(mats, basis))
    return SystemMatrix.from_layout(S, (k - 1) * m, "state_bottom_right")


def comrade_rev_scale(basis: RecurrenceBasis, k: int) -> UniPoly:
    """f(lambda) = lambda^(k-1) phi_(k-1)(1/lambda)."""
    return poly_reverse(basis.polys(k - 1)[k - 1], k - 1)


# ---------------------------------------------------------------------------
# CORK pencils
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class CorkSpec:
    """P = sum_i (A_i - lambda B_i) p_i with (X - lambda Y) p = 0.

    ``A[i]``, ``B[i]`` and ``basis[i]`` are indexed by i = 0..k-1 with
    ``basis[0] == 1``; the columns of X and Y follow [p_(k-1), ..., p_0].
    """

    A: tuple
    B: tuple
    X: QMatrix
    Y: QMatrix
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(qmat(a) for a in self.A))
        object.__setattr__(self, "B", tuple(qmat(b) for b in self.B))
        object.__setattr__(self, "X", qmat(self.X))
        object.__setattr__(self, "Y", qmat(self.Y))
        object.__setattr__(self, "basis", tuple(UniPoly.coerce(p) if not isinstance(p, UniPoly) else p
                                                for p in self.basis))
        k = len(self.basis)
        if k < 2:
            raise PreconditionError("k >= 2 basis polynomials")
        if len(self.A) != k or len(self.B) != k:
            raise ValueError("need one (A_i, B_i) pair per basis polynomial")
        shape = q_shape(self.A[0])
        if any(q_shape(c) != shape for c in self.A + self.B):
            raise ValueError("inconsistent coefficient shapes")
        for M in (self.X, self.Y):
            if q_shape(M) != (k - 1, k):
                raise ValueError(f"relation matrices must be {(k - 1, k)}")
        if self.basis[0] != ONE:
            raise PreconditionError("p_0 = 1")

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def shape(self) -> tuple:
        return q_shape(self.A[0])

    @property
    def coeff_pairs(self) -> list:
        return list(zip(self.A, self.B))

    @property
    def basis_polys(self) -> tuple:
        return self.basis

    def relation(self) -> PolyMatrix:
        """X - lambda Y."""
        neg_y = tuple(tuple(-v for v in row) for row in self.Y)
        return PolyMatrix.pencil(self.X, neg_y, cols=self.k)

    def pvec(self) -> PolyMatrix:
        return PolyMatrix([[self.basis[i]] for i in range(self.k - 1, -1, -1)], rows=self.k, cols=1)

    def polynomial(self) -> PolyMatrix:
        p, m = self.shape
        out = PolyMatrix.zeros(p, m)
        for a, b, pi in zip(self.A, self.B, self.basis):
            out = out + _lin(a, tuple(tuple(-v for v in row) for row in b), p, m).scale(pi)
        return out

    def check(self) -> None:
        """Validate the linear relation and its full-rank certificate."""
        rel = self.relation()
        if not (rel @ self.pvec()).is_zero():
            raise PreconditionError("(X - lambda Y) p(lambda) = 0")
        pts = [Fraction(i) for i in range(self.k)]
        if any(rank_at(rel, c) != self.k - 1 for c in pts):
            raise PreconditionError("rank(X - lambda_0 Y) = k-1 for all lambda_0", "rank drop at a sample point")
        sd = smith_form(rel)
        if sd.rank != self.k - 1 or not sd.is_trivial():
            raise PreconditionError("rank(X - lambda_0 Y) = k-1 for all lambda_0",
                                    "nontrivial Smith form of the relation")


def cork_pencil(spec: CorkSpec) -> PolyMatrix:
    p, m = spec.shape
    k = spec.k
    top = [_lin(spec.A[i], tuple(tuple(-v for v in row) for row in spec.B[i]), p, m) for i in range(k - 1, -1, -1)]
    return PolyMatrix.vstack([PolyMatrix.hstack(top), spec.relation().kron_eye(m)])


def build_cork(spec: CorkSpec) -> SystemMatrix:
    spec.check()
    return SystemMatrix.from_layout(cork_pencil(spec), (spec.k - 1) * spec.shape[1], "state_bottom_left")


def check_cork_rev(spec: CorkSpec) -> None:
    spec.check()
    if q_rank(spec.Y) != spec.k - 1:
        raise PreconditionError("rank Y = k-1")
    if spec.basis[-1].degree != spec.k - 1:
        raise PreconditionError("deg p_(k-1) = k-1")


def build_cork_rev(spec: CorkSpec) -> SystemMatrix:
    """rev_1 of the CORK pencil; transfer is rev_k P / q, q = rev_(k-1) p_(k-1)."""
    check_cork_rev(spec)
    S = rev1(cork_pencil(spec))
    return SystemMatrix.from_layout(S, (spec.k - 1) * spec.shape[1], "state_bottom_right")


def cork_rev_scale(spec: CorkSpec) -> UniPoly:
    return poly_reverse(spec.basis[-1], spec.k - 1)


def monomial_cork_spec(P: PolyMatrix) -> CorkSpec:
    """CORK data for P in the monomial basis p_i = lambda^i."""
    k = P.degree()
    if k < 2:
        raise PreconditionError("degree k > 1")
    p, m = P.shape
    cs = P.coeff_list()
    A = [cs[i] for i in range(k)]
    B = [q_zeros(p, m) for _ in range(k - 1)] + [tuple(tuple(-v for v in row) for row in cs[k])]
    X = [[Fraction(-1) if j == r else Fraction(0) for j in range(k)] for r in range(k - 1)]
    Y = [[Fraction(-1) if j == r + 1 else Fraction(0) for j in range(k)] for r in range(k - 1)]
    return CorkSpec(A, B, X, Y, [UniPoly.monomial(i) for i in range(k)])


def recurrence_cork_spec(coeffs: Sequence, basis: RecurrenceBasis) -> CorkSpec:
    """CORK data for P = sum_j P_j phi_j, relations taken from the recurrence.

    The degree-k term is folded into the top block through
    phi_k = ((lambda - beta) phi_(k-1) - gamma phi_(k-2)) / alpha.
    """
    mats = [qmat(c) for c in coeffs]
    k = len(mats) - 1
    p, m = q_shape(mats[0])
    a, b, g = basis.alphas, basis.betas, basis.gammas
    phis = basis.polys(k - 1)
    A = [list(map(list, M)) for M in mats[:k]]
    B = [[[Fraction(0)] * m for _ in range(p)] for _ in range(k)]
    Pk = mats[k]
    for i in range(p):
        for j in range(m):
            A[k - 1][i][j] += -b[k - 1] / a[k - 1] * Pk[i][j]
            B[k - 1][i][j] = -Pk[i][j] / a[k - 1]
            A[k - 2][i][j] += -g[k - 1] / a[k - 1] * Pk[i][j]
    X = [[Fraction(0)] * k for _ in range(k - 1)]
    Y = [[Fraction(0)] * k for _ in range(k - 1)]
    # row r encodes alpha_j phi_(j+1) - (lambda - beta_j) phi_j + gamma_j phi_(j-1) = 0, j = k-2-r
    for r in range(k - 1):
        j = k - 2 - r
        col = lambda idx: k - 1 - idx  # noqa: E731
        X[r][col(j + 1)] = a[j]
        X[r][col(j)] = b[j]
        Y[r][col(j)] = Fraction(1)
        if j >= 1:
            X[r][col(j - 1)] = g[j]
    return CorkSpec(A, B, X, Y, phis)


# ---------------------------------------------------------------------------
# (extended) block Kronecker pencils
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class BlockKroneckerSpec:
    """Middle pencil lambda*M1 + M0 of size (eta+1)p x (eps+1)m."""

    M0: QMatrix
    M1: QMatrix
    eps: int
    eta: int
    p: int
    m: int
    Yext: Optional[QMatrix] = None
    Zext: Optional[QMatrix] = None

    def __post_init__(self):
        object.__setattr__(self, "M0", qmat(self.M0))
        object.__setattr__(self, "M1", qmat(self.M1))
        shape = ((self.eta + 1) * self.p, (self.eps + 1) * self.m)
        if q_shape(self.M0) != shape or q_shape(self.M1) != shape:
            raise ValueError(f"middle pencil must be {shape}")
        if self.eps < 0 or self.eta < 0 or self.p < 1 or self.m < 1:
            raise ValueError("invalid block Kronecker dimensions")
        if self.Yext is not None:
            object.__setattr__(self, "Yext", qmat(self.Yext))
            if q_shape(self.Yext, 0) != (self.eps * self.m, self.eps * self.m):
                raise ValueError("Y must be (eps*m) x (eps*m)")
        if self.Zext is not None:
            object.__setattr__(self, "Zext", qmat(self.Zext))
            if q_shape(self.Zext, 0) != (self.eta * self.p, self.eta * self.p):
                raise ValueError("Z must be (eta*p) x (eta*p)")

    @property
    def M(self) -> Pencil:
        return Pencil(self.M0, self.M1)

    @property
    def degree_bound(self) -> int:
        return self.eta + self.eps + 1

    def middle(self) -> PolyMatrix:
        return PolyMatrix.pencil(self.M0, self.M1, cols=(self.eps + 1) * self.m)

    def induced_polynomial(self) -> PolyMatrix:
        left = _lambda_block(self.eta + 1, self.p).T
        right = _lambda_block(self.eps + 1, self.m)
        return left @ self.middle() @ right


def _check_bk(spec: BlockKroneckerSpec):
    if spec.eps < 1 and spec.eta < 1:
        raise PreconditionError("eps >= 1 or eta >= 1")


def _ext_factors(spec: BlockKroneckerSpec, extended: bool):
    if not extended:
        return None, None
    Y = spec.Yext if spec.Yext is not None else q_eye(spec.eps * spec.m)
    Z = spec.Zext if spec.Zext is not None else q_eye(spec.eta * spec.p)
    if spec.eps and q_det(Y) == 0:
        raise PreconditionError("Y and Z invertible", "Y is singular")
    if spec.eta and q_det(Z) == 0:
        raise PreconditionError("Y and Z invertible", "Z is singular")
    return Y, Z


def block_kronecker_pencil(spec: BlockKroneckerSpec, extended: bool = False) -> PolyMatrix:
    """[[M, (Z (L_eta x I_p))^T], [Y (L_eps x I_m), 0]]."""
    e, h, p, m = spec.eps, spec.eta, spec.p, spec.m
    Y, Z = _ext_factors(spec, extended)
    Le = _lk_block(e, m)
    Lh = _lk_block(h, p)
    if Y is not None and e:
        Le = _const(Y, e * m, e * m) @ Le
    if Z is not None and h:
        Lh = _const(Z, h * p, h * p) @ Lh
    top = PolyMatrix.hstack([spec.middle(), Lh.T])
    bottom = PolyMatrix.hstack([Le, PolyMatrix.zeros(e * m, h * p)])
    return PolyMatrix.vstack([top, bottom])


def _bk_forward_partition(spec: BlockKroneckerSpec):
    e, h, p, m = spec.eps, spec.eta, spec.p, spec.m
    rows = tuple(range(h * p)) + tuple(range((h + 1) * p, (h + 1) * p + e * m))
    cols = tuple(range(e * m)) + tuple(range((e + 1) * m, (e + 1) * m + h * p))
    return rows, cols


def _bk_layout(spec: BlockKroneckerSpec, reverse: bool) -> str:
    if reverse:
        return "state_bottom_right"
    if spec.eta == 0:
        return "state_bottom_left"
    if spec.eps == 0:
        return "state_top_right"
    return "custom"


def _bk_build(spec: BlockKroneckerSpec, extended: bool, reverse: bool) -> SystemMatrix:
    _check_bk(spec)
    S = block_kronecker_pencil(spec, extended)
    if reverse:
        S = rev1(S)
        n = spec.eta * spec.p + spec.eps * spec.m
        return SystemMatrix.from_layout(S, n, "state_bottom_right")
    rows, cols = _bk_forward_partition(spec)
    return SystemMatrix(S, rows, cols, _bk_layout(spec, False))


def build_block_kronecker(spec: BlockKroneckerSpec) -> tuple:
    """Return ``(system_matrix, induced_polynomial)``."""
    return _bk_build(spec, False, False), spec.induced_polynomial()


def build_block_kronecker_rev(spec: BlockKroneckerSpec) -> SystemMatrix:
    return _bk_build(spec, False, True)


def build_extended_bk(spec: BlockKroneckerSpec) -> tuple:
    return _bk_build(spec, True, False), spec.induced_polynomial()


def build_extended_bk_rev(spec: BlockKroneckerSpec) -> SystemMatrix:
    return _bk_build(spec, True, True)


def bk_spec_for(P: PolyMatrix, eps: int, eta: int, Yext=None, Zext=None) -> BlockKroneckerSpec:
    """A middle pencil whose induced polynomial is P (needs deg P <= eps+eta+1).

    Coefficient d sits at block (i, j) with (eta - i) + (eps - j) = d, using the
    first block row and the last block column; the leading one goes into M1.
    """
    p, m = P.shape
    ell = eps + eta + 1
    if P.degree() > ell:
        raise PreconditionError("deg P <= eps + eta + 1")
    cs = P.coeff_list() + [q_zeros(p, m)] * (ell + 1 - len(P.coeff_list()))
    M0 = [[Fraction(0)] * ((eps + 1) * m) for _ in range((eta + 1) * p)]
    M1 = [[Fraction(0)] * ((eps + 1) * m) for _ in range((eta + 1) * p)]

    def put(target, bi, bj, c):
        for a in range(p):
            for b in range(m):
                target[bi * p + a][bj * m + b] += c[a][b]

    put(M1, 0, 0, cs[ell])
    for d in range(ell):
        # exponent (eta - i) + (eps - j) = d
        if d >= eta:
            i, j = 0, eps - (d - eta)
        else:
            i, j = eta - d, eps
        put(M0, i, j, cs[d])
    return BlockKroneckerSpec(M0, M1, eps, eta, p, m, Yext, Zext)


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Realization:
    """R_sp = C_s (lambda I - A_s)^{-1} B_s."""

    A_s: QMatrix
    B_s: QMatrix
    C_s: QMatrix

    def __post_init__(self):
        object.__setattr__(self, "A_s", qmat(self.A_s))
        object.__setattr__(self, "B_s", qmat(self.B_s))
        object.__setattr__(self, "C_s", qmat(self.C_s))
        s = len(self.A_s)
        if s < 1 or q_shape(self.A_s) != (s, s):
            raise ValueError("A_s must be square and nonempty")
        if len(self.B_s) != s or q_shape(self.C_s)[1] != s:
            raise ValueError("realization shapes are inconsistent")

    @property
    def s(self) -> int:
        return len(self.A_s)

    @property
    def p(self) -> int:
        return len(self.C_s)

    @property
    def m(self) -> int:
        return len(self.B_s[0])

    def resolvent_pencil(self) -> PolyMatrix:
        """lambda I - A_s."""
        neg = tuple(tuple(-v for v in row) for row in self.A_s)
        return PolyMatrix.pencil(neg, q_eye(self.s))

    def transfer(self) -> RatMatrix:
        X = rm_solve(self.resolvent_pencil(), PolyMatrix.const(self.B_s))
        return PolyMatrix.const(self.C_s).to_ratmatrix() @ X


def realization_minimal(real: Realization) -> bool:
    """Exact controllability and observability rank tests."""
    from .polymat import q_matmul

    s = real.s
    blocks, cur = [], real.B_s
    for _ in range(s):
        blocks.append(cur)
        cur = q_matmul(real.A_s, cur)
    ctrb = tuple(tuple(v for blk in blocks for v in blk[i]) for i in range(s))
    rows, cur = [], real.C_s
    for _ in range(s):
        rows.extend(cur)
        cur = q_matmul(cur, real.A_s)
    return q_rank(ctrb) == s and q_rank(tuple(rows)) == s


def split_poly_sp(R: RatMatrix) -> tuple:
    """R = P + R_sp with P polynomial and R_sp strictly proper."""
    P, Rsp = [], []
    for row in R.entries:
        prow, srow = [], []
        for f in row:
            q, r = divmod(f.num, f.den)
            prow.append(q)
            srow.append(RatFunc(r, f.den))
        P.append(prow)
        Rsp.append(srow)
    return PolyMatrix(P, rows=R.rows, cols=R.cols), RatMatrix(Rsp, rows=R.rows, cols=R.cols)


def assemble_rational(real: Realization, psm: SystemMatrix) -> SystemMatrix:
    """Linear system matrix of P + R_sp from a realization and a system matrix of P.

    The result is ``[[lambda I - A_s, 0, B_s], [0, A, B], [-C_s, -C, D]]`` with
    state block ``diag(lambda I - A_s, A)`` in the top-left corner.
    """
    if not psm.is_pencil():
        raise PreconditionError("system matrix of P is a pencil")
    if psm.state_det.degree != 0:
        raise PreconditionError("unimodular state matrix", f"det = {psm.state_det}")
    if (real.p, real.m) != (psm.p, psm.m):
        raise ValueError(f"realization is {real.p}x{real.m}, polynomial part is {psm.p}x{psm.m}")
    s, n = real.s, psm.n
    S = PolyMatrix.block([
        [real.resolvent_pencil(), PolyMatrix.zeros(s, n), PolyMatrix.const(real.B_s)],
        [PolyMatrix.zeros(n, s), psm.A, psm.B],
        [-PolyMatrix.const(real.C_s), psm.minus_C, psm.D],
    ])
    return SystemMatrix.from_layout(S, s + n, "state_top_left")


def pencil_system(P: PolyMatrix) -> SystemMatrix:
    """A polynomial of degree <= 1 viewed as a system matrix with empty state."""
    if P.degree() > 1:
        raise PreconditionError("deg P <= 1", f"degree is {P.degree()}")
    return SystemMatrix.from_layout(P, 0, "state_top_left")
