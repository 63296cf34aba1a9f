"""Polynomial and rational matrices, pencils, and the Lambda/L_k blocks.

Constant matrices are plain tuples of tuples of ``Fraction``; helpers for
them carry a ``q_`` prefix.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .exactalg import ONE, ZERO, RatFunc, UniPoly, as_rational, poly_reverse

QMatrix = tuple  # tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# constant rational matrices
# ---------------------------------------------------------------------------
def qmat(rows: Iterable[Iterable]) -> QMatrix:
    return tuple(tuple(as_rational(x) for x in row) for row in rows)


def q_zeros(r: int, c: int) -> QMatrix:
    return tuple((Fraction(0),) * c for _ in range(r))


def q_eye(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def q_shape(a: QMatrix, cols: int | None = None) -> tuple:
    r = len(a)
    c = len(a[0]) if r else (cols or 0)
    return r, c


def q_matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    bt = list(zip(*b)) if b else []
    inner = len(b)
    if not bt:
        return tuple(() for _ in a)
    return tuple(
        tuple(sum((row[k] * col[k] for k in range(inner)), Fraction(0)) for col in bt) for row in a
    )


def q_add(a: QMatrix, b: QMatrix) -> QMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def q_scale(a: QMatrix, c) -> QMatrix:
    c = as_rational(c)
    return tuple(tuple(x * c for x in row) for row in a)


def _row_echelon(a: QMatrix) -> tuple[list[list[Fraction]], list[int], int]:
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    swaps = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            swaps += 1
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots, swaps


def q_rank(a: QMatrix) -> int:
    if not a or not a[0]:
        return 0
    return len(_row_echelon(a)[1])


def q_det(a: QMatrix) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    m, pivots, swaps = _row_echelon(a)
    if len(pivots) < n:
        return Fraction(0)
    d = Fraction(-1 if swaps % 2 else 1)
    for i in range(n):
        d *= m[i][i]
    return d


def q_inv(a: QMatrix) -> QMatrix:
    n = len(a)
    aug = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular constant matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def q_nullspace(a: QMatrix, cols: int | None = None) -> list:
    """Basis of the right kernel of a constant matrix, one list per vector."""
    r, c = q_shape(a, cols)
    if r == 0:
        return [[Fraction(int(i == j)) for i in range(c)] for j in range(c)]
    m, pivots, _ = _row_echelon(a)
    # back-substitute to reduced form
    for k in range(len(pivots) - 1, -1, -1):
        pc = pivots[k]
        m[k] = [x / m[k][pc] for x in m[k]]
        for i in range(k):
            if m[i][pc] != 0:
                f = m[i][pc]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    basis = []
    for free in (j for j in range(c) if j not in pivots):
        v = [Fraction(0)] * c
        v[free] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -m[k][free]
        basis.append(v)
    return basis


def q_to_numpy(a: QMatrix, dtype=float) -> np.ndarray:
    r, c = q_shape(a)
    out = np.zeros((r, c), dtype=dtype)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            out[i, j] = float(x)
    return out


# ---------------------------------------------------------------------------
# polynomial matrices
# ---------------------------------------------------------------------------
class PolyMatrix:
    """Immutable rows x cols grid of :class:`UniPoly`."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(UniPoly.coerce(x) if not isinstance(x, UniPoly) else x for x in row) for row in entries)
        nr = len(grid)
        nc = len(grid[0]) if nr else (cols or 0)
        if rows is not None and rows != nr:
            raise ValueError(f"expected {rows} rows, got {nr}")
        if cols is not None and nr and cols != nc:
            raise ValueError(f"expected {cols} columns, got {nc}")
        if any(len(r) != nc for r in grid):
            raise ValueError("ragged polynomial matrix")
        self.rows, self.cols, self.entries = nr, nc, grid
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def zeros(cls, r: int, c: int) -> "PolyMatrix":
        return cls([[ZERO] * c for _ in range(r)], rows=r, cols=c)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], rows=n, cols=n)

    @classmethod
    def const(cls, a: Iterable[Iterable], cols: int | None = None) -> "PolyMatrix":
        a = qmat(a)
        return cls([[UniPoly.const(x) for x in row] for row in a], rows=len(a), cols=cols)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Iterable[Iterable]], rows: int | None = None,
                    cols: int | None = None) -> "PolyMatrix":
        """``coeffs[d]`` is the constant matrix multiplying ``lambda**d``."""
        mats = [qmat(c) for c in coeffs]
        if not mats:
            return cls.zeros(rows or 0, cols or 0)
        r, c = q_shape(mats[0], cols)
        for m in mats:
            if q_shape(m, c) != (r, c):
                raise ValueError("coefficient matrices of different shapes")
        return cls([[UniPoly(m[i][j] for m in mats) for j in range(c)] for i in range(r)], rows=r, cols=c)

    @classmethod
    def pencil(cls, m0, m1, cols: int | None = None) -> "PolyMatrix":
        """``lambda * m1 + m0``."""
        return cls.from_coeffs([m0, m1], cols=cols)

    # -- queries --------------------------------------------------------
    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    def __getitem__(self, ij) -> UniPoly:
        i, j = ij
        return self.entries[i][j]

    def degree(self) -> int:
        """Largest entry degree; 0 for the zero matrix by convention."""
        d = max((e.degree for row in self.entries for e in row), default=-1)
        return max(d, 0)

    def coeff(self, d: int) -> QMatrix:
        return tuple(tuple(e.coeff(d) for e in row) for row in self.entries)

    def coeff_list(self) -> list:
        return [self.coeff(d) for d in range(self.degree() + 1)]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- structure ------------------------------------------------------
    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix([tuple(r[j] for r in self.entries) for j in range(self.cols)],
                          rows=self.cols, cols=self.rows)

    def sub(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], rows=len(rows), cols=len(cols))

    def row(self, i: int) -> tuple:
        return self.entries[i]

    @staticmethod
    def hstack(mats: Sequence["PolyMatrix"]) -> "PolyMatrix":
        r = mats[0].rows
        if any(m.rows != r for m in mats):
            raise ValueError("hstack of matrices with different row counts")
        return PolyMatrix([sum((m.entries[i] for m in mats), ()) for i in range(r)], rows=r,
                          cols=sum(m.cols for m in mats))

    @staticmethod
    def vstack(mats: Sequence["PolyMatrix"]) -> "PolyMatrix":
        c = mats[0].cols
        if any(m.cols != c for m in mats):
            raise ValueError("vstack of matrices with different column counts")
        return PolyMatrix([row for m in mats for row in m.entries], rows=sum(m.rows for m in mats), cols=c)

    @staticmethod
    def block(grid: Sequence[Sequence["PolyMatrix"]]) -> "PolyMatrix":
        return PolyMatrix.vstack([PolyMatrix.hstack(list(r)) for r in grid])

    def kron_eye(self, s: int) -> "PolyMatrix":
        """``self`` Kronecker-multiplied by the s x s identity."""
        out = [[ZERO] * (self.cols * s) for _ in range(self.rows * s)]
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                for t in range(s):
                    out[i * s + t][j * s + t] = e
        return PolyMatrix(out, rows=self.rows * s, cols=self.cols * s)

    # -- arithmetic -----------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same(other)
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                          rows=self.rows, cols=self.cols)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-a for a in r] for r in self.entries], rows=self.rows, cols=self.cols)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, c) -> "PolyMatrix":
        c = UniPoly.coerce(c)
        return PolyMatrix([[a * c for a in r] for r in self.entries], rows=self.rows, cols=self.cols)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
            new_row = []
            for col in ot:
                acc = ZERO
                for k, a in nz:
                    b = col[k]
                    if not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out, rows=self.rows, cols=other.cols)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    # -- evaluation -----------------------------------------------------
    def __call__(self, point):
        return pm_eval(self, point)

    def to_ratmatrix(self) -> "RatMatrix":
        return RatMatrix([[RatFunc.coerce(e) for e in row] for row in self.entries], rows=self.rows, cols=self.cols)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, deg={self.degree()})"

    def __str__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"[{body}]"


def pm_eval(M: PolyMatrix, point):
    """Entrywise evaluation. Exact points give a QMatrix, floats an ndarray."""
    if isinstance(point, (int, Fraction)):
        point = Fraction(point)
        return tuple(tuple(e(point) for e in row) for row in M.entries)
    coeffs = [q_to_numpy(c) for c in M.coeff_list()]
    acc = np.zeros((M.rows, M.cols), dtype=complex if np.iscomplexobj(point) else float)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def _det_cofactor(a) -> UniPoly:
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = ZERO
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(a) -> UniPoly:
    """Permutation-expansion determinant; brute force, used as an oracle."""
    n = len(a)
    total = ZERO
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            e = a[i][j]
            if e.is_zero():
                term = ZERO
                break
            term = term * e
        if not term.is_zero():
            total = total - term if inv % 2 else total + term
    return total


def _det_bareiss(a) -> UniPoly:
    m = [list(r) for r in a]
    n = len(m)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        cands = [i for i in range(k, n) if not m[i][k].is_zero()]
        if not cands:
            return ZERO
        piv = min(cands, key=lambda i: m[i][k].degree)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pk * m[i][j]
                if not mik.is_zero():
                    num = num - mik * m[k][j]
                m[i][j] = num.exact_div(prev) if prev.degree > 0 else num * (1 / prev.lc)
            m[i][k] = ZERO
        prev = pk
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def pm_det(M: PolyMatrix) -> UniPoly:
    """Exact determinant (cofactor expansion up to 3x3, Bareiss beyond)."""
    if not M.is_square():
        raise ValueError(f"determinant of a non-square {M.shape} matrix")
    if M.rows <= 3:
        return _det_cofactor(M.entries)
    return _det_bareiss(M.entries)


def is_unimodular(M: PolyMatrix) -> bool:
    d = pm_det(M)
    return d.degree == 0


def pm_reversal(M: PolyMatrix, ell: int) -> PolyMatrix:
    """Entrywise ``lambda**ell * M(1/lambda)``."""
    if ell < M.degree():
        raise ValueError(f"reversal degree {ell} below matrix degree {M.degree()}")
    return PolyMatrix([[poly_reverse(e, ell) for e in row] for row in M.entries], rows=M.rows, cols=M.cols)


def rank_at(M: PolyMatrix, point) -> int:
    return q_rank(pm_eval(M, as_rational(point)))


def _lambda_block(k: int, m: int) -> PolyMatrix:
    # [lambda^(k-1); ...; lambda; 1] (x) I_m, k >= 0
    col = PolyMatrix([[UniPoly.monomial(k - 1 - i)] for i in range(k)], rows=k, cols=1)
    return col.kron_eye(m)


def build_Lambda(k: int, m: int) -> PolyMatrix:
    """(k*m) x m block column with blocks lambda^(k-1) I_m, ..., lambda I_m, I_m."""
    if k < 1 or m < 1:
        raise ValueError("build_Lambda needs k >= 1 and m >= 1")
    return _lambda_block(k, m)


def _lk_block(k: int, s: int) -> PolyMatrix:
    rows = [[ZERO] * (k + 1) for _ in range(k)]
    for i in range(k):
        rows[i][i] = UniPoly.const(-1)
        rows[i][i + 1] = UniPoly.x()
    return PolyMatrix(rows, rows=k, cols=k + 1).kron_eye(s)


def build_Lk(k: int, s: int) -> PolyMatrix:
    """The k x (k+1) pencil with rows [.. -1 lambda ..], Kronecker I_s."""
    if k < 1 or s < 1:
        raise ValueError("build_Lk needs k >= 1 and s >= 1")
    return _lk_block(k, s)


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------
class RatMatrix:
    """Immutable grid of :class:`RatFunc`."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(RatFunc.coerce(x) for x in row) for row in entries)
        nr = len(grid)
        nc = len(grid[0]) if nr else (cols or 0)
        if any(len(r) != nc for r in grid):
            raise ValueError("ragged rational matrix")
        if rows is not None and rows != nr:
            raise ValueError(f"expected {rows} rows, got {nr}")
        self.rows, self.cols, self.entries = nr, nc, grid

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[RatFunc(ZERO)] * c for _ in range(r)], rows=r, cols=c)

    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    def __getitem__(self, ij) -> RatFunc:
        i, j = ij
        return self.entries[i][j]

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial() for row in self.entries for e in row)

    def to_polymatrix(self) -> PolyMatrix:
        if not self.is_polynomial():
            raise ValueError("rational matrix has non-polynomial entries")
        return PolyMatrix([[e.num for e in row] for row in self.entries], rows=self.rows, cols=self.cols)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                         rows=self.rows, cols=self.cols)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in r] for r in self.entries], rows=self.rows, cols=self.cols)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def scale(self, c) -> "RatMatrix":
        c = RatFunc.coerce(c)
        return RatMatrix([[a * c for a in r] for r in self.entries], rows=self.rows, cols=self.cols)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if isinstance(other, PolyMatrix):
            other = other.to_ratmatrix()
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
            out.append([_dot(nz, col) for col in ot])
        return RatMatrix(out, rows=self.rows, cols=other.cols)

    def __rmatmul__(self, other):
        if isinstance(other, PolyMatrix):
            return other.to_ratmatrix() @ self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            other = other.to_ratmatrix()
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def common_denominator(self) -> UniPoly:
        from .exactalg import poly_lcm

        d = ONE
        for row in self.entries:
            for e in row:
                if not e.is_polynomial():
                    d = poly_lcm(d, e.den)
        return d

    def __call__(self, point):
        return tuple(tuple(e(as_rational(point)) for e in row) for row in self.entries)

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"

    def __str__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"[{body}]"


def _dot(nz, col) -> RatFunc:
    # sum of a*b over a polynomial-fast path when denominators are trivial
    num = ZERO
    acc = None
    for k, a in nz:
        b = col[k]
        if b.is_zero():
            continue
        if a.is_polynomial() and b.is_polynomial() and (acc is None or acc.is_polynomial()):
            num = num + a.num * b.num
            continue
        term = a * b
        acc = term if acc is None else acc + term
    if acc is None:
        return RatFunc(num, ONE, _reduced=True)
    return acc + RatFunc(num, ONE, _reduced=True)


def _pivot_weight(f: RatFunc) -> int:
    return f.num.degree + f.den.degree


def rm_solve(A: PolyMatrix, B: PolyMatrix) -> RatMatrix:
    """Exact solution X of A X = B over the rational-function field.

    Fraction-free Gauss-Jordan: every intermediate entry is a polynomial
    (a minor of the augmented matrix), so no gcds are taken until the final
    division by the last pivot, which equals +-det A.
    """
    if not A.is_square():
        raise ValueError("rm_solve needs a square coefficient matrix")
    if A.rows != B.rows:
        raise ValueError("rm_solve: row counts differ")
    n, c = A.rows, B.cols
    if n == 0:
        return RatMatrix.zeros(0, c)
    aug = [list(A.entries[i]) + list(B.entries[i]) for i in range(n)]
    prev = ONE
    for col in range(n):
        cands = [i for i in range(col, n) if not aug[i][col].is_zero()]
        if not cands:
            raise ZeroDivisionError("rm_solve: singular state matrix (zero determinant)")
        piv = min(cands, key=lambda i: aug[i][col].degree)
        aug[col], aug[piv] = aug[piv], aug[col]
        pk = aug[col][col]
        prow = aug[col]
        for i in range(n):
            if i == col:
                continue
            row = aug[i]
            f = row[col]
            new_row = []
            for j, (x, y) in enumerate(zip(row, prow)):
                if j == col:
                    new_row.append(ZERO)
                    continue
                v = pk * x
                if not f.is_zero() and not y.is_zero():
                    v = v - f * y
                new_row.append(v.exact_div(prev) if prev.degree > 0 else v * (1 / prev.lc))
            aug[i] = new_row
        prev = pk
    # each diagonal entry now equals the last pivot
    return RatMatrix([[RatFunc(aug[i][n + j], prev) for j in range(c)] for i in range(n)], rows=n, cols=c)


def rm_solve_field(A: PolyMatrix, B: PolyMatrix) -> RatMatrix:
    """Gauss-Jordan directly over rational functions (slower reference path)."""
    if not A.is_square():
        raise ValueError("rm_solve needs a square coefficient matrix")
    if A.rows != B.rows:
        raise ValueError("rm_solve: row counts differ")
    n, c = A.rows, B.cols
    aug = [[RatFunc.coerce(x) for x in A.entries[i]] + [RatFunc.coerce(x) for x in B.entries[i]] for i in range(n)]
    for col in range(n):
        cands = [i for i in range(col, n) if not aug[i][col].is_zero()]
        if not cands:
            raise ZeroDivisionError("rm_solve: singular state matrix (zero determinant)")
        piv = min(cands, key=lambda i: _pivot_weight(aug[i][col]))
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [x * inv if not x.is_zero() else x for x in aug[col]]
        prow = aug[col]
        for i in range(n):
            if i == col:
                continue
            f = aug[i][col]
            if f.is_zero():
                continue
            aug[i] = [x - f * y if not y.is_zero() else x for x, y in zip(aug[i], prow)]
    return RatMatrix([row[n:] for row in aug], rows=n, cols=c)


class Pencil:
    """``lambda * M1 + M0`` with constant rational coefficients."""

    __slots__ = ("M0", "M1")

    def __init__(self, M0, M1):
        self.M0, self.M1 = qmat(M0), qmat(M1)
        if q_shape(self.M0) != q_shape(self.M1):
            raise ValueError("pencil coefficients of different shapes")

    @classmethod
    def from_polymatrix(cls, M: PolyMatrix) -> "Pencil":
        if M.degree() > 1:
            raise ValueError(f"degree-{M.degree()} matrix is not a pencil")
        return cls(M.coeff(0), M.coeff(1))

    @property
    def shape(self) -> tuple:
        return q_shape(self.M0)

    def as_poly(self) -> PolyMatrix:
        r, c = self.shape
        return PolyMatrix.pencil(self.M0, self.M1, cols=c)

    def rev(self) -> "Pencil":
        return Pencil(self.M1, self.M0)

    def __call__(self, point):
        return pm_eval(self.as_poly(), point)

    def __eq__(self, other):
        if not isinstance(other, Pencil):
            return NotImplemented
        return self.M0 == other.M0 and self.M1 == other.M1

    def __hash__(self):
        return hash((self.M0, self.M1))

    def __repr__(self):
        return f"Pencil({self.shape[0]}x{self.shape[1]})"
