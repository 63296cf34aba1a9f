"""Smith and Smith-McMillan forms, local orders at rational points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Union

from .exactalg import ONE, RatFunc, UniPoly, as_rational, poly_gcd, valuation_at
from .polymat import PolyMatrix, RatMatrix, det_leibniz

MINOR_BUDGET = 10_000


@dataclass(frozen=True)
class SmithData:
    invariant_factors: tuple
    left_transform: Optional[PolyMatrix] = None
    right_transform: Optional[PolyMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal(self, rows: int, cols: int) -> PolyMatrix:
        out = PolyMatrix.zeros(rows, cols)
        grid = [list(r) for r in out.entries]
        for i, f in enumerate(self.invariant_factors):
            grid[i][i] = f
        return PolyMatrix(grid, rows=rows, cols=cols)

    def is_trivial(self) -> bool:
        return all(f == ONE for f in self.invariant_factors)


@dataclass(frozen=True)
class SMcMData:
    numerators: tuple
    denominators: tuple
    normal_rank: int

    def invariant_functions(self) -> tuple:
        return tuple(RatFunc(e, p) for e, p in zip(self.numerators, self.denominators))


@dataclass(frozen=True)
class LocalOrders:
    point: Fraction
    orders: tuple

    @property
    def zero_orders(self) -> tuple:
        return tuple(o for o in self.orders if o > 0)

    @property
    def pole_orders(self) -> tuple:
        return tuple(sorted(-o for o in self.orders if o < 0))


def smith_form(M: PolyMatrix, with_transforms: bool = False) -> SmithData:
    """Smith form by pivoting on minimal-degree entries.

    With ``with_transforms`` the returned U, V satisfy ``U @ M @ V`` equal to
    the diagonal of invariant factors padded with zeros.
    """
    R, C = M.shape
    a = [list(r) for r in M.entries]
    U = [list(r) for r in PolyMatrix.identity(R).entries] if with_transforms else None
    V = [list(r) for r in PolyMatrix.identity(C).entries] if with_transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y if not y.is_zero() else x for x, y in zip(a[dst], a[src])]
        if U is not None:
            U[dst] = [x + q * y if not y.is_zero() else x for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            if not row[src].is_zero():
                row[dst] = row[dst] + q * row[src]
        if V is not None:
            for row in V:
                if not row[src].is_zero():
                    row[dst] = row[dst] + q * row[src]

    t = 0
    while t < min(R, C):
        best = None
        for i in range(t, R):
            for j in range(t, C):
                e = a[i][j]
                if not e.is_zero() and (best is None or e.degree < best[0]):
                    best = (e.degree, i, j)
                    if e.degree == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            swap_cols(t, j0)

        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, R):
                if not a[i][t].is_zero():
                    q, r = divmod(a[i][t], piv)
                    add_row(i, t, -q)
                    if not r.is_zero():
                        clean = False
            for j in range(t + 1, C):
                if not a[t][j].is_zero():
                    q, r = divmod(a[t][j], piv)
                    add_col(j, t, -q)
                    if not r.is_zero():
                        clean = False
            if not clean:
                cands = [(a[i][t].degree, i, t) for i in range(t + 1, R) if not a[i][t].is_zero()]
                cands += [(a[t][j].degree, t, j) for j in range(t + 1, C) if not a[t][j].is_zero()]
                _, i1, j1 = min(cands)
                if i1 != t:
                    swap_rows(t, i1)
                if j1 != t:
                    swap_cols(t, j1)
                continue
            bad = next(((i, j) for i in range(t + 1, R) for j in range(t + 1, C)
                        if not a[i][j].is_zero() and not (a[i][j] % piv).is_zero()), None)
            if bad is None:
                break
            add_row(t, bad[0], ONE)
        lc = a[t][t].lc
        if lc != 1:
            inv = UniPoly.const(1 / lc)
            a[t] = [x * inv for x in a[t]]
            if U is not None:
                U[t] = [x * inv for x in U[t]]
        t += 1

    factors = tuple(a[i][i] for i in range(t))
    if not with_transforms:
        return SmithData(factors)
    return SmithData(factors, PolyMatrix(U, rows=R, cols=R), PolyMatrix(V, rows=C, cols=C))


def gcd_minors_oracle(M: PolyMatrix) -> SmithData:
    """Invariant factors from determinantal divisors, by brute force.

    ``d_i`` is the monic gcd of all i x i minors; factor i is d_i / d_(i-1).
    """
    R, C = M.shape
    total = sum(comb(R, i) * comb(C, i) for i in range(1, min(R, C) + 1))
    if total > MINOR_BUDGET:
        raise ValueError(f"{total} minors exceed the brute-force budget of {MINOR_BUDGET}")
    divisors = [ONE]
    for size in range(1, min(R, C) + 1):
        g = None
        for rows in combinations(range(R), size):
            for cols in combinations(range(C), size):
                d = det_leibniz([[M.entries[i][j] for j in cols] for i in rows])
                if d.is_zero():
                    continue
                g = d.monic() if g is None else poly_gcd(g, d)
        if g is None:
            break
        divisors.append(g)
    factors = tuple(divisors[i].exact_div(divisors[i - 1]).monic() for i in range(1, len(divisors)))
    return SmithData(factors)


def _as_ratmatrix(G: Union[PolyMatrix, RatMatrix]) -> RatMatrix:
    return G.to_ratmatrix() if isinstance(G, PolyMatrix) else G


def smith_mcmillan(G: Union[PolyMatrix, RatMatrix]) -> SMcMData:
    G = _as_ratmatrix(G)
    d = G.common_denominator()
    N = PolyMatrix([[(e * d).to_poly() for e in row] for row in G.entries], rows=G.rows, cols=G.cols)
    factors = smith_form(N).invariant_factors
    fs = [RatFunc(f, d) for f in factors]
    return SMcMData(tuple(f.num.monic() for f in fs), tuple(f.den for f in fs), len(fs))


def local_orders_at(G: Union[PolyMatrix, RatMatrix], point) -> LocalOrders:
    point = as_rational(point)
    if isinstance(G, PolyMatrix):
        funcs = smith_form(G).invariant_factors
    else:
        funcs = smith_mcmillan(G).invariant_functions()
    return LocalOrders(point, tuple(sorted(valuation_at(f, point) for f in funcs)))


def equivalent_at_zero(G1: Union[PolyMatrix, RatMatrix], G2: Union[PolyMatrix, RatMatrix]) -> bool:
    """Same normal rank and same invariant orders at the point 0."""
    if G1.shape != G2.shape:
        raise ValueError(f"dimension mismatch {G1.shape} vs {G2.shape}")
    o1, o2 = local_orders_at(G1, 0), local_orders_at(G2, 0)
    return o1.orders == o2.orders
