"""Exact univariate polynomials and rational functions over the rationals.

Scalars are :class:`fractions.Fraction`. Every value is kept in canonical
form (trimmed coefficient lists, reduced fractions with monic denominators),
so ``==`` is structural equality.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and decimal strings such as ``"3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class UniPoly:
    """Polynomial in lambda with rational coefficients, ascending order."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        out = cls.const(1)
        for r in roots:
            out = out * cls((-as_rational(r), 1))
        return out

    @staticmethod
    def coerce(value) -> "UniPoly":
        if isinstance(value, UniPoly):
            return value
        return UniPoly((value,))

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return UniPoly(c / lc for c in self.coeffs)

    def __call__(self, point):
        """Horner evaluation; works for Fractions, floats and complex."""
        if isinstance(point, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * point + c
            return acc
        acc = 0 * point
        for c in reversed(self.coeffs):
            acc = acc * point + float(c)
        return acc

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                other = UniPoly.const(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                other = UniPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = UniPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.coeffs[-1]
        if len(rem) - 1 < db:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lc
            quot[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] -= c * bj
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("UniPoly", self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "λ" if i == 1 else f"λ^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


ZERO = UniPoly()
ONE = UniPoly((1,))
LAMBDA = UniPoly((0, 1))


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = UniPoly.coerce(a), UniPoly.coerce(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero():
        a, b = b, divmod(a, b)[1].monic()
    return a.monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return ZERO
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_reverse(p: UniPoly, ell: int) -> UniPoly:
    """``lambda**ell * p(1/lambda)``; requires ``ell >= deg p``."""
    if ell < p.degree:
        raise ValueError(f"reversal degree {ell} below polynomial degree {p.degree}")
    cs = list(p.coeffs) + [Fraction(0)] * (ell + 1 - len(p.coeffs))
    return UniPoly(reversed(cs))


def poly_arith(a: UniPoly, b: UniPoly, kind: str):
    """Dispatch helper: ``kind`` in {'add', 'sub', 'mul', 'divmod'}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    raise ValueError(f"unknown polynomial operation {kind!r}")


class RatFunc:
    """Reduced quotient num/den with monic denominator; zero is 0/1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = UniPoly.coerce(num)
        den = ONE if den is None else UniPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE
            elif not den.is_constant():
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        self.num: UniPoly = num
        self.den: UniPoly = den
        self._hash = None

    @staticmethod
    def coerce(value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return RatFunc(UniPoly.coerce(value), ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_strictly_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def to_poly(self) -> UniPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __call__(self, point):
        d = self.den(point)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {point}")
        return self.num(point) / d

    def __add__(self, other):
        other = RatFunc.coerce(other) if not isinstance(other, RatFunc) else other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other) if not isinstance(other, RatFunc) else other
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc(self.num * other.num * (1 / (self.den.lc * other.den.lc)), ONE, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inversion of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inv()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inv()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (UniPoly, int, Fraction)):
            return self.is_polynomial() and self.num == UniPoly.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def ratfunc_arith(a: RatFunc, b, kind: str) -> RatFunc:
    """Dispatch helper: ``kind`` in {'add', 'mul', 'inv'} (``inv`` ignores b)."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inv()
    raise ValueError(f"unknown rational-function operation {kind!r}")


def poly_valuation(p: UniPoly, point) -> int:
    if p.is_zero():
        raise ValueError("the zero polynomial has no valuation")
    point = as_rational(point)
    root = UniPoly((-point, 1))
    v = 0
    while True:
        q, r = divmod(p, root)
        if not r.is_zero():
            return v
        p, v = q, v + 1


def valuation_at(f, point) -> int:
    """Order of ``f`` at ``point``: positive for zeros, negative for poles."""
    f = RatFunc.coerce(f)
    if f.is_zero():
        raise ValueError("the zero rational function has no valuation")
    return poly_valuation(f.num, point) - poly_valuation(f.den, point)


def poly_from_roots(roots: Sequence) -> UniPoly:
    return UniPoly.from_roots(roots)
