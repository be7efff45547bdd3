"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction`.  On top of that this module provides
dense univariate polynomials over the rationals, reduced rational functions
normalised to have denominator constant term one, and elements of a quadratic
field used for Binet-style evaluation of second order recurrences.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class NotPowerSeriesError(ValueError):
    """A rational function whose denominator vanishes at x = 0."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_rational(q: Fraction) -> str:
    """Render as ``"num/den"`` (or ``"num"`` when the denominator is one)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are removed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("valuation of the zero polynomial")

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{format_rational(abs(c))}*{mono}"
            else:
                body = format_rational(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> Polynomial:
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, n: int) -> Polynomial:
        """Multiply by ``x**n``; negative ``n`` drops low terms (must be zero)."""
        if n >= 0:
            return Polynomial([0] * n + list(self.coeffs))
        if any(self.coeffs[: -n]):
            raise ValueError(f"polynomial not divisible by x^{-n}")
        return Polynomial(self.coeffs[-n:])

    def truncate(self, degree: int) -> Polynomial:
        """Keep terms of degree <= ``degree``."""
        return Polynomial(self.coeffs[: degree + 1])

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= f * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def primitive(self) -> Polynomial:
        """Scale to integer coefficients with gcd one and positive leading term."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Polynomial(Fraction(i, g) for i in ints)


def _coerce_poly(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


X = Polynomial([0, 1])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; content is stripped at every step to limit coefficient growth."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, (a % b).primitive()
    return a.monic()


def poly_arith(a: Polynomial, b: Polynomial, kind: str):
    """Dispatch on ``kind`` in {add, sub, mul, divmod, gcd}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    if kind == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown polynomial operation {kind!r}")


class RationalFunction:
    """Reduced quotient ``num/den`` of polynomials with ``den(0) == 1``.

    The normalisation makes equality structural and lets ``u(0)`` be read off
    as the constant term of the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = Polynomial.constant(1) if den is None else _coerce_poly(den)
        if num is None or den is None:
            raise TypeError("RationalFunction needs polynomial or scalar parts")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial.constant(1)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        c = den[0]
        if c == 0:
            raise NotPowerSeriesError(f"denominator {den} vanishes at x = 0")
        self.num = num * (1 / c)
        self.den = den * (1 / c)

    @classmethod
    def from_poly(cls, p: Polynomial) -> RationalFunction:
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def at_zero(self) -> Fraction:
        return self.num[0]

    def valuation(self) -> int:
        return self.num.valuation()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return _coerce_rf(other) / self

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return RationalFunction(1) / (self ** -e)
        return RationalFunction(self.num ** e, self.den ** e)

    def shift(self, n: int) -> RationalFunction:
        """Multiply by ``x**n``; a negative shift must divide the numerator."""
        return RationalFunction(self.num.shift(n), self.den)


def _coerce_rf(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, Polynomial)):
        return RationalFunction(value)
    return None


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class QuadExt:
    """``rational + radical * sqrt(disc)`` with a fixed discriminant.

    A perfect-square discriminant is folded into the rational part so that
    division is always exact.
    """

    __slots__ = ("rational", "radical", "disc")

    def __init__(self, rational: Scalar, radical: Scalar = 0, disc: Scalar = 0):
        rational, radical, disc = map(as_fraction, (rational, radical, disc))
        root = _rational_sqrt(disc)
        if root is not None:
            rational, radical = rational + radical * root, Fraction(0)
        self.rational, self.radical, self.disc = rational, radical, disc

    def _same(self, other) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.disc)
        if other.disc != self.disc:
            raise ValueError("QuadExt elements with different discriminants")
        return other

    def is_rational(self) -> bool:
        return self.radical == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.radical == 0 and self.rational == other
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self.rational, self.radical) == (other.rational, other.radical) and (
            self.radical == 0 or self.disc == other.disc)

    def __hash__(self) -> int:
        return hash((self.rational, self.radical, self.disc if self.radical else 0))

    def __repr__(self) -> str:
        return (f"QuadExt({format_rational(self.rational)}, "
                f"{format_rational(self.radical)}, {format_rational(self.disc)})")

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.rational, -self.radical, self.disc)

    def __add__(self, other) -> QuadExt:
        o = self._same(other)
        return QuadExt(self.rational + o.rational, self.radical + o.radical, self.disc)

    __radd__ = __add__

    def __sub__(self, other) -> QuadExt:
        return self + (-self._same(other))

    def __rsub__(self, other) -> QuadExt:
        return self._same(other) - self

    def __mul__(self, other) -> QuadExt:
        o = self._same(other)
        return QuadExt(self.rational * o.rational + self.radical * o.radical * self.disc,
                       self.rational * o.radical + self.radical * o.rational,
                       self.disc)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.rational, -self.radical, self.disc)

    def norm(self) -> Fraction:
        return self.rational ** 2 - self.radical ** 2 * self.disc

    def __truediv__(self, other) -> QuadExt:
        o = self._same(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        p = self * o.conjugate()
        return QuadExt(p.rational / n, p.radical / n, self.disc)

    def __rtruediv__(self, other) -> QuadExt:
        return self._same(other) / self

    def __pow__(self, e: int) -> QuadExt:
        if e < 0:
            return QuadExt(1, 0, self.disc) / (self ** -e)
        result = QuadExt(1, 0, self.disc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def quadext_eval(alpha: Scalar, beta: Scalar) -> tuple[QuadExt, QuadExt]:
    """Roots ``(mu, gamma)`` of ``x**2 - beta*x - alpha`` in Q(sqrt(beta**2 + 4*alpha))."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    disc = beta * beta + 4 * alpha
    half = Fraction(1, 2)
    mu = QuadExt(beta * half, half, disc)
    gamma = QuadExt(beta * half, -half, disc)
    return mu, gamma
