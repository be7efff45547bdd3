"""Truncated power series and quadratic functional equations.

A quadratic functional equation (:class:`Qfe`) has the shape

    F(x) = x**d / (u(x) + x**k * v(x) * F(x))

with rational power series ``u`` and ``v`` whose constant terms are nonzero.
It has a unique power series solution, computed here by fixed-point iteration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import Polynomial, RationalFunction, Scalar, as_fraction, format_rational


class InvalidQfeError(ValueError):
    pass


class PowerSeries:
    """Coefficients ``a_0 .. a_order`` of a series known modulo ``x**(order+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("negative truncation order")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a power series needs at least its constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({[format_rational(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"series known only to order {self.order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return PowerSeries([sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0))
                            for m in range(n + 1)])

    __rmul__ = __mul__

    def shift(self, n: int) -> PowerSeries:
        """Multiply by ``x**n`` keeping the same order."""
        return PowerSeries([Fraction(0)] * n + list(self.coeffs), order=self.order)

    def reciprocal(self) -> PowerSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for m in range(1, len(a)):
            s = sum((a[i] * out[m - i] for i in range(1, m + 1)), Fraction(0))
            out.append(-s * inv0)
        return PowerSeries(out)


def series_of_poly(p: Polynomial, order: int) -> PowerSeries:
    return PowerSeries([p[i] for i in range(order + 1)])


def series_of_ratfunc(r: RationalFunction, order: int) -> PowerSeries:
    """Maclaurin coefficients of ``r`` up to ``order`` by exact long division."""
    den = r.den
    c0 = den[0]
    out: list[Fraction] = []
    for m in range(order + 1):
        s = r.num[m] - sum((den[i] * out[m - i] for i in range(1, min(m, den.degree) + 1)),
                           Fraction(0))
        out.append(s / c0)
    return PowerSeries(out)


@dataclass(frozen=True)
class Qfe:
    """``F = x**d / (u + x**k * v * F)`` with ``u(0) != 0`` and ``v(0) != 0``."""

    d: int
    k: int
    u: RationalFunction
    v: RationalFunction

    def __post_init__(self):
        if self.d < 0 or self.k < 1:
            raise InvalidQfeError(f"need d >= 0 and k >= 1, got d={self.d}, k={self.k}")
        if self.u.at_zero() == 0:
            raise InvalidQfeError(f"u(0) = 0 for u = {self.u}")
        if self.v.at_zero() == 0:
            raise InvalidQfeError(f"v(0) = 0 for v = {self.v}")

    def __str__(self) -> str:
        return f"F = x^{self.d} / ({self.u} + x^{self.k} * ({self.v}) * F)"


def qfe_solve(q: Qfe, order: int) -> PowerSeries:
    """Unique series solution of ``q`` modulo ``x**(order+1)``.

    Iterates ``F <- x**d / (u + x**k v F)`` from ``F = 0``.  Each pass fixes at
    least ``k`` further coefficients, so two equal successive iterates are the
    answer; ``order + 2`` passes always suffice.
    """
    if order < 0:
        raise ValueError("negative truncation order")
    us = series_of_ratfunc(q.u, order)
    vs = series_of_ratfunc(q.v, order)
    xkv = vs.shift(q.k)
    f = PowerSeries([0], order=order)
    for _ in range(order + 2):
        nxt = (us + xkv * f).reciprocal().shift(q.d)
        if nxt == f:
            return f
        f = nxt
    raise InvalidQfeError("fixed-point iteration did not stabilise")


def qfe_solve_direct(q: Qfe, order: int) -> PowerSeries:
    """Coefficient-by-coefficient solve of ``F*u + x**k*v*F**2 = x**d``.

    Independent of :func:`qfe_solve`; used as a cross-check.
    """
    us = series_of_ratfunc(q.u, order)
    vs = series_of_ratfunc(q.v, order)
    u0 = us[0]
    f: list[Fraction] = []
    sq: list[Fraction] = []  # coefficients of F**2, filled lazily
    for n in range(order + 1):
        rhs = Fraction(1 if n == q.d else 0)
        rhs -= sum((f[i] * us[n - i] for i in range(n)), Fraction(0))
        top = n - q.k
        while len(sq) <= top:
            m = len(sq)
            sq.append(sum((f[i] * f[m - i] for i in range(m + 1)), Fraction(0)))
        if top >= 0:
            rhs -= sum((vs[j] * sq[top - j] for j in range(top + 1)), Fraction(0))
        f.append(rhs / u0)
    return PowerSeries(f)


def plug_back_residual(q: Qfe, f: PowerSeries) -> PowerSeries:
    """``x**d - F*(u + x**k v F)`` truncated to the order of ``f``."""
    order = f.order
    us = series_of_ratfunc(q.u, order)
    vs = series_of_ratfunc(q.v, order)
    target = PowerSeries([0] * q.d + [1], order=order)
    return target - f * (us + vs.shift(q.k) * f)


@dataclass(frozen=True)
class EParams:
    """Parameters of ``E = a / (E x^2 (d x^2 - b x - 1) + c x^2 + b x + 1)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @property
    def a_hat(self) -> Fraction:
        return self.a - self.c


@dataclass(frozen=True)
class G2kParams:
    """Parameters of ``G = a / (1 + b1 x + b2 x^2 + c x^k G)``."""

    a: Fraction
    b1: Fraction
    b2: Fraction
    c: Fraction
    k: int

    def __post_init__(self):
        for name in ("a", "b1", "b2", "c"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


def build_e_qfe(p: EParams) -> Qfe:
    """Canonical equation whose solution is ``E`` itself.

    Dividing numerator and denominator by ``a`` turns the constant numerator
    into ``x**0``, so no separate scale factor is needed.
    """
    if p.a == 0:
        raise InvalidQfeError("E(x) needs a != 0")
    u = RationalFunction(Polynomial([1, p.b, p.c]) * (1 / p.a))
    v = RationalFunction(Polynomial([-1, -p.b, p.d]) * (1 / p.a))
    return Qfe(0, 2, u, v)


def build_g_qfe(g: G2kParams) -> Qfe:
    if g.a == 0 or g.b2 == 0 or g.c == 0:
        raise InvalidQfeError("G^{2,k} needs a, b2, c all nonzero")
    if g.k < 4:
        raise InvalidQfeError(f"G^{{2,k}} needs k >= 4, got {g.k}")
    u = RationalFunction(Polynomial([1, g.b1, g.b2]) * (1 / g.a))
    v = RationalFunction(g.c / g.a)
    return Qfe(0, g.k, u, v)
