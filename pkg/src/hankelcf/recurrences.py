"""The parameter recursion for E(x) and the B_n sequence.

Applying the transformation twice to

    E(x) = a / (E x^2 (d x^2 - b x - 1) + c x^2 + b x + 1)

gives an equation of the same shape with new parameters.  Iterating that map
yields ``H_n(E)`` as a product of the parameters, and the parameters
themselves are ratios of a second order linear recurrence ``B_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Scalar, as_fraction, quadext_eval
from .reports import CheckReport
from .series import EParams


class DegenerateRecursion(ArithmeticError):
    """``a_n - c_n = 0`` at ``index``: the two-step reduction no longer applies."""

    def __init__(self, index: int, message: str | None = None):
        super().__init__(message or f"a_{index} - c_{index} = 0")
        self.index = index


@dataclass(frozen=True)
class ERecState:
    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @property
    def a_hat(self) -> Fraction:
        return self.a - self.c

    @classmethod
    def initial(cls, p: EParams) -> ERecState:
        return cls(0, p.a, p.b, p.c, p.d)

    def params(self) -> EParams:
        return EParams(self.a, self.b, self.c, self.d)


def e_recursion_step(s: ERecState) -> ERecState:
    ah = s.a_hat
    if ah == 0:
        raise DegenerateRecursion(s.n)
    a, c, d = s.a, s.c, s.d
    return ERecState(s.n + 1,
                     (a * a - a * c - a * d) / ah,
                     s.b,
                     (a * c - 2 * a * d - c * c) / ah,
                     a * d / ah)


def e_states(p: EParams, count: int) -> list[ERecState]:
    """States ``0 .. count-1``, or fewer if the recursion hits ``a_n = c_n``."""
    out = [ERecState.initial(p)]
    while len(out) < count:
        if out[-1].a_hat == 0:
            break
        out.append(e_recursion_step(out[-1]))
    return out


def e_hankel_product(p: EParams, n: int) -> Fraction:
    """``H_n(E)`` as the product of recursion parameters.

    Raises :class:`DegenerateRecursion` if some ``a_k = c_k`` is met before
    the product is complete.
    """
    if n == 0:
        return Fraction(1)
    half, odd = divmod(n, 2)
    # H_{2m+1} uses a_0..a_m and a_hat_0..a_hat_{m-1}; H_{2m} uses indices < m.
    needed = half + 1 if odd else half
    states = e_states(p, needed)
    if len(states) < needed:
        raise DegenerateRecursion(len(states) - 1)
    result = Fraction(1)
    for i in range(half):
        s = states[i]
        e = n - 2 * i
        result *= s.a ** e * s.a_hat ** (e - 1)
    if odd:
        result *= states[half].a
    return result


@dataclass(frozen=True)
class BSeq:
    alpha: Fraction
    beta: Fraction
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        if n == -1:
            return b_minus_one(self.alpha, self.beta, self.values[1])
        return self.values[n]


def b_coefficients(p: EParams) -> tuple[Fraction, Fraction]:
    """``(alpha, beta) = (a(c + d - a), c - 2a)``."""
    return p.a * (p.c + p.d - p.a), p.c - 2 * p.a


def b_sequence(p: EParams, max_n: int) -> BSeq:
    """``B_0 .. B_max_n`` with ``B_0 = 1``, ``B_1 = c - a``."""
    alpha, beta = b_coefficients(p)
    vals = [Fraction(1), p.c - p.a]
    while len(vals) <= max_n:
        vals.append(beta * vals[-1] + alpha * vals[-2])
    return BSeq(alpha, beta, tuple(vals[: max(max_n, 1) + 1]))


def b_minus_one(alpha: Fraction, beta: Fraction, b1: Fraction) -> Fraction:
    """Run the recurrence one step backwards from ``B_0 = 1``."""
    if alpha == 0:
        raise ZeroDivisionError("B_{-1} is undefined when alpha = 0")
    return (b1 - beta) / alpha


def binet_eval(alpha: Scalar, beta: Scalar, f0: Scalar, f1: Scalar, n: int) -> Fraction:
    """``f_n`` for ``f_{m} = beta f_{m-1} + alpha f_{m-2}`` via the root formula.

    Works in Q(sqrt(beta^2 + 4 alpha)); the double-root case uses
    ``f_n = mu^(n-1) (n f_1 - mu (n-1) f_0)``.
    """
    if n < 0:
        raise ValueError("negative index")
    alpha, beta, f0, f1 = map(as_fraction, (alpha, beta, f0, f1))
    mu, gamma = quadext_eval(alpha, beta)
    if mu == gamma:
        if mu == 0:
            return [f0, f1][n] if n < 2 else Fraction(0)
        val = mu ** (n - 1) * (n * f1 - mu * (n - 1) * f0)
    else:
        val = (mu ** n * (f1 - f0 * gamma) - gamma ** n * (f1 - f0 * mu)) / (mu - gamma)
    assert val.is_rational(), "radical part failed to cancel"
    return val.rational


def theorem1_closed_form(p: EParams, n: int) -> Fraction:
    """``H_n(E)`` from the B_n closed form (valid when no H_m vanishes)."""
    m, odd = divmod(n, 2)
    s = p.c + p.d - p.a
    bm = b_sequence(p, m)[m]
    if odd:
        return p.a ** ((m + 1) ** 2) * s ** (m * m) * bm
    sign = -1 if m % 2 else 1
    return sign * p.a ** (m * (m + 1)) * s ** (m * (m - 1)) * bm


def is_nondegenerate(p: EParams, max_n: int) -> bool:
    """No ``B_m``, ``a_m`` or ``a_hat_m`` vanishes for ``m <= max_n``."""
    states = e_states(p, max_n + 1)
    if len(states) < max_n + 1:
        return False
    if any(s.a == 0 or s.a_hat == 0 for s in states):
        return False
    return all(b != 0 for b in b_sequence(p, max_n + 1).values)


def rec_a_invariants(p: EParams, max_n: int) -> CheckReport:
    """Check ``a_{n+1}(c_0 - 2a_0 + a_n) = a_0(c_0 + d_0 - a_0)`` and
    ``a_hat_{n+1} = -a_{n+1} + 2a_0 - c_0`` along the recursion."""
    rep = CheckReport("rec")
    states = e_states(p, max_n + 2)
    if len(states) < max_n + 2:
        rep.degenerate.append({"params": _pdict(p), "a_hat_zero_at": states[-1].n})
    a0, c0, d0 = p.a, p.c, p.d
    for s, nxt in zip(states, states[1:]):
        n = s.n
        if n > max_n:
            break
        inputs = {"params": _pdict(p), "n": n}
        rep.check("a_relation", inputs, a0 * (c0 + d0 - a0), nxt.a * (c0 - 2 * a0 + s.a))
        rep.check("a_hat_relation", inputs, -nxt.a + 2 * a0 - c0, nxt.a_hat)
    return rep


def b_duality_check(p: EParams, max_n: int) -> CheckReport:
    """``a_{n+1} B_{n+1} = alpha B_n`` and ``a_hat_{n+1} B_{n+1} = -B_{n+2}``."""
    rep = CheckReport("cor")
    states = e_states(p, max_n + 2)
    bs = b_sequence(p, max_n + 2)
    for s in states[1:]:
        n = s.n - 1
        if n > max_n:
            break
        inputs = {"params": _pdict(p), "n": n}
        rep.check("a_from_B", inputs, bs.alpha * bs[n], s.a * bs[n + 1])
        rep.check("a_hat_from_B", inputs, -bs[n + 2], s.a_hat * bs[n + 1])
    return rep


def _pdict(p: EParams) -> dict:
    return {"a": p.a, "b": p.b, "c": p.c, "d": p.d}
