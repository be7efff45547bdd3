"""The quadratic transformation on functional equations.

Each :func:`tau_step` maps a canonical :class:`~hankelcf.series.Qfe` to another
one and records how the Hankel determinants of the two solutions are related.
A :class:`Ledger` composes those relations along a chain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactnum import Polynomial, RationalFunction, format_rational
from .series import InvalidQfeError, Qfe, series_of_ratfunc

SCALED = "scaled"
SHIFT_K1 = "shift_k1"
SHIFT_KGE2 = "shift_kge2"

TRACE_SCHEMA_VERSION = 1


class DegenerateChainError(ArithmeticError):
    """A transformation produced an equation whose solution is zero or not a series.

    ``ledger`` and ``trace`` hold the chain up to the failing step.
    """

    def __init__(self, message: str, step_index: int | None = None,
                 trace: list[Qfe] | None = None, ledger: Ledger | None = None):
        super().__init__(message)
        self.step_index = step_index
        self.trace = trace or []
        self.ledger = ledger


@dataclass(frozen=True)
class UDecomposition:
    low: Polynomial
    high: RationalFunction


@dataclass(frozen=True)
class DetStep:
    """Hankel relation of one transformation step.

    ``scaled``: ``H_n(G) = base**n * H_n(F)``.
    ``shift_*``: ``H_{n-shift}(G) = sign * H_n(F)`` for ``n >= shift``.
    """

    case_tag: str
    shift: int
    base: Fraction = Fraction(1)
    sign: int = 1

    def apply(self, n: int) -> tuple[int, Fraction] | None:
        """Rewrite ``H_n(F)`` as ``factor * H_m(G)``; ``None`` if ``n`` is too small."""
        if self.case_tag == SCALED:
            return n, 1 / self.base ** n
        if n < self.shift:
            return None
        return n - self.shift, Fraction(self.sign)


@dataclass
class Ledger:
    steps: list[DetStep] = field(default_factory=list)

    def append(self, step: DetStep) -> None:
        self.steps.append(step)

    @property
    def total_shift(self) -> int:
        return sum(s.shift for s in self.steps)

    def eval(self, n: int) -> tuple[int, Fraction] | None:
        """``(m, factor)`` with ``H_n(first) = factor * H_m(last)``."""
        m, factor = n, Fraction(1)
        for step in self.steps:
            res = step.apply(m)
            if res is None:
                return None
            m, f = res
            factor *= f
        return m, factor


def decompose_u(u: RationalFunction, d: int) -> UDecomposition:
    """Split ``u = u_L + x**(d+2) u_H`` with ``deg u_L <= d+1``."""
    ser = series_of_ratfunc(u, d + 1)
    low = Polynomial(ser.coeffs)
    rest = u.num - low * u.den
    assert all(rest[i] == 0 for i in range(d + 2)), "u_L does not match u to order d+1"
    high = RationalFunction(rest.shift(-(d + 2)), u.den)
    return UDecomposition(low, high)


def normalize_qfe(num: RationalFunction, den_static: RationalFunction,
                  g_coeff: RationalFunction, m: int) -> Qfe:
    """Canonical form of ``G = num / (den_static + x**m * g_coeff * G)``."""
    if num.is_zero():
        raise DegenerateChainError("numerator vanishes identically; solution is 0")
    if g_coeff.is_zero():
        raise DegenerateChainError("quadratic term vanishes; solution is rational")
    d = num.valuation()
    core = num.shift(-d)
    e = g_coeff.valuation()
    try:
        u = den_static / core
        v = g_coeff.shift(-e) / core
        return Qfe(d, m + e, u, v)
    except InvalidQfeError as exc:
        raise DegenerateChainError(str(exc)) from exc


def _sign(d: int) -> int:
    return -1 if comb(d + 1, 2) % 2 else 1


def tau_step(q: Qfe) -> tuple[Qfe, DetStep]:
    u0 = q.u.at_zero()
    if u0 != 1:
        q2 = Qfe(q.d, q.k, q.u * (1 / u0), q.v * (1 / (u0 * u0)))
        return q2, DetStep(SCALED, 0, base=u0)

    parts = decompose_u(q.u, q.d)
    low = RationalFunction(parts.low)
    high = parts.high
    den_static = low - high.shift(q.d + 2)
    minus_one = RationalFunction(-1)
    step_sign = _sign(q.d)
    if q.k == 1:
        # G = (-v - x u_L u_H) / (u_L - x^{d+2} u_H - x^{d+1} G); the result is
        # tau(F) = (G - G(0)) / x, whose equation is rebuilt below.
        num = -q.v - (low * high).shift(1)
        m = q.d + 1
        g0 = num.at_zero()
        num_t = (num - den_static * g0 + RationalFunction(Polynomial.monomial(m, g0 * g0)))
        num_t = num_t.shift(-1)
        den_t = den_static - RationalFunction(Polynomial.monomial(m, 2 * g0))
        q2 = normalize_qfe(num_t, den_t, minus_one, m + 1)
        return q2, DetStep(SHIFT_K1, q.d + 1, sign=step_sign)

    num = -q.v.shift(q.k - 2) - low * high
    q2 = normalize_qfe(num, den_static, minus_one, q.d + 2)
    return q2, DetStep(SHIFT_KGE2, q.d + 1, sign=step_sign)


def run_chain(q0: Qfe, steps: int) -> tuple[list[Qfe], Ledger]:
    """Apply :func:`tau_step` ``steps`` times.

    Raises :class:`DegenerateChainError` carrying the partial trace and ledger.
    """
    trace, ledger = [q0], Ledger()
    for i in range(steps):
        try:
            q, step = tau_step(trace[-1])
        except DegenerateChainError as exc:
            raise DegenerateChainError(f"step {i}: {exc}", i, trace, ledger) from exc
        trace.append(q)
        ledger.append(step)
    return trace, ledger


def run_shifts(q0: Qfe, shifts: int, max_steps: int = 10_000) -> tuple[list[Qfe], Ledger]:
    """Run until ``shifts`` index-shifting steps have been applied.

    Scaling steps are interleaved as needed; the trace ends right after the
    last shifting step.
    """
    trace, ledger = [q0], Ledger()
    done = 0
    i = 0
    while done < shifts:
        if i >= max_steps:
            raise RuntimeError("step limit reached")
        try:
            q, step = tau_step(trace[-1])
        except DegenerateChainError as exc:
            raise DegenerateChainError(f"step {i}: {exc}", i, trace, ledger) from exc
        trace.append(q)
        ledger.append(step)
        if step.case_tag != SCALED:
            done += 1
        i += 1
    return trace, ledger


@dataclass(frozen=True)
class PeriodReport:
    start: int | None
    period: int | None
    shifting_steps: int | None = None

    @property
    def found(self) -> bool:
        return self.period is not None


def periodicity_detect(trace: list[Qfe], ledger: Ledger | None = None) -> PeriodReport:
    """Least ``(start, period)`` with ``trace[start + period] == trace[start]``.

    Minimal in ``start + period`` first, then in ``start``.  When ``ledger`` is
    given the number of index-shifting steps inside one period is reported too.
    """
    first_seen: dict[Qfe, int] = {}
    for j, q in enumerate(trace):
        if q in first_seen:
            i = first_seen[q]
            shifting = None
            if ledger is not None:
                shifting = sum(1 for s in ledger.steps[i:j] if s.case_tag != SCALED)
            return PeriodReport(i, j - i, shifting)
        first_seen[q] = j
    return PeriodReport(None, None)


def _rat_list(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def qfe_to_dict(q: Qfe) -> dict:
    return {
        "d": q.d,
        "k": q.k,
        "u": {"num": _rat_list(q.u.num), "den": _rat_list(q.u.den)},
        "v": {"num": _rat_list(q.v.num), "den": _rat_list(q.v.den)},
    }


def qfe_from_dict(obj: dict) -> Qfe:
    def rf(o):
        return RationalFunction(Polynomial(Fraction(c) for c in o["num"]),
                                Polynomial(Fraction(c) for c in o["den"]))
    return Qfe(int(obj["d"]), int(obj["k"]), rf(obj["u"]), rf(obj["v"]))


def step_to_dict(s: DetStep) -> dict:
    return {"case_tag": s.case_tag, "shift": s.shift,
            "base": format_rational(s.base), "sign": s.sign}


def step_from_dict(obj: dict) -> DetStep:
    return DetStep(obj["case_tag"], int(obj["shift"]), Fraction(obj["base"]), int(obj["sign"]))


def trace_to_json(trace: list[Qfe], ledger: Ledger, extra: dict | None = None) -> str:
    """Serialise a chain.  Every rational is a ``"num/den"`` string."""
    doc = {
        "schema_version": TRACE_SCHEMA_VERSION,
        "trace": [qfe_to_dict(q) for q in trace],
        "steps": [step_to_dict(s) for s in ledger.steps],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True)


def trace_from_json(text: str) -> tuple[list[Qfe], Ledger]:
    doc = json.loads(text)
    if doc.get("schema_version") != TRACE_SCHEMA_VERSION:
        raise ValueError(f"unsupported trace schema {doc.get('schema_version')!r}")
    trace = [qfe_from_dict(o) for o in doc["trace"]]
    return trace, Ledger([step_from_dict(o) for o in doc["steps"]])
