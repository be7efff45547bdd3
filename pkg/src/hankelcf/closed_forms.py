"""Closed forms for Hankel determinants of G^{2,k} and the chains behind them.

``G^{2,k}(x) = a / (1 + b1 x + b2 x^2 + c x^k G)``.  For ``k = 4`` two
transformation steps reduce it to the E(x) family; for ``k >= 5`` the chain is
shifted periodic through the family :func:`g1p_qfe`.

Where a printed formula and the composed transformation ledger disagree, both
are exposed: the ``*_printed`` helpers transcribe the formula as published and
the ledger-based evaluators carry the relation actually produced by the
transformation steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cfrac import (DegenerateChainError, Ledger, SCALED, normalize_qfe,
                    periodicity_detect, run_shifts)
from .exactnum import Polynomial, RationalFunction
from .hankel import hankel_table
from .recurrences import b_minus_one, b_sequence, e_hankel_product, e_states
from .reports import CheckReport
from .series import EParams, G2kParams, Qfe, build_e_qfe, build_g_qfe, qfe_solve


def _pm(e: int) -> int:
    return -1 if e % 2 else 1


def oracle_table(q: Qfe, max_n: int) -> list[Fraction]:
    """Brute-force ``H_0 .. H_max_n`` of the solution of ``q``."""
    return hankel_table(qfe_solve(q, max(2 * max_n - 2, 0)), max_n)


def _rf(*coeffs) -> RationalFunction:
    return RationalFunction(Polynomial(coeffs))


# ---------------------------------------------------------------------------
# k = 4

def g2_params(g: G2kParams) -> EParams:
    """E-family parameters of the function reached after two steps from G^{2,4}."""
    a, b1, b2, c = g.a, g.b1, g.b2, g.c
    return EParams(a * c / b2, b1, (2 * a * c + b2 * b2) / b2, -a * c / b2)


def g1_display_qfe(g: G2kParams) -> Qfe:
    """``G_1 = (-a c x^2 - b2 b1 x - b2) / (-G_1 x^2 - b2 x^2 + b1 x + 1)``."""
    return normalize_qfe(_rf(-g.b2, -g.b1 * g.b2, -g.a * g.c),
                         _rf(1, g.b1, -g.b2), _rf(-1), 2)


@dataclass
class G24Reduction:
    g1: Qfe
    g2: Qfe
    ledger: Ledger

    def factor(self, n: int) -> tuple[int, Fraction] | None:
        return self.ledger.eval(n)


def g24_reduction_chain(g: G2kParams) -> G24Reduction:
    """Two index-shifting steps from G^{2,4} (with any scaling steps between)."""
    trace, ledger = run_shifts(build_g_qfe(g), 2)
    shifted = [q for q, s in zip(trace[1:], ledger.steps) if s.case_tag != SCALED]
    return G24Reduction(shifted[0], shifted[1], ledger)


def g24_reduction_factor(g: G2kParams, n: int) -> Fraction:
    """``a^n (-b2)^(n-1)`` with ``H_n(G_0) = factor * H_{n-2}(G_2)`` for n >= 2."""
    return g.a ** n * (-g.b2) ** (n - 1)


def theorem2_closed_form(g: G2kParams, n: int) -> Fraction:
    """``H_n(G^{2,4})`` via ``B_{n-1}`` of the reduced parameters.

    ``B_{-1}`` is obtained by running the recurrence backwards, which gives
    ``1/b2`` and hence ``H_0 = 1`` and ``H_1 = a``.
    """
    if g.k != 4:
        raise ValueError("theorem2_closed_form needs k = 4")
    m, odd = divmod(n, 2)
    bs = b_sequence(g2_params(g), max(m - 1, 1))
    if m == 0:
        bprev = b_minus_one(bs.alpha, bs.beta, bs[1])
    else:
        bprev = bs[m - 1]
    ac = g.a * g.c
    if odd:
        return g.b2 * g.a ** (2 * m + 1) * ac ** (m * m) * bprev
    return _pm(m) * g.b2 * g.a ** (2 * m) * ac ** (m * (m - 1)) * bprev


def b_4ac_display(b2: Fraction, n: int) -> Fraction:
    """The printed value ``(1/2)(b2/2)^n + ((2n+2)/4)(b2/2)^n`` of the 4ac + b2^2 = 0 example."""
    h = b2 / 2
    return Fraction(1, 2) * h ** n + Fraction(2 * n + 2, 4) * h ** n


def example_4ac_closed_form(g: G2kParams, n: int, b_prev) -> Fraction:
    """``H_n(G^{2,4})`` under ``4ac + b2^2 = 0`` with ``b_prev(m)`` supplying ``B_{m-1}``."""
    m, odd = divmod(n, 2)
    q = -g.b2 * g.b2 / 4
    if odd:
        return g.b2 * g.a ** (2 * m + 1) * q ** (m * m) * b_prev(m)
    return _pm(m) * g.b2 * g.a ** (2 * m) * q ** (m * (m - 1)) * b_prev(m)


# ---------------------------------------------------------------------------
# k >= 5

def theorem3_signs(k: int, n: int, table: str = "printed") -> tuple[int, int, int, int]:
    """``(lambda1, lambda2, mu1, mu2)`` for block index ``n``.

    ``table="printed"`` is the published table; ``"chain"`` replaces ``mu1`` by
    ``(-1)^(n (C(k-3,2) + k))``, the sign obtained by composing the
    transformation steps (it differs from the printed one when k = 2, 3 mod 4).
    """
    r = k % 4
    if r in (0, 1):
        l1, m1, m2 = 1, 1, 1
    elif r == 2:
        l1 = _pm(n)
        m1 = m2 = _pm(n + k + 1)
    else:
        l1 = _pm(n)
        m1 = m2 = _pm(n + k)
    if table == "chain":
        m1 = _pm(n * (comb(k - 3, 2) + k))
    elif table != "printed":
        raise ValueError(f"unknown sign table {table!r}")
    return l1, -l1, m1, m2


def theorem3_closed_form(g: G2kParams, n: int, table: str = "printed") -> Fraction:
    """``H_n(G^{2,k})`` for ``k >= 5`` by the residue of ``n`` mod ``k``."""
    k = g.k
    if k < 5:
        raise ValueError("theorem3_closed_form needs k >= 5")
    a, b2, c = g.a, g.b2, g.c
    q, r = divmod(n, k)
    l1, l2, m1, m2 = theorem3_signs(k, q, table)
    base = k * q * (q + 1)
    if r == 0:
        e = k * q * (q - 1)
        return m1 * a ** (e + (2 * k - 1) * q) * c ** (e + (k - 1) * q)
    if r == 1:
        return l1 * a ** (base + q + 1) * c ** (base - (k - 1) * q)
    if r == 2:
        return l2 * (q + 1) * b2 * a ** (base + 3 * q + 2) * c ** (base - (k - 3) * q)
    if r == k - 1:
        return (m2 * (q + 1) * b2 * a ** (base + (2 * k - 3) * q + (2 * k - 4))
                * c ** (base + (k - 3) * q + (k - 3)))
    return Fraction(0)


def g1p_qfe(g: G2kParams, p: int) -> Qfe:
    """The shifted-periodic family member ``G_1^{(p)}``:

    (c a x^(k-2) + (p - p^2) b2^2 x^2 + p b1 b2 x + p b2) / (x^2 G + (2p-1) b2 x^2 - b1 x - 1)
    """
    a, b1, b2, c, k = g.a, g.b1, g.b2, g.c, g.k
    num = Polynomial([p * b2, p * b1 * b2, (p - p * p) * b2 * b2]) + Polynomial.monomial(k - 2, c * a)
    return normalize_qfe(RationalFunction(num), _rf(-1, -b1, (2 * p - 1) * b2), _rf(1), 2)


def recursion_sign(k: int, printed: bool = True) -> int:
    """Sign in ``H_n(G_1^{(p)}) = sign (ca)^(2n-k+1) H_{n-k}(G_1^{(p+1)})``.

    The printed sign is ``(-1)^(C(k-2,2) - k)``; composing the four step
    relations gives ``(-1)^(C(k-3,2) + k)``.  They agree for odd ``k``.
    """
    if printed:
        return _pm(comb(k - 2, 2) - k)
    return _pm(comb(k - 3, 2) + k)


def g1p_initial_values(g: G2kParams, p: int) -> list[Fraction]:
    """Printed ``H_0 .. H_{k-1}`` of ``G_1^{(p)}``."""
    k, b2, ca = g.k, g.b2, g.c * g.a
    vals = [Fraction(1), -p * b2] + [Fraction(0)] * (k - 4)
    vals.append(_pm(comb(k - 3, 2) + k - 2) * p * b2 * ca ** (k - 3))
    vals.append(_pm(comb(k - 3, 2) + k) * ca ** (k - 1))
    return vals


def g2k_chain(g: G2kParams, max_p: int, extra_n: int | None = None) -> CheckReport:
    """Walk the shifted-periodic chain ``G_1^{(p)} -> G_1^{(p+1)}`` for ``p = 1..max_p``.

    Checks, for each ``p``: four index-shifting steps land exactly on
    ``G_1^{(p+1)}``; the printed recursion factor and the ledger factor
    against brute-force determinants; the printed initial values of
    ``G_1^{(p+1)}``.  Also checks that the first shifting step from
    ``G^{2,k}`` itself reaches ``G_1^{(1)}``.
    """
    k = g.k
    if k < 5:
        raise ValueError("g2k_chain needs k >= 5")
    rep = CheckReport("g2k-chain")
    base_inputs = {"a": g.a, "b1": g.b1, "b2": g.b2, "c": g.c, "k": k}
    span = extra_n if extra_n is not None else 2 * k
    trace, ledger = run_shifts(build_g_qfe(g), 1)
    g11 = g1p_qfe(g, 1)
    rep.check("G0_to_G1(1)", base_inputs, True, trace[-1] == g11)
    h_g0 = oracle_table(build_g_qfe(g), span)
    h_cur = oracle_table(g11, span)
    for n in range(1, span + 1):
        rep.check("G0_first_step", {**base_inputs, "n": n},
                  g.a ** n * h_cur[n - 1], h_g0[n])
    for p in range(1, max_p + 1):
        cur = g1p_qfe(g, p)
        nxt = g1p_qfe(g, p + 1)
        inputs = {**base_inputs, "p": p}
        try:
            tr, led = run_shifts(cur, 4)
        except DegenerateChainError as exc:
            rep.check("tau4_chain", {**inputs, "step": exc.step_index}, "ok", str(exc))
            continue
        rep.check("tau4_lands_on_next", inputs, True, tr[-1] == nxt)
        rep.check("tau4_total_shift", inputs, k, led.total_shift)
        h_nxt = oracle_table(nxt, span)
        for n in range(k, span + 1):
            m, factor = led.eval(n)
            rep.check("ledger_factor", {**inputs, "n": n}, h_cur[n], factor * h_nxt[m])
            printed = recursion_sign(k) * (g.c * g.a) ** (2 * n - k + 1) * h_nxt[n - k]
            rep.check("printed_recursion_factor", {**inputs, "n": n}, h_cur[n], printed)
        init = g1p_initial_values(g, p + 1)
        for i, v in enumerate(init):
            rep.check("initial_value", {**inputs, "index": i}, v, h_nxt[i])
        h_cur = h_nxt
    return rep


# ---------------------------------------------------------------------------
# a = c branch of E(x)

def lemma2_display_qfes(p: EParams) -> dict[str, Qfe]:
    """Printed shapes ``F^1, F^2, F^3, E^1`` for ``E^0`` with ``a = c``."""
    a, b, d = p.a, p.b, p.d
    return {
        "F1": normalize_qfe(_rf(0, 0, a * d), _rf(-1, -b, a), _rf(1), 2),
        "F2": normalize_qfe(_rf(a * d), _rf(-1, -b, a), _rf(1), 4),
        "F3": normalize_qfe(_rf(-a, -a * d * b, a * d), _rf(-1, -b, -a), _rf(1), 2),
        "E1": build_e_qfe(lemma2_next_params(p)),
    }


def lemma2_next_params(p: EParams) -> EParams:
    """``E^1 = -d / ((d x^2 - b x - 1) x^2 E^1 - (a + 2d) x^2 + b x + 1)``."""
    return EParams(-p.d, p.b, -(p.a + 2 * p.d), p.d)


def lemma2_printed_factors(p: EParams, n: int) -> dict[str, tuple[int, Fraction]]:
    """Printed relations ``H_n(E^0) = factor * H_{n-s}(target)`` as ``{target: (s, factor)}``."""
    a, d = p.a, p.d
    out = {}
    if n >= 1:
        out["F1"] = (1, a ** n)
    if n >= 4:
        out["F2"] = (4, a ** n * (-a * d) ** (n - 1))
    if n >= 5:
        out["F3"] = (5, -a ** n * (a * d) ** (2 * n - 5))
    if n >= 6:
        out["E1"] = (6, -a ** (2 * n - 5) * (a * d) ** (2 * n - 5))
    return out


@dataclass
class Lemma2Result:
    values: list[Fraction]
    report: CheckReport


def e_hankel_values(p: EParams, max_n: int, depth: int = 0) -> list[Fraction]:
    """``H_0 .. H_max_n`` of E(x) through the parameter recursion.

    When the recursion stops at ``a_k = c_k`` the remaining indices come from
    ``H_n(E) = P_k(n) H_{n-2k}(E_k)`` with ``E_k`` handled by the four-step
    ``a = c`` reduction.  Brute-force determinants are used only where
    neither route applies (``d_k = 0``).
    """
    states = e_states(p, max_n // 2 + 2)
    k = states[-1].n
    if states[-1].a_hat != 0 or 2 * k + 1 >= max_n:
        return [e_hankel_product(p, n) for n in range(max_n + 1)]
    out = [e_hankel_product(p, n) for n in range(2 * k + 2)]
    ek = states[-1].params()
    rest = max_n - 2 * k
    if ek.a == 0:
        tail = [Fraction(1)] + [Fraction(0)] * rest
    elif ek.d != 0 and depth < 50:
        tail = lemma2_values(ek, rest, depth + 1)
    else:
        tail = oracle_table(build_e_qfe(ek), rest)
    for n in range(2 * k + 2, max_n + 1):
        prefix = Fraction(1)
        for s in states[:k]:
            e = n - 2 * s.n
            prefix *= s.a ** e * s.a_hat ** (e - 1)
        out.append(prefix * tail[n - 2 * k])
    return out


def lemma2_values(p: EParams, max_n: int, depth: int = 0) -> list[Fraction]:
    if p.a != p.c or p.a == 0 or p.d == 0:
        raise ValueError("the a = c branch needs a = c, a != 0, d != 0")
    trace, ledger = run_shifts(build_e_qfe(p), 4)
    small = oracle_table(build_e_qfe(p), min(max_n, 5))
    if max_n < 6:
        return small
    tail = e_hankel_values(lemma2_next_params(p), max_n - 6, depth)
    vals = list(small)
    for n in range(6, max_n + 1):
        m, factor = ledger.eval(n)
        vals.append(factor * tail[m])
    return vals


def lemma2_chain(p: EParams, max_n: int) -> Lemma2Result:
    """``H_0 .. H_max_n(E^0)`` for ``a = c`` plus a check report.

    Values for ``n >= 6`` come from the ledger of the four shifting steps
    composed with ``H_{n-6}(E^1)``.  The report compares those values, the
    intermediate displayed shapes, and the printed relations against
    brute-force determinants; printed relations that fail are recorded as
    discrepancies.
    """
    rep = CheckReport("lemma2")
    inputs = {"a": p.a, "b": p.b, "c": p.c, "d": p.d}
    vals = lemma2_values(p, max_n)
    oracle = oracle_table(build_e_qfe(p), max_n)
    for n in range(max_n + 1):
        rep.check("composed_value", {**inputs, "n": n}, oracle[n], vals[n])

    trace, ledger = run_shifts(build_e_qfe(p), 4)
    shifted = [q for q, s in zip(trace[1:], ledger.steps) if s.case_tag != SCALED]
    shapes = lemma2_display_qfes(p)
    rep.check("tau4_is_E1", inputs, True, shifted[3] == shapes["E1"])
    for name, q in zip(("F1", "F2", "F3"), shifted):
        rep.compare_printed(f"shape_{name}", inputs, True, q == shapes[name])

    tables = {name: oracle_table(q, max_n) for name, q in zip(("F1", "F2", "F3", "E1"), shifted)}
    for n in range(max_n + 1):
        for name, (s, factor) in lemma2_printed_factors(p, n).items():
            rep.compare_printed(f"printed_relation_{name}", {**inputs, "n": n},
                                oracle[n], factor * tables[name][n - s])
    return Lemma2Result(vals, rep)


# ---------------------------------------------------------------------------
# Examples with k ac + b2^2 = 0

def example2_closed_form(g: G2kParams, n: int) -> Fraction:
    """Period-6 formulas under ``ac + b2^2 = 0``."""
    a, b2 = g.a, g.b2
    q, r = divmod(n, 6)
    if r == 0:
        return a ** (6 * q) * b2 ** (18 * q * q - 3 * q)
    if r == 1:
        return a ** (6 * q + 1) * b2 ** (18 * q * q + 3 * q)
    if r == 2:
        return -a ** (6 * q + 2) * b2 ** (18 * q * q + 9 * q + 1)
    if r == 3:
        return -a ** (6 * q + 3) * b2 ** (18 * q * q + 15 * q + 3)
    return Fraction(0)


def example3_printed_factor(b2: Fraction, k: int) -> Fraction:
    """Printed ``H_k(G_2) = (1/2)^(6k-19) b2^(8k-28) H_{k-8}(G_2)`` factor."""
    return Fraction(1, 2) ** (6 * k - 19) * b2 ** (8 * k - 28)


_EXAMPLE_CONSTRAINT = {"ex2_ac": 1, "ex3_2ac": 2, "ex4_3ac": 3}


def example_params(which: str, a, b1, b2) -> G2kParams:
    """G^{2,4} parameters with ``c`` solved from ``m ac + b2^2 = 0``."""
    m = _EXAMPLE_CONSTRAINT[which]
    a, b2 = Fraction(a), Fraction(b2)
    return G2kParams(a, Fraction(b1), b2, -b2 * b2 / (m * a), 4)


def example_suite(which: str, g: G2kParams, max_n: int | None = None) -> CheckReport:
    if which not in _EXAMPLE_CONSTRAINT:
        raise ValueError(f"unknown example {which!r}")
    m = _EXAMPLE_CONSTRAINT[which]
    if g.k != 4 or m * g.a * g.c + g.b2 * g.b2 != 0:
        raise ValueError(f"{which} needs k = 4 and {m}ac + b2^2 = 0")
    rep = CheckReport(which)
    inputs = {"a": g.a, "b1": g.b1, "b2": g.b2, "c": g.c}
    red = g24_reduction_chain(g)

    if which == "ex2_ac":
        top = 17 if max_n is None else max_n
        h = oracle_table(build_g_qfe(g), top)
        for n in range(top + 1):
            rep.check("residue_formula", {**inputs, "n": n}, example2_closed_form(g, n), h[n])
        tr, led = run_shifts(red.g2, 4)
        rep.check("period_4_shifts_returns_to_G2", inputs, True, tr[-1] == red.g2)

    elif which == "ex3_2ac":
        top = 14 if max_n is None else max_n
        h2 = oracle_table(red.g2, top)
        rep.notes.append("initial values H_0..H_7(G_2): "
                         + ", ".join(str(v) for v in h2[:8]))
        for kk in range(8, top + 1):
            rep.check("order8_printed_relation", {**inputs, "k": kk},
                      h2[kk], example3_printed_factor(g.b2, kk) * h2[kk - 8])
        tr, led = run_shifts(red.g2, 6)
        rep.check("period_6_shifts_returns_to_G2", inputs, True, tr[-1] == red.g2)
        for kk in range(8, top + 1):
            mm, factor = led.eval(kk)
            rep.check("order8_ledger_relation", {**inputs, "k": kk}, h2[kk], factor * h2[mm])

    else:
        top = 35 if max_n is None else max_n
        h = oracle_table(build_g_qfe(g), top)
        zeros = [n for n, v in enumerate(h) if v == 0]
        rep.notes.append(f"zero positions: {zeros}")
        for n in range(top + 1 - 12):
            rep.check("period_12_zero_pattern", {**inputs, "n": n},
                      h[n] == 0, h[n + 12] == 0)
        for start in range(0, top + 1 - 11, 12):
            rep.check("two_zeros_per_period", {**inputs, "block": start // 12}, 2,
                      sum(1 for n in range(start, start + 12) if h[n] == 0))
        tr, led = run_shifts(red.g2, 10)
        rep.check("period_10_shifts_returns_to_G2", inputs, True,
                  periodicity_detect(tr, led).found and tr[-1] == red.g2)
    return rep
