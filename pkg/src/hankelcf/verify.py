"""Randomised verification suites.

Every suite draws parameters per trial from ``random.Random(f"{seed}:{suite}:{trial}")``
so results do not depend on the order in which trials are evaluated.  Rational
parameters have numerators in [-9, 9] \\ {0} and denominators in [1, 4];
samples violating a theorem's nonvanishing hypotheses are redrawn (at most
1000 times per trial).
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from .cfrac import DegenerateChainError, tau_step
from .exactnum import Polynomial, RationalFunction
from .hankel import hankel_table
from .recurrences import (b_duality_check, e_hankel_product, is_nondegenerate,
                          rec_a_invariants, theorem1_closed_form)
from .reports import CheckReport
from .series import EParams, G2kParams, InvalidQfeError, Qfe, build_e_qfe, build_g_qfe, qfe_solve

DEFAULT_SEED = 20240917
MAX_RESAMPLE = 1000

_NUMERATORS = [i for i in range(-9, 10) if i]


class ResampleLimit(RuntimeError):
    pass


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMERATORS), rng.randint(1, 4))


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{trial}")


def _resample(rng: random.Random, draw: Callable, ok: Callable):
    for _ in range(MAX_RESAMPLE):
        sample = draw(rng)
        if ok(sample):
            return sample
    raise ResampleLimit("no admissible sample within the resampling cap")


def _eparams(rng) -> EParams:
    return EParams(*(random_rational(rng) for _ in range(4)))


def _g2k(rng, k: int) -> G2kParams:
    return G2kParams(*(random_rational(rng) for _ in range(4)), k)


def _pd(p) -> dict:
    if isinstance(p, EParams):
        return {"a": p.a, "b": p.b, "c": p.c, "d": p.d}
    return {"a": p.a, "b1": p.b1, "b2": p.b2, "c": p.c, "k": p.k}


@dataclass(frozen=True)
class SuiteConfig:
    trials: int = 20
    max_n: int = 12
    seed: int = DEFAULT_SEED
    k: int = 5
    max_p: int = 3
    sign_table: str = "printed"

    def as_dict(self) -> dict:
        return {"trials": self.trials, "max_n": self.max_n, "seed": self.seed,
                "k": self.k, "max_p": self.max_p, "sign_table": self.sign_table}


# --- per-trial checks -------------------------------------------------------

def trial_theorem1(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "theorem1", t)
    p = _resample(rng, _eparams, lambda p: is_nondegenerate(p, cfg.max_n))
    rep = CheckReport("theorem1")
    oracle = hankel_table(qfe_solve(build_e_qfe(p), max(2 * cfg.max_n - 2, 0)), cfg.max_n)
    for n in range(cfg.max_n + 1):
        inputs = {"trial": t, "params": _pd(p), "n": n}
        rep.check("closed_form_vs_oracle", inputs, oracle[n], theorem1_closed_form(p, n))
        rep.check("product_vs_oracle", inputs, oracle[n], e_hankel_product(p, n))
    return rep


def trial_rec(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "rec", t)
    p = _resample(rng, _eparams, lambda p: is_nondegenerate(p, cfg.max_n + 2))
    rep = rec_a_invariants(p, cfg.max_n)
    rep.name = "rec"
    return rep


def trial_cor(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "cor", t)
    p = _resample(rng, _eparams, lambda p: is_nondegenerate(p, cfg.max_n + 2))
    return b_duality_check(p, cfg.max_n)


def random_qfe(rng: random.Random, case: int) -> Qfe:
    """A random valid equation that falls in transformation case ``case`` (1, 2 or 3)."""
    while True:
        d = rng.randint(0, 3)
        k = 1 if case == 2 else rng.randint(1, 4) if case == 1 else rng.randint(2, 4)
        u_num = [random_rational(rng) for _ in range(rng.randint(1, 4))]
        u_den = [1] + [random_rational(rng) for _ in range(rng.randint(0, 2))]
        v_num = [random_rational(rng) for _ in range(rng.randint(1, 3))]
        v_den = [1] + [random_rational(rng) for _ in range(rng.randint(0, 1))]
        if case in (2, 3):
            u_num[0] = Fraction(1)
        try:
            q = Qfe(d, k, RationalFunction(Polynomial(u_num), Polynomial(u_den)),
                    RationalFunction(Polynomial(v_num), Polynomial(v_den)))
        except (InvalidQfeError, ArithmeticError, ValueError):
            continue
        if (q.u.at_zero() == 1) == (case == 1):
            continue
        return q


def trial_tau(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "tau", t)
    case = 1 + t % 3
    rep = CheckReport("tau")
    n_max = min(cfg.max_n, 10)
    for _ in range(MAX_RESAMPLE):
        q = random_qfe(rng, case)
        try:
            q2, step = tau_step(q)
        except DegenerateChainError:
            continue
        break
    else:
        raise ResampleLimit("no non-degenerate equation found")
    h1 = hankel_table(qfe_solve(q, 2 * n_max), n_max)
    h2 = hankel_table(qfe_solve(q2, 2 * n_max), n_max)
    for n in range(n_max + 1):
        res = step.apply(n)
        if res is None:
            continue
        m, factor = res
        rep.check(f"step_relation_{step.case_tag}",
                  {"trial": t, "d": q.d, "k": q.k, "u": str(q.u), "v": str(q.v), "n": n},
                  h1[n], factor * h2[m])
    return rep


def _g24_ok(g: G2kParams, max_n: int) -> bool:
    if g.c == 0 or g.b2 == 0:
        return False
    return is_nondegenerate(cf.g2_params(g), max_n)


def trial_theorem2(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "theorem2", t)
    g = _resample(rng, lambda r: _g2k(r, 4), lambda g: _g24_ok(g, cfg.max_n))
    rep = CheckReport("theorem2")
    oracle = cf.oracle_table(build_g_qfe(g), cfg.max_n)
    for n in range(cfg.max_n + 1):
        rep.check("closed_form_vs_oracle", {"trial": t, "params": _pd(g), "n": n},
                  oracle[n], cf.theorem2_closed_form(g, n))
    return rep


def trial_theorem3(cfg: SuiteConfig, t: int) -> CheckReport:
    k, table = cfg.k, cfg.sign_table
    rng = trial_rng(cfg.seed, f"theorem3-k{k}", t)
    g = _resample(rng, lambda r: _g2k(r, k), lambda g: g.b2 != 0 and g.c != 0)
    rep = CheckReport("theorem3")
    top = 2 * k + 2
    oracle = cf.oracle_table(build_g_qfe(g), top)
    for n in range(top + 1):
        rep.check(f"closed_form_vs_oracle[{table}]", {"trial": t, "params": _pd(g), "n": n},
                  oracle[n], cf.theorem3_closed_form(g, n, table))
    return rep


def trial_lemma2(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "lemma2", t)
    a, b, d = _resample(rng, lambda r: tuple(random_rational(r) for _ in range(3)),
                        lambda s: s[0] != 0 and s[2] != 0)
    return cf.lemma2_chain(EParams(a, b, a, d), cfg.max_n).report


def trial_b_independence(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "b-independence", t)
    p = _resample(rng, _eparams, lambda p: p.a != 0)
    b2 = _resample(rng, random_rational, lambda b: b != p.b)
    q = EParams(p.a, b2, p.c, p.d)
    rep = CheckReport("b-independence")
    h1 = cf.oracle_table(build_e_qfe(p), cfg.max_n)
    h2 = cf.oracle_table(build_e_qfe(q), cfg.max_n)
    for n in range(cfg.max_n + 1):
        rep.check("same_table", {"trial": t, "params": _pd(p), "b_other": b2, "n": n},
                  h1[n], h2[n])
    return rep


def trial_g2k_chain(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, f"g2k-chain-k{cfg.k}", t)
    g = _resample(rng, lambda r: _g2k(r, cfg.k), lambda g: g.b2 != 0 and g.c != 0)
    return cf.g2k_chain(g, cfg.max_p)


def trial_examples(cfg: SuiteConfig, t: int) -> CheckReport:
    rng = trial_rng(cfg.seed, "examples", t)
    rep = CheckReport("examples")
    a, b1, b2 = _resample(rng, lambda r: tuple(random_rational(r) for _ in range(3)),
                          lambda s: s[0] != 0 and s[2] != 0)
    for which in ("ex2_ac", "ex3_2ac", "ex4_3ac"):
        rep.extend(cf.example_suite(which, cf.example_params(which, a, b1, b2)))
    return rep


SUITES: dict[str, Callable[[SuiteConfig, int], CheckReport]] = {
    "theorem1": trial_theorem1,
    "rec": trial_rec,
    "cor": trial_cor,
    "tau": trial_tau,
    "theorem2": trial_theorem2,
    "theorem3": trial_theorem3,
    "lemma2": trial_lemma2,
    "b-independence": trial_b_independence,
    "g2k-chain": trial_g2k_chain,
    "examples": trial_examples,
}


def _run_one(args):
    suite, cfg, t = args
    return SUITES[suite](cfg, t)


def run_suite(suite: str, cfg: SuiteConfig, jobs: int = 1) -> CheckReport:
    """Run ``cfg.trials`` trials of ``suite`` and merge them in trial order."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    work = [(suite, cfg, t) for t in range(cfg.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_one, work))
    else:
        parts = [_run_one(w) for w in work]
    rep = CheckReport(suite)
    for part in parts:
        rep.extend(part)
    return rep

