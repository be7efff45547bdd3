"""Exact Hankel determinants for series defined by quadratic functional equations."""

from .cfrac import (DegenerateChainError, DetStep, Ledger, PeriodReport, periodicity_detect,
                    run_chain, run_shifts, tau_step, trace_from_json, trace_to_json)
from .exactnum import Polynomial, QuadExt, RationalFunction, X, format_rational
from .hankel import hankel_det, hankel_table
from .recurrences import (DegenerateRecursion, b_sequence, binet_eval, e_hankel_product,
                          e_states, theorem1_closed_form)
from .reports import CheckReport
from .series import (EParams, G2kParams, PowerSeries, Qfe, build_e_qfe, build_g_qfe,
                     qfe_solve, qfe_solve_direct)

__all__ = [
    "CheckReport", "DegenerateChainError", "DegenerateRecursion", "DetStep", "EParams",
    "G2kParams", "Ledger", "PeriodReport", "Polynomial", "PowerSeries", "QuadExt", "Qfe",
    "RationalFunction", "X", "b_sequence", "binet_eval", "build_e_qfe", "build_g_qfe",
    "e_hankel_product", "e_states", "format_rational", "hankel_det", "hankel_table",
    "periodicity_detect", "qfe_solve", "qfe_solve_direct", "run_chain", "run_shifts",
    "tau_step", "theorem1_closed_form", "trace_from_json", "trace_to_json",
]
