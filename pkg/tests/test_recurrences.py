from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import nonzero_q, small_q
from hankelcf.closed_forms import oracle_table
from hankelcf.recurrences import (DegenerateRecursion, ERecState, b_minus_one, b_sequence,
                                  binet_eval, b_duality_check, e_hankel_product, e_recursion_step,
                                  e_states, is_nondegenerate, rec_a_invariants,
                                  theorem1_closed_form)
from hankelcf.series import EParams, build_e_qfe

FIB = EParams(1, 1, -1, 1)
eparams = st.builds(EParams, nonzero_q, small_q, small_q, small_q)


def unroll(alpha, beta, f0, f1, n):
    f = [f0, f1]
    while len(f) <= n:
        f.append(beta * f[-1] + alpha * f[-2])
    return f[n]


def test_first_step_fibonacci():
    s = e_recursion_step(ERecState.initial(FIB))
    assert (s.n, s.a, s.b, s.c, s.d) == (1, Fraction(1, 2), 1, -2, Fraction(1, 2))
    assert s.a_hat == s.a - s.c


def test_step_guard():
    with pytest.raises(DegenerateRecursion) as info:
        e_recursion_step(ERecState.initial(EParams(2, 1, 2, 1)))
    assert info.value.index == 0


def test_fixed_point_without_c_and_d():
    s = e_recursion_step(ERecState.initial(EParams(3, 5, 0, 0)))
    assert (s.a, s.c, s.d) == (3, 0, 0)


def test_states_stop_at_branch_point():
    states = e_states(EParams(2, 1, 2, 1), 5)
    assert len(states) == 1 and states[0].a_hat == 0


def test_product_fibonacci():
    assert [e_hankel_product(FIB, n) for n in range(8)] == [1, 1, 2, 2, 5, 5, 13, 13]


def test_product_reports_branch_point():
    with pytest.raises(DegenerateRecursion):
        e_hankel_product(EParams(2, 1, 2, 1), 3)
    # H_2 only needs state 0
    assert e_hankel_product(EParams(2, 1, 2, 1), 2) == oracle_table(build_e_qfe(EParams(2, 1, 2, 1)), 2)[2]


def test_product_zero_when_a_vanishes():
    p = EParams(1, 0, 2, -1)   # a_1 = (1 - 2 + 1) / (1 - 2) = 0
    assert e_states(p, 2)[1].a == 0
    assert e_hankel_product(p, 3) == 0 == oracle_table(build_e_qfe(p), 3)[3]


@given(eparams)
def test_product_matches_oracle(p):
    states = e_states(p, 7)
    assume(len(states) == 7)
    oracle = oracle_table(build_e_qfe(p), 10)
    assert [e_hankel_product(p, n) for n in range(11)] == oracle


def test_invariants_fibonacci():
    rep = rec_a_invariants(FIB, 20)
    assert rep.passed and len(rep.checks) == 42


def test_invariants_report_degeneracy():
    rep = rec_a_invariants(EParams(2, 0, 1, 1), 10)
    assert rep.passed
    assert rep.degenerate or len(rep.checks) == 22


def test_invariants_branch_immediately():
    rep = rec_a_invariants(EParams(2, 1, 2, 1), 5)
    assert rep.degenerate == [{"params": {"a": 2, "b": 1, "c": 2, "d": 1}, "a_hat_zero_at": 0}]
    assert rep.checks == []


def test_b_sequence_fibonacci():
    bs = b_sequence(FIB, 5)
    assert (bs.alpha, bs.beta) == (-1, -3)
    assert list(bs.values) == [1, -2, 5, -13, 34, -89]


def test_b_sequence_geometric_when_alpha_zero():
    p = EParams(2, 0, 3, -1)          # c + d - a = 0
    bs = b_sequence(p, 6)
    assert bs.alpha == 0
    assert all(bs[n + 1] == bs.beta * bs[n] for n in range(1, 6))
    with pytest.raises(ZeroDivisionError):
        b_minus_one(bs.alpha, bs.beta, bs[1])


def test_b_backward_step():
    bs = b_sequence(FIB, 3)
    assert bs.beta * bs[0] + bs.alpha * bs[-1] == bs[1]


@given(eparams)
def test_b_duality(p):
    assume(is_nondegenerate(p, 8))
    rep = b_duality_check(p, 6)
    assert rep.passed and len(rep.checks) == 14


def test_binet_fibonacci():
    assert binet_eval(1, 1, 0, 1, 10) == 55


def test_binet_double_root_constant():
    assert [binet_eval(-1, 2, 1, 1, n) for n in range(8)] == [1] * 8


def test_binet_zero_roots():
    assert [binet_eval(0, 0, 3, 5, n) for n in range(4)] == [3, 5, 0, 0]


@given(small_q, small_q, small_q, small_q, st.integers(0, 30))
def test_binet_matches_recurrence(alpha, beta, f0, f1, n):
    assert binet_eval(alpha, beta, f0, f1, n) == unroll(alpha, beta, f0, f1, n)


@given(small_q, small_q, small_q, st.integers(0, 30))
def test_binet_double_root_branch(beta, f0, f1, n):
    alpha = -beta * beta / 4
    assert binet_eval(alpha, beta, f0, f1, n) == unroll(alpha, beta, f0, f1, n)


@given(st.integers(-6, 6), st.integers(-6, 6), small_q, small_q, st.integers(0, 20))
def test_binet_square_discriminant(r, s, f0, f1, n):
    # roots r and s are rational
    alpha, beta = Fraction(-r * s), Fraction(r + s)
    assert binet_eval(alpha, beta, f0, f1, n) == unroll(alpha, beta, f0, f1, n)


def test_e_closed_form_fibonacci():
    assert [theorem1_closed_form(FIB, n) for n in range(8)] == [1, 1, 2, 2, 5, 5, 13, 13]


@given(eparams)
def test_e_closed_form_h0(p):
    assert theorem1_closed_form(p, 0) == 1


@given(eparams)
def test_dual_path(p):
    assume(is_nondegenerate(p, 8))
    oracle = oracle_table(build_e_qfe(p), 8)
    for n in range(9):
        assert theorem1_closed_form(p, n) == e_hankel_product(p, n) == oracle[n]


@given(eparams, small_q)
def test_b_does_not_matter(p, b2):
    other = EParams(p.a, b2, p.c, p.d)
    assert oracle_table(build_e_qfe(p), 8) == oracle_table(build_e_qfe(other), 8)
