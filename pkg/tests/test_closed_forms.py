from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import nonzero_q, small_q
from hankelcf import closed_forms as cf
from hankelcf.recurrences import b_sequence
from hankelcf.series import EParams, G2kParams, build_e_qfe, build_g_qfe

g_params = st.builds(G2kParams, nonzero_q, small_q, nonzero_q, nonzero_q, st.just(4))


def g_k(k):
    return st.builds(G2kParams, nonzero_q, small_q, nonzero_q, nonzero_q, st.just(k))


# --- k = 4 ------------------------------------------------------------------

def test_reduction_lands_on_e_family():
    g = G2kParams(1, 1, 1, 1, 4)
    red = cf.g24_reduction_chain(g)
    assert red.g2 == build_e_qfe(cf.g2_params(g))
    assert red.g1 == cf.g1_display_qfe(g)
    assert cf.g2_params(g) == EParams(1, 1, 3, -1)


@given(g_params)
def test_g24_closed_form(g):
    oracle = cf.oracle_table(build_g_qfe(g), 10)
    assert [cf.theorem2_closed_form(g, n) for n in range(11)] == oracle


def test_g24_closed_form_small_n():
    g = G2kParams(3, 2, 5, 7, 4)
    assert cf.theorem2_closed_form(g, 0) == 1
    assert cf.theorem2_closed_form(g, 1) == g.a


def test_4ac_display_is_b_n():
    b2 = Fraction(3)
    g = G2kParams(1, 1, b2, -b2 * b2 / 4, 4)
    bs = b_sequence(cf.g2_params(g), 8)
    assert all(cf.b_4ac_display(b2, n) == bs[n] for n in range(8))
    # as B_{n-1} the display is off by one index
    assert cf.b_4ac_display(b2, 1) != bs[0]


def test_4ac_closed_form_with_b_n_minus_1():
    g = G2kParams(1, 1, 1, Fraction(-1, 4), 4)
    bs = b_sequence(cf.g2_params(g), 6)
    oracle = cf.oracle_table(build_g_qfe(g), 10)
    got = [cf.example_4ac_closed_form(g, n, lambda m: bs[m - 1]) for n in range(11)]
    assert got == oracle
    printed = [cf.example_4ac_closed_form(g, n, lambda m: cf.b_4ac_display(g.b2, m - 1))
               for n in range(2, 11)]
    assert printed == oracle[2:]


def test_g24_closed_form_needs_k4():
    with pytest.raises(ValueError):
        cf.theorem2_closed_form(G2kParams(1, 1, 1, 1, 5), 2)


# --- k >= 5 -----------------------------------------------------------------

def test_g2k_closed_form_unit_parameters():
    g = G2kParams(1, 1, 1, 1, 5)
    assert [cf.theorem3_closed_form(g, n) for n in range(5)] == [1, 1, -1, 0, 1]


@pytest.mark.parametrize("k", [5, 8, 9])
def test_printed_sign_table_holds_for_k_0_1_mod_4(k):
    g = G2kParams(Fraction(3, 2), -2, Fraction(1, 3), -5, k)
    oracle = cf.oracle_table(build_g_qfe(g), 2 * k + 2)
    assert [cf.theorem3_closed_form(g, n) for n in range(2 * k + 3)] == oracle


@pytest.mark.parametrize("k", [6, 7])
def test_printed_mu1_fails_for_k_2_3_mod_4(k):
    g = G2kParams(Fraction(3, 2), -2, Fraction(1, 3), -5, k)
    oracle = cf.oracle_table(build_g_qfe(g), 2 * k + 2)
    bad = [n for n in range(2 * k + 3) if cf.theorem3_closed_form(g, n) != oracle[n]]
    assert bad == [0, k, 2 * k]
    assert cf.theorem3_closed_form(g, 0) == -1


@pytest.mark.parametrize("k", [5, 6, 7, 8, 9])
@settings(max_examples=25)
@given(data=st.data())
def test_g2k_chain_sign_table(k, data):
    g = data.draw(g_k(k))
    oracle = cf.oracle_table(build_g_qfe(g), 2 * k + 2)
    assert [cf.theorem3_closed_form(g, n, "chain") for n in range(2 * k + 3)] == oracle


@pytest.mark.parametrize("k", [5, 6, 7])
@settings(max_examples=25)
@given(data=st.data())
def test_zero_runs(k, data):
    g = data.draw(g_k(k))
    oracle = cf.oracle_table(build_g_qfe(g), 3 * k - 1)
    for q in range(3):
        assert all(oracle[k * q + j] == 0 for j in range(3, k - 1))


@pytest.mark.parametrize("k", [5, 6, 7, 8, 9])
@settings(max_examples=25)
@given(data=st.data())
def test_sign_laws(k, data):
    g = data.draw(g_k(k))
    a, b2, c = g.a, g.b2, g.c
    oracle = cf.oracle_table(build_g_qfe(g), 3 * k - 1)
    for q in range(3):
        l1, _, _, m2 = cf.theorem3_signs(k, q)
        base = k * q * (q + 1)
        assert oracle[k * q + 1] == l1 * a ** (base + q + 1) * c ** (base - (k - 1) * q)
        assert oracle[k * q + k - 1] == (m2 * (q + 1) * b2 * a ** (base + (2 * k - 3) * q + 2 * k - 4)
                                         * c ** (base + (k - 3) * q + k - 3))


def test_sign_table_rejects_unknown():
    with pytest.raises(ValueError):
        cf.theorem3_signs(5, 0, "other")


@pytest.mark.parametrize("k", [5, 6, 7, 8])
def test_g2k_chain_structure(k):
    g = G2kParams(2, Fraction(1, 2), -1, 3, k)
    rep = cf.g2k_chain(g, 3)
    failing = {c.name for c in rep.failures}
    assert failing <= {"printed_recursion_factor"}
    assert ("printed_recursion_factor" in failing) == (k % 2 == 0)


def test_recursion_signs():
    for k in range(5, 14):
        assert (cf.recursion_sign(k) == cf.recursion_sign(k, printed=False)) == (k % 2 == 1)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_g1p_h1(p):
    g = G2kParams(Fraction(1, 3), 2, Fraction(5, 2), -1, 6)
    h = cf.oracle_table(cf.g1p_qfe(g, p), 5)
    assert h[1] == -p * g.b2
    assert h[2:4] == [0, 0]
    assert h == cf.g1p_initial_values(g, p)


# --- a = c ------------------------------------------------------------------

@pytest.mark.parametrize("p", [EParams(1, 1, 1, 1), EParams(2, 0, 2, 1),
                               EParams(Fraction(-3, 2), 4, Fraction(-3, 2), Fraction(1, 4))])
def test_a_equals_c_chain(p):
    res = cf.lemma2_chain(p, 12)
    assert res.report.passed
    assert res.values == cf.oracle_table(build_e_qfe(p), 12)


def test_a_equals_c_printed_relations():
    p = EParams(2, 3, 2, 5)
    res = cf.lemma2_chain(p, 10)
    names = {c.name for c in res.report.discrepancies}
    assert "printed_relation_F1" not in names
    assert {"printed_relation_F2", "printed_relation_F3", "printed_relation_E1"} <= names
    # each failing printed relation is off by exactly a sign
    for c in res.report.discrepancies:
        if c.name.startswith("printed_relation"):
            assert c.expected == -c.actual


def test_a_equals_c_third_shape_only_when_d_is_one():
    for d, ok in ((1, True), (3, False)):
        res = cf.lemma2_chain(EParams(2, 1, 2, d), 6)
        assert ("shape_F3" in {c.name for c in res.report.discrepancies}) != ok


def test_a_equals_c_rejects_other_branch():
    with pytest.raises(ValueError):
        cf.lemma2_values(EParams(2, 1, 3, 1), 8)


def test_e_values_through_branch_point():
    # (a - c)^2 = -a d makes a_1 = c_1: the recursion hands over to the a = c reduction
    p = EParams(1, 1, 3, -4)
    states = cf.e_states(p, 5)
    assert len(states) == 2 and states[1].a_hat == 0
    assert cf.e_hankel_values(p, 14) == cf.oracle_table(build_e_qfe(p), 14)


def test_a_equals_c_next_params():
    assert cf.lemma2_next_params(EParams(1, 2, 1, 3)) == EParams(-3, 2, -7, 3)


# --- examples ---------------------------------------------------------------

def test_ac_constraint_unit_values():
    g = cf.example_params("ex2_ac", 1, 1, 1)
    assert g.c == -1
    h = cf.oracle_table(build_g_qfe(g), 6)
    assert h[4] == h[5] == 0 and h[6] == g.a ** 6 * g.b2 ** 15


@settings(max_examples=25)
@given(nonzero_q, small_q, nonzero_q)
def test_ac_constraint_suite(a, b1, b2):
    assert cf.example_suite("ex2_ac", cf.example_params("ex2_ac", a, b1, b2)).passed


def test_2ac_printed_relation_fails_ledger_holds():
    g = cf.example_params("ex3_2ac", 1, 1, 1)
    rep = cf.example_suite("ex3_2ac", g)
    assert {c.name for c in rep.failures} == {"order8_printed_relation"}
    assert all(c.passed for c in rep.checks if c.name == "order8_ledger_relation")


def test_2ac_corrected_relation():
    b2 = Fraction(3, 2)
    g = cf.example_params("ex3_2ac", Fraction(2, 3), -1, b2)
    h2 = cf.oracle_table(cf.g24_reduction_chain(g).g2, 14)
    for k in range(8, 15):
        assert h2[k] == -Fraction(1, 2) ** (4 * k - 10) * b2 ** (8 * k - 28) * h2[k - 8]


@settings(max_examples=8)
@given(nonzero_q, small_q, nonzero_q)
def test_3ac_zero_pattern(a, b1, b2):
    rep = cf.example_suite("ex4_3ac", cf.example_params("ex4_3ac", a, b1, b2))
    assert rep.passed


def test_constraint_enforced():
    with pytest.raises(ValueError):
        cf.example_suite("ex2_ac", G2kParams(1, 1, 1, 1, 4))
    with pytest.raises(ValueError):
        cf.example_suite("ex5", G2kParams(1, 1, 1, -1, 4))
