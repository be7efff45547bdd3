from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import small_q
from hankelcf.closed_forms import oracle_table
from hankelcf.exactnum import Polynomial, RationalFunction
from hankelcf.hankel import (InsufficientOrderError, bareiss_det, hankel_det, hankel_matrix,
                             hankel_table, rational_det)
from hankelcf.series import EParams, G2kParams, PowerSeries, Qfe, build_e_qfe, build_g_qfe, qfe_solve


def cofactor_det(m):
    """Laplace expansion along the first row; the slow reference."""
    if not m:
        return Fraction(1)
    total = Fraction(0)
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def matrices(n):
    return st.lists(st.lists(small_q, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(0, 5).flatmap(matrices))
def test_bareiss_matches_cofactor(m):
    assert rational_det(m) == cofactor_det(m)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n,
                                                              max_size=n), min_size=n, max_size=n)))
def test_bareiss_integer_with_zero_pivots(m):
    assert bareiss_det(m) == cofactor_det([[Fraction(x) for x in row] for row in m])


@given(st.lists(small_q, min_size=9, max_size=9), st.integers(0, 5))
def test_hankel_matrix_antidiagonals(coeffs, n):
    h = hankel_matrix(coeffs, n)
    for i in range(n):
        for j in range(n):
            assert h[i][j] == coeffs[i + j]


@given(st.lists(small_q, min_size=9, max_size=9), st.integers(0, 5), small_q)
def test_scale_law(coeffs, n, s):
    assert hankel_det(coeffs, n, s) == s ** n * hankel_det(coeffs, n)
    assert hankel_det(coeffs, n, s) == hankel_det([s * c for c in coeffs], n)


def test_catalan_determinants_are_one():
    cat = qfe_solve(Qfe(0, 1, RationalFunction(1), RationalFunction(-1)), 12)
    assert hankel_table(cat, 6) == [1] * 7
    for n in range(1, 5):
        assert cofactor_det(hankel_matrix(cat.coeffs, n)) == 1


def test_fibonacci_table():
    s = qfe_solve(build_e_qfe(EParams(1, 1, -1, 1)), 12)
    assert hankel_table(s, 7) == [1, 1, 2, 2, 5, 5, 13, 13]
    assert [hankel_det(s, n) for n in (2, 4, 6)] == [2, 5, 13]


def test_g25_unit_parameters():
    # H_4 is the n = 4 = k - 1 case of the k = 5 closed form and equals 1 here.
    assert oracle_table(build_g_qfe(G2kParams(1, 1, 1, 1, 5)), 4) == [1, 1, -1, 0, 1]


def test_zero_series():
    assert hankel_table(PowerSeries([0], order=8), 4) == [1, 0, 0, 0, 0]


def test_h0_convention():
    assert hankel_det([], 0) == 1


def test_insufficient_order():
    with pytest.raises(InsufficientOrderError):
        hankel_det(PowerSeries([1, 2, 3]), 3)
