from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_q, polys, ratfuncs, small_q
from hankelcf.exactnum import (NotPowerSeriesError, Polynomial, QuadExt, RationalFunction, X,
                               format_rational, poly_arith, poly_gcd, quadext_eval,
                               ratfunc_normalize)


def test_zero_polynomial_is_empty():
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial([]).degree == -1


def test_gcd_shares_linear_factor():
    assert poly_arith(X ** 2 - 1, X - 1, "gcd") == X - 1


def test_divmod_monomials():
    assert divmod(X ** 3, X ** 2) == (X, Polynomial())


def test_difference_of_squares():
    assert poly_arith(1 + X, 1 - X, "mul") == 1 - X ** 2


def test_divide_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial())


def test_unknown_kind():
    with pytest.raises(ValueError):
        poly_arith(X, X, "pow")


@given(polys(6), polys(4, nonzero=True))
def test_divmod_recombines(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys(4, nonzero=True), polys(4, nonzero=True), polys(3, nonzero=True))
def test_gcd_is_monic_common_divisor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.lead == 1
    assert (a * c) % g == Polynomial() and (b * c) % g == Polynomial()
    assert g % c.monic() == Polynomial()


def test_normalize_cancels_scalar():
    r = ratfunc_normalize(Polynomial([2, 2]), Polynomial([2]))
    assert (r.num, r.den) == (1 + X, Polynomial([1]))


def test_normalize_cancels_common_factor():
    r = ratfunc_normalize(X ** 2 - 1, X - 1)
    assert (r.num, r.den) == (X + 1, Polynomial([1]))


def test_denominator_vanishing_at_zero():
    with pytest.raises(NotPowerSeriesError):
        ratfunc_normalize(Polynomial([1]), X)


def test_removable_pole_at_zero_is_allowed():
    assert RationalFunction(X ** 2, X) == RationalFunction(X)


@given(ratfuncs())
def test_canonical_denominator(r):
    assert r.den[0] == 1
    if not r.num.is_zero():
        assert poly_gcd(r.num, r.den).degree == 0


@given(ratfuncs(), ratfuncs(), ratfuncs(), nonzero_q)
def test_field_laws(p, q, s, c):
    assert (p + q) * s == p * s + q * s
    assert p - p == RationalFunction(0)
    assert (p * c) / c == p
    if q.at_zero() != 0:
        assert (p / q) * q == p


@given(ratfuncs(), ratfuncs(), nonzero_q)
def test_equality_is_a_congruence(p, q, c):
    # scaling numerator and denominator together gives an equal element
    p2 = RationalFunction(p.num * c, p.den * c)
    assert p2 == p
    assert p2 + q == p + q and p2 * q == p * q


def test_format_rational():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4)) == "4"


def test_fibonacci_roots():
    mu, gamma = quadext_eval(1, 1)
    assert mu == QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    assert gamma == QuadExt(Fraction(1, 2), Fraction(-1, 2), 5)


def test_square_discriminant_folds_to_rationals():
    mu, gamma = quadext_eval(0, 2)
    assert mu.is_rational() and gamma.is_rational()
    assert {mu.rational, gamma.rational} == {2, 0}


def test_double_root():
    mu, gamma = quadext_eval(-1, 2)
    assert mu == gamma == QuadExt(1)


@given(small_q, small_q)
def test_root_symmetric_functions(alpha, beta):
    mu, gamma = quadext_eval(alpha, beta)
    assert mu * gamma == QuadExt(-alpha, 0, mu.disc)
    assert mu + gamma == QuadExt(beta, 0, mu.disc)
    assert mu * mu - mu * beta - alpha == QuadExt(0, 0, mu.disc)


@given(small_q, small_q, nonzero_q, st.integers(0, 6))
def test_quadext_division_and_powers(r, s, t, e):
    disc = Fraction(7)
    z = QuadExt(r, t, disc)
    w = QuadExt(s, 1, disc)
    assert (w / z) * z == w
    prod = QuadExt(1, 0, disc)
    for _ in range(e):
        prod = prod * z
    assert z ** e == prod
    assert z * z.conjugate() == QuadExt(z.norm(), 0, disc)
