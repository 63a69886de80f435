"""Truncated exact-rational power series and the named generating series."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pdbell import sequences as seq
from pdbell.bernoulli import bernoulli, higher_bernoulli
from pdbell.polynomials import pdb_poly
from pdbell.series import (
    EGF_FAMILIES,
    SeriesDivisionError,
    SeriesExpError,
    TruncatedSeries,
    bernoulli_base_series,
    compose_expm1,
    compose_expm1_stirling,
    egf_family,
    egf_pdb,
    expm1,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
series_coeffs = st.lists(rationals, min_size=1, max_size=9)


def make_series(coeffs, order=None):
    if order is None:
        order = len(coeffs) - 1
    return TruncatedSeries(coeffs, order)


# ----------------------------------------------------------------------
# arithmetic contracts


def test_constructors():
    assert TruncatedSeries.zero(3).coefficients == (0, 0, 0, 0)
    assert TruncatedSeries.one(2).coefficients == (1, 0, 0)
    assert TruncatedSeries.t(2).coefficients == (0, 1, 0)
    assert TruncatedSeries.from_constant(Fraction(2, 3), 1).coeff(0) == Fraction(2, 3)


def test_coeff_outside_order_raises():
    s = TruncatedSeries.one(4)
    with pytest.raises(ValueError):
        s.coeff(5)
    with pytest.raises(ValueError):
        s.coeff(-1)


def test_results_carry_minimum_order():
    a = TruncatedSeries.one(10)
    b = TruncatedSeries.t(4)
    assert (a + b).order == 4
    assert (a - b).order == 4
    assert (a * b).order == 4
    assert (a / TruncatedSeries.one(6)).order == 6


def test_exp_of_t_gives_reciprocal_factorials():
    e = TruncatedSeries.t(8).exp()
    for n in range(9):
        assert e.coeff(n) == Fraction(1, math.factorial(n))


def test_exp_requires_zero_constant_term():
    with pytest.raises(SeriesExpError):
        TruncatedSeries.one(4).exp()


def test_division_requires_unit_constant_term():
    with pytest.raises(SeriesDivisionError):
        TruncatedSeries.one(4) / TruncatedSeries.t(4)


def test_geometric_inverse_pair():
    order = 12
    one = TruncatedSeries.one(order)
    t = TruncatedSeries.t(order)
    geom = one / (one - t)
    assert (geom * (one - t)).coefficients == one.coefficients
    for n in range(order + 1):
        assert geom.coeff(n) == 1


@given(a=series_coeffs, b=series_coeffs)
def test_div_mul_round_trip(a, b):
    if b[0] == 0:
        b = [Fraction(1)] + b[1:]
    order = min(len(a), len(b)) - 1
    sa = make_series(a[: order + 1], order)
    sb = make_series(b[: order + 1], order)
    assert (sa / sb) * sb == sa
    assert (sa * sb) / sb == sa


@given(a=series_coeffs, k=st.integers(min_value=0, max_value=5))
def test_pow_matches_repeated_multiplication(a, k):
    s = make_series(a)
    by_mul = TruncatedSeries.one(s.order)
    for _ in range(k):
        by_mul = by_mul * s
    assert s.pow(k) == by_mul


def test_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        TruncatedSeries.one(3).pow(-1)


@given(a=series_coeffs, b=series_coeffs)
def test_exp_turns_sums_into_products(a, b):
    order = min(len(a), len(b)) - 1
    sa = make_series([Fraction(0)] + a[1 : order + 1], order)
    sb = make_series([Fraction(0)] + b[1 : order + 1], order)
    assert (sa + sb).exp() == sa.exp() * sb.exp()


def test_shift_multiplies_by_t_power():
    s = make_series([Fraction(1), Fraction(2), Fraction(3)])
    assert s.shift(0) == s
    assert s.shift(2).coefficients == (0, 0, 1)
    with pytest.raises(ValueError):
        s.shift(-1)


def test_equality_and_hash():
    a = TruncatedSeries.one(3)
    b = TruncatedSeries.one(3)
    assert a == b and hash(a) == hash(b)
    assert a != TruncatedSeries.one(4)


# ----------------------------------------------------------------------
# composition with exp(t) - 1, two independent ways


def test_expm1_has_zero_constant_term():
    u = expm1(10)
    assert u.coeff(0) == 0
    for n in range(1, 11):
        assert u.coeff(n) == Fraction(1, math.factorial(n))


def test_compose_identity_recovers_expm1():
    order = 12
    ident = TruncatedSeries.t(order)
    assert compose_expm1(ident) == expm1(order)


def test_compose_stirling_column():
    # Substituting exp(t)-1 into u^k/k! yields the column series whose
    # n-th coefficient is stirling2(n,k)/n!.
    order = 15
    for k in range(6):
        outer = TruncatedSeries.t(order).pow(k).scale(Fraction(1, math.factorial(k)))
        inner = compose_expm1(outer)
        for n in range(order + 1):
            assert inner.coeff(n) * math.factorial(n) == seq.stirling2(n, k)


def test_compose_geometric_gives_ordered_bell():
    order = 15
    one = TruncatedSeries.one(order)
    outer = one / (one - TruncatedSeries.t(order))
    inner = compose_expm1(outer)
    for n in range(order + 1):
        assert inner.coeff(n) * math.factorial(n) == seq.ordered_bell(n)


@given(coeffs=st.lists(rationals, min_size=1, max_size=21))
def test_compose_paths_agree(coeffs):
    outer = make_series(coeffs)
    assert compose_expm1(outer) == compose_expm1_stirling(outer)


# ----------------------------------------------------------------------
# named generating series


def test_egf_family_names_are_complete():
    assert set(EGF_FAMILIES) == {
        "partial_derangement",
        "ordered_bell",
        "deranged_bell",
        "stirling_column",
        "higher_bernoulli",
    }


def test_egf_family_matches_direct_values_to_20():
    order = 20
    cases = [
        ("ordered_bell", None, seq.ordered_bell),
        ("deranged_bell", None, seq.deranged_bell),
    ]
    for r in range(4):
        cases.append(("partial_derangement", r, lambda n, r=r: seq.partial_derangement(n, r)))
    for k in range(6):
        cases.append(("stirling_column", k, lambda n, k=k: seq.stirling2(n, k)))
    for r in range(5):
        cases.append(("higher_bernoulli", r, lambda n, r=r: higher_bernoulli(n, r)))
    for family, param, direct in cases:
        series = egf_family(family, order, param)
        for n in range(order + 1):
            assert series.coeff(n) * math.factorial(n) == direct(n), (family, param, n)


def test_egf_family_frozen_spot_values():
    assert egf_family("partial_derangement", 6, 0).coeff(4) * math.factorial(4) == 9
    assert egf_family("deranged_bell", 4, None).coeff(3) * 6 == 5
    assert egf_family("higher_bernoulli", 3, 1).coeff(1) == Fraction(-1, 2)


def test_egf_family_input_errors():
    with pytest.raises(ValueError):
        egf_family("no_such_family", 4)
    with pytest.raises(ValueError):
        egf_family("stirling_column", 4)  # missing parameter
    with pytest.raises(ValueError):
        egf_family("partial_derangement", 4, -1)
    with pytest.raises(ValueError):
        egf_family("ordered_bell", -1)


def test_bernoulli_base_series_matches_kernel():
    base = bernoulli_base_series(16)
    for n in range(17):
        assert base.coeff(n) * math.factorial(n) == bernoulli(n)


def test_egf_pdb_matches_polynomials():
    order = 12
    for r in range(4):
        for y in (1, -1, Fraction(1, 2)):
            series = egf_pdb(r, y, order)
            for n in range(order + 1):
                expected = pdb_poly(n, r).evaluate(y)
                assert series.coeff(n) * math.factorial(n) == expected, (r, y, n)


def test_egf_pdb_frozen_spot_values():
    s0 = egf_pdb(0, 1, 5)
    assert [s0.coeff(n) * math.factorial(n) for n in range(6)] == [1, 0, 1, 5, 28, 199]
    s1 = egf_pdb(1, 1, 4)
    assert s1.coeff(3) * 6 == seq.pdb_number(3, 1) == 4
    sy0 = egf_pdb(0, 0, 6)
    assert sy0.coefficients == TruncatedSeries.one(6).coefficients


def test_egf_pdb_rejects_negative_r():
    with pytest.raises(ValueError):
        egf_pdb(-1, 1, 4)
