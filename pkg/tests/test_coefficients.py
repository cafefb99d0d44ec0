from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from romankit.coefficients import (
    GAMMA,
    binomial_extended,
    gamma_coeff,
    knuth_coeff,
    lower_factorial,
    parse_scheme,
    roman_coeff,
    scheme_coeff,
)
from romankit.errors import DomainError, PoleError, UsageError
from romankit.factorials import KNUTH, ROMAN, TRIVIAL, q_scheme
from romankit.numerics import EpsLaurent
from romankit.regions import Region, classify_region

from oracles import coeff_by_ratio_law, eval_poly, gamma_limit_numeric, gaussian_binomial_poly, knuth_coeff_numeric

small = st.integers(-40, 40)


def test_lower_factorial():
    assert lower_factorial(5, 2) == 20
    assert lower_factorial(3, -2) == Fraction(1, 20)
    assert lower_factorial(-1, 3) == -6
    assert lower_factorial(Fraction(7, 3), 0) == 1
    with pytest.raises(PoleError):
        lower_factorial(-2, -3)


def test_binomial_extended():
    assert binomial_extended(5, 2) == 10
    assert binomial_extended(-2, 3) == -4
    assert binomial_extended(Fraction(1, 2), 2) == Fraction(-1, 8)
    with pytest.raises(DomainError):
        binomial_extended(5, -1)


@pytest.mark.parametrize(
    "n, k, expected",
    [(6, -2, Fraction(-1, 56)), (-3, -2, Fraction(-1, 2)), (2, 5, Fraction(1, 30)), (2, 6, Fraction(-1, 60))],
)
def test_roman_coeff_examples(n, k, expected):
    assert roman_coeff(n, k) == expected


@given(small, small)
def test_roman_coeff_matches_ratio_law_oracle(n, k):
    assert roman_coeff(n, k) == coeff_by_ratio_law(n, k)
    assert roman_coeff(n, n) == 1


@given(small, small)
def test_integer_or_reciprocal(n, k):
    v = roman_coeff(n, k)
    assert v != 0
    assert v.denominator == 1 or v.numerator in (1, -1)


@pytest.mark.parametrize(
    "n, k, expected",
    [(6, 3, EpsLaurent({0: 20})), (2, 5, EpsLaurent({1: Fraction(1, 30)})), (-2, -1, EpsLaurent({1: -1}))],
)
def test_knuth_coeff_examples(n, k, expected):
    assert knuth_coeff(n, k) == expected


@pytest.mark.parametrize("n", range(-6, 7))
@pytest.mark.parametrize("k", range(-6, 7))
def test_knuth_coeff_against_gamma_limit(n, k):
    c, m = knuth_coeff_numeric(n, k)
    assert knuth_coeff(n, k) == EpsLaurent({m: c})
    assert gamma_coeff(n, k) == gamma_limit_numeric(n, k)


@given(small, small)
def test_knuth_roman_gamma_coherence(n, k):
    kc = knuth_coeff(n, k)
    assert kc.is_monomial()
    assert kc.substitute(1) == roman_coeff(n, k)
    if classify_region(n, k) in (Region.R1, Region.R2, Region.R3):
        assert kc.min_exponent == 0
        assert gamma_coeff(n, k) == roman_coeff(n, k)
    else:
        assert kc.min_exponent == 1
        assert gamma_coeff(n, k) == 0


@pytest.mark.parametrize("n, k, expected", [(6, 3, 20), (3, 5, 0), (-2, -1, 0), (-4, 2, 10)])
def test_gamma_examples(n, k, expected):
    assert gamma_coeff(n, k) == expected


def test_gamma_is_classical_for_nonnegative_k():
    for n in range(-20, 21):
        for k in range(0, 21):
            assert gamma_coeff(n, k) == binomial_extended(n, k)


def test_scheme_coeff_examples():
    assert scheme_coeff(TRIVIAL, -7, 3) == EpsLaurent({0: 1})
    assert scheme_coeff(q_scheme(2), 4, 2) == EpsLaurent({0: 35})
    assert scheme_coeff(ROMAN, 6, -2) == EpsLaurent({0: Fraction(-1, 56)})
    assert scheme_coeff(KNUTH, 2, 5) == knuth_coeff(2, 5)
    assert scheme_coeff(GAMMA, -4, 2) == 10


@pytest.mark.parametrize("q", [Fraction(2), Fraction(3, 2), Fraction(-2, 5)])
def test_q_scheme_is_gaussian_binomial(q):
    for n in range(0, 9):
        for k in range(0, n + 1):
            expected = eval_poly(gaussian_binomial_poly(n, k), q)
            assert scheme_coeff(q_scheme(q), n, k) == expected


def test_q_minus_one_pole():
    with pytest.raises(PoleError):
        scheme_coeff(q_scheme(-1), 4, 2)


def test_parse_scheme():
    assert parse_scheme("gamma") is GAMMA
    assert parse_scheme("knuth") == KNUTH
    with pytest.raises(UsageError):
        parse_scheme("bogus")
    with pytest.raises(DomainError):
        parse_scheme("q:1")
