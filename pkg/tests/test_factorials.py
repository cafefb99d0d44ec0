import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from romankit.errors import DomainError, PoleError, RangeError
from romankit.factorials import (
    KNUTH,
    ROMAN,
    TRIVIAL,
    FactorialScheme,
    knuth_factorial,
    q_bracket,
    q_factorial,
    q_scheme,
    roman_bracket,
    roman_factorial,
    roman_factorial_real,
    scheme_factorial,
    trivial_factorial,
)
from romankit.numerics import EpsLaurent

from oracles import factorial_by_ratio_law, gamma_hp

# printed table of Roman factorials, n = -6..6
PRINTED_FACTORIALS = dict(zip(range(-6, 7), map(Fraction, [
    "-1/120", "1/24", "-1/6", "1/2", "-1", "1", "1", "1", "2", "6", "24", "120", "720",
])))


def test_roman_bracket():
    assert roman_bracket(0) == 1
    assert roman_bracket(5) == 5
    assert roman_bracket(-3) == -3
    assert roman_bracket(Fraction(0)) == 1


@pytest.mark.parametrize("n, expected", sorted(PRINTED_FACTORIALS.items()))
def test_roman_factorial_table(n, expected):
    assert roman_factorial(n) == expected


@pytest.mark.parametrize("n", range(-50, 51))
def test_ratio_law_and_oracle(n):
    assert roman_factorial(n) / roman_factorial(n - 1) == roman_bracket(n)
    assert roman_factorial(n) == factorial_by_ratio_law(n)
    assert roman_factorial(n) != 0


@pytest.mark.parametrize("n", range(-50, 51))
def test_knuth_roman_bridge(n):
    assert knuth_factorial(n).substitute(1) == roman_factorial(n)


def test_knuth_factorial_values():
    assert knuth_factorial(3) == EpsLaurent({0: 6})
    assert knuth_factorial(-1) == EpsLaurent({-1: 1})
    assert knuth_factorial(-3) == EpsLaurent({-1: Fraction(1, 2)})
    assert knuth_factorial(-2) == EpsLaurent({-1: -1})


def test_factorial_product_derived_sign():
    assert roman_factorial(0) * roman_factorial(0) == 1
    for n in range(1, 51):
        assert roman_factorial(n) * roman_factorial(-n) == (-1) ** (n + 1) * n


def test_trivial():
    assert {trivial_factorial(n) for n in (-4, 0, 7)} == {1}


def test_q_bracket():
    assert q_bracket(3, 2) == 7
    assert q_bracket(0, 2) == 1
    # (2**-1 - 1) / (2 - 1)
    assert q_bracket(-1, 2) == Fraction(-1, 2)
    assert q_bracket(2, -1) == 0


def test_q_factorial():
    assert q_factorial(3, 2) == 21
    assert q_factorial(0, 5) == 1
    # 1 / (q_bracket(-1, 2) * q_bracket(0, 2)) = 1 / (-1/2)
    assert q_factorial(-2, 2) == -2


@pytest.mark.parametrize("q", [Fraction(2), Fraction(3, 2), Fraction(-1, 3)])
@pytest.mark.parametrize("n", range(-10, 11))
def test_q_ratio_law(n, q):
    assert q_factorial(n, q) / q_factorial(n - 1, q) == q_bracket(n, q)


def test_q_factorial_far_out():
    assert q_factorial(600, 2) / q_factorial(599, 2) == q_bracket(600, 2)
    assert q_factorial(-600, 3) * q_bracket(-599, 3) == q_factorial(-599, 3)


def test_q_root_of_unity_rejected():
    with pytest.raises(PoleError):
        q_factorial(-3, -1)


@pytest.mark.parametrize("q", [0, 1])
def test_q_degenerate(q):
    with pytest.raises(DomainError):
        q_bracket(2, q)
    with pytest.raises(DomainError):
        q_scheme(q)


@pytest.mark.parametrize("n", range(0, 9))
def test_q_bracket_tends_to_bracket(n):
    # q_bracket(n, 1 + h) = b + C(b, 2) h + O(h^2) with b = roman_bracket(n)
    b = roman_bracket(n)
    errors = []
    for m in range(1, 7):
        h = Fraction(1, 10**m)
        err = abs(q_bracket(n, 1 + h) - b)
        assert err <= Fraction(b * (b - 1), 2) * h * (1 + b * h)
        if b <= 4:
            assert err <= 10 * h
        errors.append(err)
    assert errors == sorted(errors, reverse=True)


def test_scheme_factorial():
    assert scheme_factorial(ROMAN, -2) == EpsLaurent({0: -1})
    assert scheme_factorial(TRIVIAL, -2) == EpsLaurent({0: 1})
    assert scheme_factorial(KNUTH, -2) == EpsLaurent({-1: -1})
    assert scheme_factorial(q_scheme(2), 3) == EpsLaurent({0: 21})


def test_scheme_parse():
    assert FactorialScheme.parse("q:3/2") == q_scheme(Fraction(3, 2))
    assert FactorialScheme.parse("Roman") == ROMAN
    assert q_scheme(Fraction(3, 2)).name == "q:3/2"


@pytest.mark.parametrize("a, expected", [(0.5, 0.886226925452758), (4.0, 24.0), (-2.0, -1.0)])
def test_real_examples(a, expected):
    assert roman_factorial_real(a) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n", range(-20, 21))
def test_real_matches_exact(n):
    assert roman_factorial_real(n) == pytest.approx(float(roman_factorial(n)), rel=1e-10)


@given(st.floats(min_value=-60, max_value=60).filter(lambda a: not float(a).is_integer()))
def test_real_matches_high_precision(a):
    assert roman_factorial_real(a) == pytest.approx(float(gamma_hp(a + 1)), rel=1e-12)


def test_real_negative_noninteger_oscillates():
    assert roman_factorial_real(-1.5) < 0 < roman_factorial_real(-2.5)


@pytest.mark.parametrize("a", [171.0, -200.0, math.nan])
def test_real_range(a):
    with pytest.raises(RangeError):
        roman_factorial_real(a)
