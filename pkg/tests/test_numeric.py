from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charform.numeric import (
    TolerancePolicy,
    approx_eq,
    binomial,
    factorial,
    format_rational,
    parse_rational,
    rational_sqrt,
    scalar_from_json,
    scalar_to_json,
)


def pascal(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return tri


PASCAL = pascal(30)


@pytest.mark.parametrize("k,expected", [(0, 1), (7, 5040), (8, 40320)])
def test_factorial_examples(k, expected):
    assert factorial(k) == expected


def test_factorial_recurrence():
    for k in range(1, 31):
        assert factorial(k) == k * factorial(k - 1)


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n,i,expected", [(5, 0, 1), (4, 2, 6), (6, 3, PASCAL[6][3])])
def test_binomial_examples(n, i, expected):
    assert binomial(n, i) == expected
    assert PASCAL[6][3] == 20


def test_binomial_matches_pascal_and_is_symmetric():
    for n in range(31):
        for i in range(n + 1):
            assert binomial(n, i) == PASCAL[n][i] == binomial(n, n - i)


def test_binomial_i_exceeds_n():
    with pytest.raises(ValueError):
        binomial(3, 4)


def test_approx_eq_examples():
    assert approx_eq(1.0, 1.0)
    assert not approx_eq(1.0, 1.0 + 1e-6, TolerancePolicy(rel_tol=1e-9))
    assert approx_eq(0.0, 1e-13, TolerancePolicy(abs_floor=1e-12))


def test_approx_eq_rejects_nonfinite():
    with pytest.raises(ArithmeticError):
        approx_eq(float("nan"), 1.0)


finite = st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e100)


@given(finite, finite)
def test_approx_eq_symmetric(a, b):
    assert approx_eq(a, b) == approx_eq(b, a)


@given(finite)
def test_approx_eq_reflexive(a):
    assert approx_eq(a, a)


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-7/4", Fraction(-7, 4)), ("6/8", Fraction(3, 4))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a/b", "--1", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions())
def test_rational_text_round_trip(q):
    text = format_rational(q)
    back = parse_rational(text)
    assert back == q and back.denominator > 0


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_scalar_json_round_trip():
    assert scalar_from_json(scalar_to_json(Fraction(-5, 3))) == Fraction(-5, 3)
    assert scalar_from_json(scalar_to_json(1.5 - 2j)) == 1.5 - 2j
