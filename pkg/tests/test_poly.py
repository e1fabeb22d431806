from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from charform.poly import (
    PaperRootTuple,
    Polynomial,
    derivative,
    evaluate,
    expand_factored,
    sum_coefficient,
)

X = sympy.Symbol("x")


def P(*coeffs):
    return Polynomial([F(c) for c in coeffs])


def test_invariants():
    with pytest.raises(ValueError):
        P(1, 0)
    with pytest.raises(TypeError):
        Polynomial([F(1), 2.0 + 0j])
    p = P(2, -3, 1)
    assert p.degree == 2 and p.mode == "exact" and p.leading == 1


@pytest.mark.parametrize("coeffs,x,expected", [
    ((2, -3, 1), 0, 2),
    ((2, -3, 1), 1, 0),
    ((0, 3, 4, 1), 2, sum(c * 2**i for i, c in enumerate((0, 3, 4, 1)))),
])
def test_evaluate(coeffs, x, expected):
    assert evaluate(P(*coeffs), F(x)) == expected


def test_evaluate_refuses_mixed_modes():
    with pytest.raises(TypeError):
        evaluate(P(2, -3, 1), 0.5)
    assert evaluate(P(2, -3, 1).to_approx(), 1.0) == 0


def test_derivative_examples():
    a = [F(5), F(-2), F(7), F(3)]
    d = derivative(Polynomial(a), 2)
    assert d.coeffs == (2 * a[2], 6 * a[3])
    a = [F(k + 1, 3) for k in range(6)]
    d = derivative(Polynomial(a), 4)
    assert d.coeffs == (24 * a[4], 120 * a[5])
    assert derivative(Polynomial(a), 0) == Polynomial(a)
    with pytest.raises(ValueError):
        derivative(Polynomial(a), 6)


def test_expand_factored_examples():
    assert expand_factored(PaperRootTuple([F(0), F(1), F(3)])).coeffs == (0, 3, 4, 1)
    assert expand_factored(PaperRootTuple([F(7, 2)])).coeffs == (F(7, 2), 1)
    assert expand_factored(PaperRootTuple([F(1), F(1)], F(2))).coeffs == (2, 4, 2)


def test_sum_coefficient_examples():
    assert sum_coefficient(PaperRootTuple([F(0), F(1), F(3)])) == 4
    assert sum_coefficient(PaperRootTuple([F(0)] * 4)) == 0
    assert sum_coefficient(PaperRootTuple([F(1), F(2)], F(3))) == 9


def test_json_round_trip():
    for p in (P(1, F(-2, 3), 5), Polynomial([1 + 2j, 0.5, -1j])):
        assert Polynomial.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        Polynomial.from_json({"mode": "approx", "coeffs": ["1", "2"]})


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
root_tuples = st.builds(
    PaperRootTuple,
    st.lists(rationals, min_size=1, max_size=8),
    rationals.filter(lambda v: v != 0),
)


@settings(max_examples=60, deadline=None)
@given(root_tuples)
def test_expand_matches_sympy_and_vanishes_at_negated_roots(t):
    p = expand_factored(t)
    ref = sympy.Poly(sympy.Rational(t.leading) * sympy.prod([X + sympy.Rational(x) for x in t.roots]), X)
    assert [sympy.Rational(c) for c in p.coeffs] == list(reversed(ref.all_coeffs()))
    for x in t.roots:
        assert evaluate(p, -x) == 0


@settings(max_examples=60, deadline=None)
@given(root_tuples)
def test_sum_coefficient_is_next_to_leading(t):
    assert sum_coefficient(t) == expand_factored(t).coeffs[-2]


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=9).filter(lambda a: a[-1] != 0))
def test_derivative_composes(coeffs):
    p = Polynomial(coeffs)
    assert derivative(derivative(p, 1), 1) == derivative(p, 2)
