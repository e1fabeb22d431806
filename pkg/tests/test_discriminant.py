import random
from fractions import Fraction as F
from math import factorial

import pytest

from charform.discriminant import (
    NonSquareDiscriminant,
    candidate_solutions,
    discriminant,
    normalized_value,
    prefactor,
)
from charform.poly import PaperRootTuple, Polynomial, expand_factored
from conftest import rand_rational


def P(*coeffs):
    return Polynomial([F(c) for c in coeffs])


def test_quartic_generic():
    a = [F(1, 3), F(-2), F(5, 7), F(3, 2), F(-4)]
    d = discriminant(Polynomial(a))
    assert d.d == 36 * a[3] ** 2 - 96 * a[4] * a[2]
    assert d.prefactor == 12


def test_examples():
    assert discriminant(P(2, -3, 1)).d == 1
    assert discriminant(P(0, 3, 4, 1)).d == 4 * 4**2 - 12 * 1 * 3
    assert discriminant(P(0, 3, 4, 1)).d == 28


def test_normalized_examples():
    assert normalized_value(P(0, 3, 4, 1)) == F(28, 2)
    assert normalized_value(P(0, 0, 1)) == 0
    p = P(1, 1, 1, 1, 2)
    assert normalized_value(p) == discriminant(p).d / (prefactor(4) * 4)


def test_normalized_consistency(rng):
    for n in range(2, 9):
        for _ in range(20):
            p = Polynomial([rand_rational(rng) for _ in range(n)] + [rand_rational(rng, nonzero=True)])
            dv = discriminant(p)
            assert dv.d == normalized_value(p) * factorial(n - 1) * factorial(n - 2) * p.leading**2


def test_candidates_quadratic():
    assert set(candidate_solutions(P(2, -3, 1))) == {1, 2}
    assert candidate_solutions(P(0, 0, 1)) == (0, 0)


def test_candidates_nonsquare():
    with pytest.raises(NonSquareDiscriminant):
        candidate_solutions(P(-2, 0, 1))
    c = candidate_solutions(P(-2, 0, 1).to_approx())
    assert sorted(v.real for v in c) == pytest.approx([-2**0.5, 2**0.5])


def test_cubic_double_root_candidate():
    # (x - r)^2 (x - t): evaluation roots r, r, t; paper tuple (-r, -r, -t)
    r, t = F(3, 2), F(-5)
    p = expand_factored(PaperRootTuple([-r, -r, -t]))
    assert r in candidate_solutions(p)


@pytest.mark.parametrize("n", range(3, 7))
def test_repeated_root_is_candidate(n):
    rng = random.Random(100 + n)
    for _ in range(30):
        r = rand_rational(rng)
        other = rand_rational(rng)
        p = expand_factored(PaperRootTuple([-r] * (n - 1) + [-other], rand_rational(rng, nonzero=True)))
        assert r in candidate_solutions(p)


def test_classification():
    assert discriminant(P(2, -3, 1)).classification() == {"sign": "positive", "integer": True, "square": True}
    assert discriminant(P(1, 0, 1)).classification()["sign"] == "negative"
