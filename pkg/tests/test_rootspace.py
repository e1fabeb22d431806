import math
import random
from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charform.discriminant import discriminant
from charform.hmatrix import build_h, quadratic_form
from charform.poly import PaperRootTuple, expand_factored, sum_coefficient
from charform.rootspace import (
    CapExceeded,
    CharacteristicSet,
    characteristic_to_roots,
    enumerate_sets,
    family_moments,
    organized_check,
    product_relations,
    qform_invariant,
    reference_root,
    roots_to_characteristic,
    sum_property,
)
from conftest import rand_tuple


def T(*roots, leading=1):
    return PaperRootTuple([F(r) for r in roots], F(leading))


def brute_moments(t):
    """Direct sums over every ordering, building b from the forward recursion's inverse by search."""
    n = t.n
    sums = [0] * (n - 1)
    pairs = [[0] * (n - 1) for _ in range(n - 1)]
    for y in permutations(t.roots):
        # first differences d_i = y_{i+1} - y_i are partial sums of b
        d = [y[i + 1] - y[i] for i in range(n - 1)]
        b = [d[0]] + [d[i] - d[i - 1] for i in range(1, n - 1)]
        for i in range(n - 1):
            sums[i] += b[i]
            for j in range(n - 1):
                pairs[i][j] += b[i] * b[j]
    return sums, pairs


def test_roots_to_characteristic_examples():
    c = roots_to_characteristic(T(0, 1, 3))
    assert c.reference == 0 and c.b == (1, 1)
    c = roots_to_characteristic(T(0, 3, 1))
    assert c.reference == 0 and c.b == (3, -5)
    assert roots_to_characteristic(T(4, 4, 4, 4)).b == (0, 0, 0)
    assert roots_to_characteristic(T(0, 1, 3), [0, 2, 1]).b == (3, -5)


def test_characteristic_to_roots_examples():
    assert characteristic_to_roots(CharacteristicSet(F(0), (F(1), F(1)))).roots == (0, 1, 3)
    assert characteristic_to_roots(CharacteristicSet(F(2), (F(0),) * 3)).roots == (2, 2, 2, 2)
    assert characteristic_to_roots(CharacteristicSet(F(5), (F(-1),))).roots == (5, 4)


def test_reference_root_examples():
    assert reference_root(F(4), [F(2)], 2) == 1
    assert reference_root(F(4), [F(1), F(1)], 3) == 0
    assert reference_root(F(7), [F(0)] * 4, 5) == F(7, 5)
    with pytest.raises(ValueError):
        reference_root(F(1), [F(1)], 3)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)


@settings(max_examples=80, deadline=None)
@given(rationals, st.lists(rationals, min_size=1, max_size=7))
def test_round_trip_from_characteristic(ref, b):
    c = CharacteristicSet(ref, tuple(b))
    assert roots_to_characteristic(characteristic_to_roots(c)) == c


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=6), st.randoms(use_true_random=False))
def test_round_trip_from_roots_and_reference(roots, r):
    t = PaperRootTuple(roots)
    order = list(range(t.n))
    r.shuffle(order)
    c = roots_to_characteristic(t, order)
    assert characteristic_to_roots(c).roots == t.reordered(order)
    # monic sum coefficient recovers the first reordered root
    assert reference_root(sum_coefficient(t) / t.leading, c.b, t.n) == t.reordered(order)[0]


def test_reference_root_with_leading(rng):
    for n in range(2, 7):
        t = rand_tuple(rng, n)
        c = roots_to_characteristic(t)
        assert reference_root(sum_coefficient(t) / t.leading, c.b, n) == t.roots[0]


def test_enumerate_counts_and_order():
    fam = enumerate_sets(T(3, 5))
    assert [c.b for c in fam.sets] == [(2,), (-2,)]
    assert len(enumerate_sets(T(0, 1, 3)).sets) == 6
    fam5 = enumerate_sets(T(1, 2, 3, 4, 5))
    assert len(fam5) == 120 and len(fam5.sets) == 120
    assert list(fam5.orderings)[:2] == [(0, 1, 2, 3, 4), (0, 1, 2, 4, 3)]


def test_enumerate_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        enumerate_sets(T(*range(9)))
    assert len(enumerate_sets(T(*range(4)), cap=4)) == 24
    with pytest.raises(CapExceeded):
        enumerate_sets(T(*range(4)), cap=3)
    monkeypatch.setenv("CHARFORM_CAP", "3")
    with pytest.raises(CapExceeded):
        enumerate_sets(T(*range(4)))


def test_organized_examples():
    assert organized_check(enumerate_sets(T(2, 7)).sets)
    ident = roots_to_characteristic(T(0, 1, 3))
    assert not organized_check([ident] * 3)
    assert organized_check(enumerate_sets(T(1, 1, 1)).sets)
    with pytest.raises(IndexError):
        organized_check([ident])


def test_organized_matches_direct_sums(rng):
    for _ in range(20):
        t = rand_tuple(rng, 4)
        sets = list(enumerate_sets(t).sets)
        rng.shuffle(sets)
        expected = all(sum(sets[s].b[i - 2] for s in range(i)) == 0 for i in range(2, 5))
        assert organized_check(sets) == expected


def test_sum_property_examples(rng):
    assert sum_property(enumerate_sets(T(F(1, 3), 8))) == [0]
    assert sum_property(enumerate_sets(T(0, 1, 3))) == [0, 0]
    assert sum_property(enumerate_sets(rand_tuple(rng, 4))) == [0, 0, 0]


@pytest.mark.parametrize("n", range(2, 7))
def test_moments_match_brute_force(n, rng):
    for _ in range(5):
        t = rand_tuple(rng, n)
        sums, pairs = family_moments(enumerate_sets(t))
        assert (sums, pairs) == brute_moments(t)


def test_moments_from_materialized_sets(rng):
    t = rand_tuple(rng, 5)
    fam = enumerate_sets(t)
    sums, pairs = family_moments(fam)
    assert sums == [sum(c.b[i] for c in fam.sets) for i in range(4)]
    assert pairs[0][1] == sum(c.b[0] * c.b[1] for c in fam.sets)


def test_product_relations_cubic():
    rep = product_relations(enumerate_sets(T(0, 1, 3)))
    (rec,) = rep.records
    assert (rec.i, rec.j, rec.relation, rec.total) == (1, 2, "first", -42)
    assert -F(1, 3) * math.factorial(2) * rec.total == 28 == rep.target
    assert rep.passed


def test_product_relations_quartic(rng):
    for _ in range(10):
        t = rand_tuple(rng, 4)
        rep = product_relations(enumerate_sets(t), discriminant(expand_factored(t)))
        assert rep.passed
        assert {r.relation for r in rep.records} == {"first", "skip_two", "adjacent"}
        assert rep.target == discriminant(expand_factored(t)).d / t.leading**2


def test_product_relations_equal_roots():
    rep = product_relations(enumerate_sets(T(2, 2, 2, 2, 2)))
    assert rep.passed and rep.target == 0
    assert all(r.total == 0 for r in rep.records)


def test_product_relations_report_factor_on_mismatch():
    t = T(0, 1, 3)
    fam = enumerate_sets(t)
    wrong = discriminant(expand_factored(T(0, 1, 4)))
    rep = product_relations(fam, wrong)
    assert not rep.passed
    assert rep.records[0].factor == wrong.d / 28


def test_zero_relation_pairs_at_n6(rng):
    t = rand_tuple(rng, 6)
    rep = product_relations(enumerate_sets(t))
    zeros = rep.by_relation("zero")
    assert {(r.i, r.j) for r in zeros} == {(1, 4), (1, 5), (2, 5)}
    assert all(r.total == 0 and r.passed for r in zeros)


def test_qform_invariant(rng):
    for n in range(2, 7):
        t = rand_tuple(rng, n)
        fam = enumerate_sets(t)
        value, constant = qform_invariant(fam)
        assert constant
        H = build_h(n)
        assert {quadratic_form(H, c) for c in fam.sets} == {value}


def test_approx_family():
    rnd = random.Random(3)
    t = PaperRootTuple([complex(rnd.uniform(-2, 2), rnd.uniform(-2, 2)) for _ in range(5)])
    fam = enumerate_sets(t)
    assert all(abs(s) < 1e-9 for s in sum_property(fam))
    assert product_relations(fam).passed
    assert qform_invariant(fam)[1]
