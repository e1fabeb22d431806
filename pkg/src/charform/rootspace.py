"""Regular roots <-> reference root plus characteristic roots, and the
identities over all n! orderings of a root tuple.

Given an ordering y_1..y_n of the regular roots, the characteristic roots
satisfy ``y_i = y_{i-1} + (b_1 + ... + b_{i-1})``, so ``b_1 = y_2 - y_1``
and ``b_i = y_{i+1} - 2 y_i + y_{i-1}`` for i >= 2.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import permutations
from typing import Sequence

from . import kernels
from .discriminant import DiscriminantValue, discriminant
from .hmatrix import build_h, quadratic_form
from .numeric import DEFAULT_POLICY, TolerancePolicy, approx_eq, approx_zero, factorial, is_exact
from .poly import EXACT, PaperRootTuple, expand_factored

DEFAULT_CAP = 8


class CapExceeded(ValueError):
    """Enumerating n! orderings was refused."""


def default_cap() -> int:
    env = os.environ.get("CHARFORM_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class CharacteristicSet:
    reference: object
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))

    @property
    def n(self) -> int:
        return len(self.b) + 1


def roots_to_characteristic(t: PaperRootTuple, ordering: Sequence[int] | None = None) -> CharacteristicSet:
    if t.n < 2:
        raise ValueError("need at least two roots")
    y = t.roots if ordering is None else t.reordered(ordering)
    b = [y[1] - y[0]]
    b += [y[i + 1] - 2 * y[i] + y[i - 1] for i in range(1, len(y) - 1)]
    return CharacteristicSet(y[0], tuple(b))


def characteristic_to_roots(c: CharacteristicSet, leading=1) -> PaperRootTuple:
    roots = [c.reference]
    step = c.reference * 0
    for bj in c.b:
        step = step + bj
        roots.append(roots[-1] + step)
    return PaperRootTuple(roots, leading)


def reference_root(a_n_minus_1, b: Sequence, n: int):
    """x_1 from the monic sum coefficient and the characteristic roots."""
    if len(b) != n - 1:
        raise ValueError(f"expected {n - 1} characteristic roots, got {len(b)}")
    weighted = sum((Fraction((n - i) ** 2 + (n - i), 2) * bi for i, bi in enumerate(b, start=1)), 0)
    if not is_exact(a_n_minus_1) or any(not is_exact(v) for v in b):
        weighted = complex(weighted)
    return (a_n_minus_1 - weighted) / n


@dataclass(frozen=True)
class PermutationFamily:
    """All n! characteristic sets of one root tuple.

    ``orderings[s]`` is the s-th permutation of indices 0..n-1 in
    lexicographic order; ``sets`` is materialized on first access.
    """

    source: PaperRootTuple

    @property
    def n(self) -> int:
        return self.source.n

    def __len__(self) -> int:
        return math.factorial(self.n)

    @property
    def orderings(self):
        return permutations(range(self.n))

    @cached_property
    def sets(self) -> tuple:
        return tuple(roots_to_characteristic(self.source, o) for o in self.orderings)


def enumerate_sets(t: PaperRootTuple, cap: int | None = None) -> PermutationFamily:
    cap = default_cap() if cap is None else cap
    if t.n < 2:
        raise ValueError("need at least two roots")
    if t.n > cap:
        raise CapExceeded(
            f"n = {t.n} means {math.factorial(t.n)} orderings; cap is {cap} "
            "(raise it with --cap or CHARFORM_CAP)")
    return PermutationFamily(t)


def organized_check(seq: Sequence[CharacteristicSet]) -> bool:
    """Partial sums over the first i sets of component i-1 vanish, i = 2..n."""
    if not seq:
        raise IndexError("empty sequence")
    n = seq[0].n
    if len(seq) < n:
        raise IndexError(f"need at least {n} sets, got {len(seq)}")
    for i in range(2, n + 1):
        total = sum((seq[s].b[i - 2] for s in range(i)), seq[0].b[0] * 0)
        if is_exact(total):
            if total != 0:
                return False
        else:
            scale = sum(abs(seq[s].b[i - 2]) for s in range(i))
            if not approx_zero(total, scale):
                return False
    return True


def _integer_scaling(roots):
    """Common denominator L and the integer roots L*x_i."""
    den = reduce(math.lcm, (Fraction(x).denominator for x in roots), 1)
    return den, [int(Fraction(x) * den) for x in roots]


def family_moments(fam: PermutationFamily):
    """(sums, pairs): sum_s b_is and sum_s b_is b_js for every i, j.

    Exact families are scaled to integers and run through the kernels;
    approximate ones are summed in lexicographic order for reproducibility.
    """
    roots = fam.source.roots
    if fam.source.mode == EXACT:
        den, y = _integer_scaling(roots)
        sums, pairs = kernels.perm_moments(y)
        return ([Fraction(v, den) for v in sums],
                [[Fraction(v, den * den) for v in row] for row in pairs])
    return kernels.pure.perm_moments(list(roots))


def _abs_moments(fam):
    m = fam.n - 1
    sums = [0.0] * m
    pairs = [[0.0] * m for _ in range(m)]
    for c in fam.sets:
        for i in range(m):
            sums[i] += abs(c.b[i])
            for j in range(m):
                pairs[i][j] += abs(c.b[i] * c.b[j])
    return sums, pairs


def sum_property(fam: PermutationFamily) -> list:
    """sum over all n! sets of each b_i; every entry should vanish."""
    sums, _ = family_moments(fam)
    return sums


def qform_invariant(fam: PermutationFamily, policy: TolerancePolicy = DEFAULT_POLICY):
    """(value, constant) of B^T H_n B across the family."""
    H = build_h(fam.n)
    if fam.source.mode == EXACT:
        den, y = _integer_scaling(fam.source.roots)
        lo, hi = kernels.perm_qform_extrema(y, H.rows())
        return Fraction(lo, den * den), lo == hi
    values = [quadratic_form(H, c) for c in fam.sets]
    return values[0], all(approx_eq(v, values[0], policy) for v in values)


@dataclass(frozen=True)
class PairRecord:
    i: int               # 1-based component indices, i < j
    j: int
    total: object        # sum_s b_is b_js
    relation: str        # "first", "skip_two", "adjacent", or "zero"
    coefficient: object  # predicted D = coefficient * (n-1)! * total; None for "zero"
    predicted: object    # value the relation predicts for D (or for total, when "zero")
    passed: bool
    factor: object       # D / predicted when both are nonzero, else None


@dataclass(frozen=True)
class ProductReport:
    n: int
    target: object       # D_n of the monic polynomial with these roots
    records: tuple
    diagonal: tuple      # sum_s b_is^2, reported for completeness

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def by_relation(self, name: str) -> list:
        return [r for r in self.records if r.relation == name]


def _relation_for(n: int, i: int, j: int):
    if n >= 3 and (i, j) == (1, 2):
        return "first", Fraction(-1, 3)
    if n >= 4 and j == i + 2:
        return "skip_two", Fraction(1)
    if n >= 4 and j == i + 1 and i >= 2:
        return "adjacent", Fraction(-1, 4)
    return "zero", None


def product_relations(fam: PermutationFamily, D: DiscriminantValue | None = None,
                      policy: TolerancePolicy = DEFAULT_POLICY) -> ProductReport:
    """Check the pair sums against D_n.

    The relations hold for the monic polynomial with these roots, so the
    target is D_n / a_n^2 regardless of the source's leading coefficient.
    """
    n = fam.n
    if D is None:
        D = discriminant(expand_factored(fam.source))
    target = D.d / D.leading**2
    exact = fam.source.mode == EXACT and is_exact(target)
    _, pairs = family_moments(fam)
    abs_pairs = None if exact else _abs_moments(fam)[1]
    fact = factorial(n - 1)
    records = []
    for i in range(1, n):
        for j in range(i + 1, n):
            total = pairs[i - 1][j - 1]
            relation, coef = _relation_for(n, i, j)
            if coef is None:
                predicted = 0
                ok = total == 0 if exact else approx_zero(total, abs_pairs[i - 1][j - 1], policy)
                factor = None
            else:
                predicted = coef * fact * total
                if exact:
                    ok = predicted == target
                else:
                    scale = float(abs(coef) * fact) * abs_pairs[i - 1][j - 1]
                    ok = approx_zero(predicted - target, max(scale, abs(target)), policy)
                factor = (target / predicted) if predicted != 0 and target != 0 else None
            records.append(PairRecord(i, j, total, relation, coef, predicted, ok, factor))
    diagonal = tuple(pairs[i][i] for i in range(n - 1))
    return ProductReport(n, target, tuple(records), diagonal)
