import cmath
import random
from fractions import Fraction as F

import pytest

from charform.poly import PaperRootTuple, Polynomial, expand_factored
from charform.solver import (
    ConvergenceError,
    SolverConfig,
    find_roots,
    rational_paper_tuple,
    relative_residual,
    solve,
    to_paper_tuple,
)


def P(*coeffs):
    return Polynomial([F(c) for c in coeffs])


def nearest_match_error(found, expected):
    left = list(found)
    worst = 0.0
    for e in expected:
        k = min(range(len(left)), key=lambda i: abs(left[i] - e))
        worst = max(worst, abs(left.pop(k) - e))
    return worst


def test_quadratic():
    roots = find_roots(P(2, -3, 1))
    assert sorted(r.real for r in roots) == pytest.approx([1, 2], abs=1e-12)
    t = to_paper_tuple(roots, 1)
    assert [x.real for x in t.roots] == pytest.approx([-2, -1], abs=1e-12)


def test_cubic_paper_tuple():
    t = to_paper_tuple(find_roots(P(0, 3, 4, 1)), 1)
    assert [x.real for x in t.roots] == pytest.approx([0, 1, 3], abs=1e-12)
    assert rational_paper_tuple(P(0, 3, 4, 1), find_roots(P(0, 3, 4, 1))).roots == (0, 1, 3)


def test_conjugate_pair_sorted():
    t = to_paper_tuple([1j, -1j], 1)
    assert t.roots == (-1j, 1j)


def test_degree10_construct_then_solve():
    rng = random.Random(10)
    known = [cmath.rect(2 * rng.random(), rng.uniform(0, 2 * cmath.pi)) for _ in range(10)]
    p = expand_factored(PaperRootTuple([-z for z in known], 1.5))
    assert nearest_match_error(find_roots(p), known) <= 1e-8


def test_residuals_and_clusters():
    p = expand_factored(PaperRootTuple([1.0, 1.0, 1.0, -2.0]))
    sol = solve(p)
    for r, res, c in zip(sol.roots, sol.residuals, sol.clustered):
        assert res <= 1e-12 * (100 if c else 1)
        assert res == relative_residual(p.coeffs, r)


def test_zero_roots_exact():
    sol = solve(P(0, 0, 0, 0, 1))
    assert sol.roots == [0j] * 4


def test_linear():
    (r,) = find_roots(P(3, 2))
    assert r == pytest.approx(-1.5)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(max_iterations=0)


def test_non_convergence_carries_best_effort():
    p = expand_factored(PaperRootTuple([complex(k, 1) for k in range(12)]))
    with pytest.raises(ConvergenceError) as exc:
        solve(p, SolverConfig(max_iterations=1, restart_count=1))
    assert len(exc.value.roots) == 12 and len(exc.value.residuals) == 12


def test_rational_recovery_rejects_irrational():
    p = P(-2, 0, 1)
    assert rational_paper_tuple(p, find_roots(p)) is None
