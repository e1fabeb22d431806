"""Numerical roots of a polynomial via Aberth-Ehrlich iteration.

The returned values are evaluation roots (where f vanishes). Use
:func:`to_paper_tuple` to flip them into the ``a_n * prod(x + x_i)`` form.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .poly import EXACT, PaperRootTuple, Polynomial, expand_factored

CLUSTER_RADIUS = 1e-6
CLUSTER_RELAXATION = 100.0
_STEP_TOL = 1e-14


@dataclass(frozen=True)
class SolverConfig:
    max_iterations: int = 200
    residual_tol: float = 1e-12
    restart_count: int = 4

    def __post_init__(self):
        if self.max_iterations <= 0 or self.residual_tol <= 0 or self.restart_count <= 0:
            raise ValueError("solver settings must be positive")


@dataclass(frozen=True)
class RootSolution:
    roots: list
    residuals: list          # relative: |f(r)| / sum |a_i| |r|^i
    clustered: list          # per root: nearest neighbour within CLUSTER_RADIUS
    iterations: int
    attempts: int
    relaxed: bool = field(default=False)  # some root was judged at the relaxed tolerance


class ConvergenceError(ArithmeticError):
    def __init__(self, message, roots, residuals):
        super().__init__(message)
        self.roots = roots
        self.residuals = residuals


def relative_residual(coeffs, r: complex) -> float:
    num = 0j
    den = 0.0
    ar = abs(r)
    for c in reversed(coeffs):
        num = num * r + c
        den = den * ar + abs(c)
    if den == 0.0:
        return 0.0
    return abs(num) / den


def _newton_polish(coeffs, r: complex, steps: int = 3) -> complex:
    best, best_res = r, relative_residual(coeffs, r)
    z = r
    for _ in range(steps):
        p = coeffs[-1]
        dp = 0j
        for c in reversed(coeffs[:-1]):
            dp = dp * z + p
            p = p * z + c
        if dp == 0:
            break
        z = z - p / dp
        res = relative_residual(coeffs, z)
        if not res < best_res:
            break
        best, best_res = z, res
    return best


def _cluster_flags(roots) -> list:
    flags = []
    for i, r in enumerate(roots):
        near = min((abs(r - s) for j, s in enumerate(roots) if j != i), default=math.inf)
        flags.append(near < CLUSTER_RADIUS * max(1.0, abs(r)))
    return flags


def _initial_guesses(monic, attempt: int) -> list:
    n = len(monic) - 1
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    radius *= 1.0 + 0.05 * attempt
    offset = 0.4 + 0.9 * attempt
    return [radius * cmath.exp(1j * (2 * math.pi * k / n + offset)) for k in range(n)]


def solve(p: Polynomial, cfg: SolverConfig | None = None) -> RootSolution:
    cfg = cfg or SolverConfig()
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    coeffs = [complex(c) for c in p.coeffs]
    # exact zero roots: f = x^k * q; relative residuals are meaningless near 0 otherwise
    zeros = 0
    while p.coeffs[zeros] == 0:
        zeros += 1
    reduced = coeffs[zeros:]
    if len(reduced) == 1:
        return RootSolution([0j] * zeros, [0.0] * zeros, _cluster_flags([0j] * zeros), 0, 0)
    lead = reduced[-1]
    monic = [c / lead for c in reduced]
    best = None
    total_iters = 0
    for attempt in range(cfg.restart_count):
        z0 = _initial_guesses(monic, attempt)
        roots, iters, _ = kernels.aberth(monic, z0, cfg.max_iterations, _STEP_TOL)
        total_iters += iters
        roots = [0j] * zeros + [_newton_polish(reduced, r) for r in roots]
        residuals = [relative_residual(coeffs, r) for r in roots]
        clustered = _cluster_flags(roots)
        limits = [cfg.residual_tol * (CLUSTER_RELAXATION if c else 1.0) for c in clustered]
        worst = max(res / lim for res, lim in zip(residuals, limits))
        if best is None or worst < best[0]:
            best = (worst, roots, residuals, clustered)
        if worst <= 1.0:
            relaxed = any(c and res > cfg.residual_tol for c, res in zip(clustered, residuals))
            return RootSolution(roots, residuals, clustered, total_iters, attempt + 1, relaxed)
    _, roots, residuals, _ = best
    raise ConvergenceError(
        f"no convergence after {cfg.restart_count} starts (worst relative residual {max(residuals):.3g})",
        roots, residuals)


def find_roots(p: Polynomial, cfg: SolverConfig | None = None) -> list:
    """All n complex evaluation roots, with multiplicity."""
    return solve(p, cfg).roots


def _clean(z: complex) -> complex:
    # normalizes -0.0 so that sorting and JSON output are stable
    return complex(z.real + 0.0, z.imag + 0.0)


def to_paper_tuple(roots, a_n) -> PaperRootTuple:
    """Negate evaluation roots; sort by real part, imaginary part, modulus."""
    xs = sorted((_clean(-complex(r)) for r in roots), key=lambda z: (z.real, z.imag, abs(z)))
    return PaperRootTuple(xs, complex(a_n))


def rational_paper_tuple(p: Polynomial, roots, max_denominator: int = 10**6) -> PaperRootTuple | None:
    """Exact root tuple if rounding the numerical roots reproduces ``p`` exactly."""
    if p.mode != EXACT:
        return None
    xs = []
    for r in roots:
        r = complex(r)
        if abs(r.imag) > 1e-6 * max(1.0, abs(r)):
            return None
        xs.append(-Fraction(r.real).limit_denominator(max_denominator))
    t = PaperRootTuple(sorted(xs), p.leading)
    return t if expand_factored(t).coeffs == p.coeffs else None
