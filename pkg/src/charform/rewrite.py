"""Completed-power rewrite of a polynomial and the derivative chain.

For f of degree n with ``L(x) = n! a_n x + (n-1)! a_{n-1}``::

    scale * f(x) = L(x)^n - g(x) + scale * tail(x),   scale = n!^n a_n^(n-1)

where ``g`` collects the terms of ``L^n`` below degree n-1 and ``tail`` is
``a_0 + ... + a_{n-2} x^(n-2)``. Rearranged, ``L(x)^n = g(x) - scale*tail(x)``
holds exactly at the evaluation roots. Differentiating that root equation
k times and dividing out ``n!/(n-k)! * (n! a_n)^k`` leaves a perfect
(n-k)-th power on the left; at k = n-2 it is the characteristic equation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .numeric import binomial, factorial
from .poly import (
    EXACT,
    Polynomial,
    coeffs_add,
    coeffs_derivative,
    coeffs_equal,
    coeffs_eval,
    coeffs_pow,
    coeffs_scale,
    coeffs_sub,
)


def _require_degree(p: Polynomial, minimum: int = 2):
    if p.degree < minimum:
        raise ValueError(f"degree {p.degree} < {minimum}")


@dataclass(frozen=True)
class RewriteParts:
    n: int
    power_linear: tuple  # (n! a_n, (n-1)! a_{n-1})
    g_terms: tuple       # ascending coefficients of g(x); may be all zero
    tail: tuple          # a_0 .. a_{n-2}
    scale: object        # n!^n a_n^(n-1)

    @property
    def linear_coeffs(self) -> tuple:
        """L(x) as an ascending coefficient tuple."""
        slope, intercept = self.power_linear
        return (intercept, slope)

    def lhs_power(self) -> tuple:
        return coeffs_pow(self.linear_coeffs, self.n)

    def root_equation_rhs(self) -> tuple:
        """g(x) - scale * tail(x)."""
        return coeffs_sub(self.g_terms, coeffs_scale(self.tail, self.scale))

    def recombined(self) -> tuple:
        """L^n - g + scale*tail; equals scale*f when the rewrite is right."""
        return coeffs_add(coeffs_sub(self.lhs_power(), self.g_terms), coeffs_scale(self.tail, self.scale))


def _parts(p: Polynomial) -> RewriteParts:
    n = p.degree
    a_n, a_n1 = p.coeff(n), p.coeff(n - 1)
    slope = factorial(n) * a_n
    intercept = factorial(n - 1) * a_n1
    g = [a_n * 0] * (n - 1)
    for i in range(2, n + 1):
        g[n - i] = binomial(n, i) * intercept**i * slope ** (n - i)
    tail = tuple(p.coeffs[: n - 1])
    scale = factorial(n) ** n * a_n ** (n - 1)
    return RewriteParts(n, (slope, intercept), tuple(g), tail, scale)


def build_rewrite(p: Polynomial) -> RewriteParts:
    if p.mode != EXACT:
        raise TypeError("the rewrite identity is checked exactly; pass an exact polynomial")
    _require_degree(p)
    return _parts(p)


def verify_rewrite(p: Polynomial) -> bool:
    parts = build_rewrite(p)
    return coeffs_equal(parts.recombined(), coeffs_scale(p.coeffs, parts.scale))


def rewrite_gap(p: Polynomial) -> tuple:
    """(largest coefficient gap, largest term magnitude) of the rewrite identity.

    Works in either mode; approximate callers compare the two with a
    relative tolerance instead of asking for an exact zero.
    """
    _require_degree(p)
    parts = _parts(p)
    target = coeffs_scale(p.coeffs, parts.scale)
    gap = coeffs_sub(parts.recombined(), target)
    mags = [abs(c) for c in parts.lhs_power()] + [abs(c) for c in parts.g_terms] + [abs(c) for c in target]
    return max(abs(c) for c in gap), max(mags)


def equation4_magnitude(p: Polynomial, x) -> float:
    """Size of the terms entering the root equation at x (a scale for float comparisons)."""
    parts = _parts(p)
    slope, intercept = parts.power_linear
    ax = abs(x)
    lhs = (abs(slope) * ax + abs(intercept)) ** parts.n
    g = coeffs_eval([abs(c) for c in parts.g_terms], ax)
    t = abs(parts.scale) * coeffs_eval([abs(c) for c in parts.tail], ax)
    return float(lhs + g + t)


def equation4_sides(p: Polynomial, x) -> tuple:
    """(L(x)^n, g(x) - scale*tail(x)) for the root equation."""
    _require_degree(p)
    parts = _parts(p)
    slope, intercept = parts.power_linear
    lhs = (slope * x + intercept) ** parts.n
    rhs = coeffs_eval(parts.g_terms, x) - parts.scale * coeffs_eval(parts.tail, x)
    return lhs, rhs


def equation4_residual(p: Polynomial, x):
    """LHS - RHS of the root equation; equals scale * f(x)."""
    lhs, rhs = equation4_sides(p, x)
    return lhs - rhs


@dataclass(frozen=True)
class DerivedEquation:
    """``lhs_base(x) ** lhs_exponent == rhs(x)`` after k differentiations."""

    k: int
    n: int
    lhs_base: tuple      # ascending (intercept, slope)
    lhs_exponent: int
    rhs: tuple
    normalizer: object   # n!/(n-k)! * (n! a_n)^k, divided out of both sides
    scale: object

    def residual(self) -> tuple:
        return coeffs_sub(coeffs_pow(self.lhs_base, self.lhs_exponent), self.rhs)

    def holds_for(self, p: Polynomial) -> bool:
        """Residual must equal (scale / normalizer) * f^(k) coefficient-wise."""
        expected = coeffs_scale(coeffs_derivative(p.coeffs, self.k), self.scale / self.normalizer)
        return coeffs_equal(self.residual(), expected)

    def rhs_constant(self):
        """The right side when it is a constant (always true at lhs_exponent 2)."""
        if any(c != 0 for c in self.rhs[1:]):
            raise ValueError("right-hand side is not constant")
        return self.rhs[0] if self.rhs else 0


def derived_equation(p: Polynomial, k: int) -> DerivedEquation:
    """k-th normalized derivative of the root equation, in the polynomial's own mode."""
    _require_degree(p)
    n = p.degree
    if not 0 <= k <= n - 2:
        raise ValueError(f"derivative order {k} outside 0..{n - 2}")
    parts = _parts(p)
    slope, _ = parts.power_linear
    normalizer = factorial(n) // factorial(n - k) * slope**k
    rhs = coeffs_derivative(parts.root_equation_rhs(), k)
    rhs = tuple(c / normalizer for c in rhs)
    return DerivedEquation(k, n, parts.linear_coeffs, n - k, rhs, normalizer, parts.scale)


def base_equation(p: Polynomial) -> DerivedEquation:
    """The undifferentiated root equation (k = 0); for n = 2 it is already quadratic."""
    return derived_equation(p, 0)


def derivative_chain(p: Polynomial) -> list:
    """Derived equations for k = 1..n-2; empty for quadratics."""
    if p.mode != EXACT:
        raise TypeError("the derivative chain is built exactly; pass an exact polynomial")
    return [derived_equation(p, k) for k in range(1, p.degree - 1)]


def characteristic_coefficients(n: int) -> dict:
    """Integer constants of ``(A a_n x + B a_{n-1})^2 = C a_{n-1}^2 - E a_n a_{n-2}``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return {
        "slope": factorial(n),
        "intercept": factorial(n - 1),
        "square": factorial(n - 1) ** 2,
        "cross": 2 * factorial(n) * factorial(n - 2),
    }


def characteristic_equation(p: Polynomial) -> tuple:
    """((n! a_n, (n-1)! a_{n-1}), D_n) with D_n the right side."""
    _require_degree(p)
    n = p.degree
    c = characteristic_coefficients(n)
    a_n, a_n1, a_n2 = p.coeff(n), p.coeff(n - 1), p.coeff(n - 2)
    rhs = c["square"] * a_n1**2 - c["cross"] * a_n * a_n2
    return (c["slope"] * a_n, c["intercept"] * a_n1), rhs
