"""The characteristic discriminant D_n and the two solutions of its equation."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from .numeric import factorial, is_exact, rational_sqrt
from .poly import EXACT, Polynomial
from .rewrite import characteristic_equation


class NonSquareDiscriminant(ValueError):
    """D_n has no rational square root; use approximate mode."""


@dataclass(frozen=True)
class DiscriminantValue:
    d: object
    n: int
    prefactor: int
    leading: object

    def classification(self) -> dict:
        """Descriptive flags only; nothing branches on them."""
        if is_exact(self.d):
            root = rational_sqrt(self.d)
            return {
                "sign": "zero" if self.d == 0 else ("positive" if self.d > 0 else "negative"),
                "integer": self.d.denominator == 1,
                "square": root is not None,
            }
        z = complex(self.d)
        return {"sign": "complex" if z.imag != 0 else ("zero" if z.real == 0 else ("positive" if z.real > 0 else "negative"))}


def prefactor(n: int) -> int:
    """(n-1)! (n-2)!"""
    return factorial(n - 1) * factorial(n - 2)


def discriminant(p: Polynomial) -> DiscriminantValue:
    _, d = characteristic_equation(p)
    return DiscriminantValue(d, p.degree, prefactor(p.degree), p.leading)


def normalized_value(p: Polynomial):
    """((n-1) a_{n-1}^2 - 2n a_n a_{n-2}) / a_n^2"""
    n = p.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    a_n, a_n1, a_n2 = p.coeff(n), p.coeff(n - 1), p.coeff(n - 2)
    return ((n - 1) * a_n1**2 - 2 * n * a_n * a_n2) / a_n**2


def candidate_solutions(p: Polynomial) -> tuple:
    """Both x solving (n! a_n x + (n-1)! a_{n-1})^2 = D_n.

    Exact polynomials need D_n to be a rational square, otherwise
    :class:`NonSquareDiscriminant` is raised.
    """
    (slope, intercept), d = characteristic_equation(p)
    if p.mode == EXACT:
        s = rational_sqrt(d)
        if s is None:
            raise NonSquareDiscriminant(f"D_{p.degree} = {d} is not a rational square; use approx mode")
    else:
        s = cmath.sqrt(d)
    return ((-intercept + s) / slope, (-intercept - s) / slope)
