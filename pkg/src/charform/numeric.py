"""Exact and approximate scalars plus the shared tolerance policy.

Exact values are :class:`fractions.Fraction` (plain ``int`` is accepted
wherever a Fraction is, since both are exact rationals). Approximate values
are Python ``complex``.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

ExactScalar = Fraction
ApproxScalar = complex
Scalar = Union[Fraction, int, complex]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


@dataclass(frozen=True)
class TolerancePolicy:
    rel_tol: float = 1e-9
    abs_floor: float = 1e-12

    def __post_init__(self):
        if not (self.rel_tol >= 0 and self.abs_floor >= 0):
            raise ValueError("tolerances must be non-negative")


DEFAULT_POLICY = TolerancePolicy()


def factorial(k: int) -> int:
    """Return ``k!`` exactly."""
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    return math.factorial(k)


def binomial(n: int, i: int) -> int:
    if n < 0 or i < 0:
        raise ValueError("binomial arguments must be non-negative")
    if i > n:
        raise ValueError(f"binomial({n}, {i}): i exceeds n")
    return math.comb(n, i)


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def exact(x) -> Fraction:
    """Coerce an int/Fraction/"p/q" string to a Fraction. Floats are rejected."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def approx(x) -> complex:
    """Lossy conversion to a finite complex float."""
    z = complex(x)
    check_finite(z)
    return z


def check_finite(z: complex) -> complex:
    if not cmath.isfinite(z):
        raise ArithmeticError(f"non-finite value {z!r}")
    return z


def approx_eq(a, b, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True iff |a-b| <= max(abs_floor, rel_tol * max(|a|, |b|))."""
    za, zb = approx(a), approx(b)
    return abs(za - zb) <= max(policy.abs_floor, policy.rel_tol * max(abs(za), abs(zb)))


def approx_zero(value, scale, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """Zero test for a float sum whose terms had total magnitude ``scale``.

    A cancelling sum cannot be compared against 0 relatively, so the band is
    taken relative to the magnitude of what was summed.
    """
    return abs(approx(value)) <= max(policy.abs_floor, policy.rel_tol * abs(scale))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (decimal integers, optional leading minus)."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    return str(Fraction(x))


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def scalar_to_json(x):
    """Exact values become "p/q" strings, approximate values [re, im]."""
    if is_exact(x):
        return format_rational(x)
    z = approx(x)
    return [z.real, z.imag]


def scalar_from_json(obj):
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return approx(complex(float(obj[0]), float(obj[1])))
    raise ValueError(f"bad scalar encoding: {obj!r}")
