"""Polynomials in ascending coefficient order and the factored root form.

Coefficients are stored a_0 first. A :class:`Polynomial` is either exact
(all coefficients rational) or approximate (all complex); the two are never
mixed. Roots in a :class:`PaperRootTuple` follow the ``a_n * prod(x + x_i)``
sign convention, so the polynomial vanishes at ``-x_i``, not at ``x_i``.

Bare coefficient tuples (which may be identically zero) are handled by the
``coeffs_*`` helpers; ``Polynomial`` itself always has a nonzero leading term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .numeric import approx, exact, is_exact, scalar_from_json, scalar_to_json

EXACT = "exact"
APPROX = "approx"


def _mode_of(values) -> str:
    kinds = {is_exact(v) for v in values}
    if kinds == {True}:
        return EXACT
    if kinds == {False}:
        return APPROX
    raise TypeError("mixed exact/approximate values; convert explicitly")


def _normalize(values, mode):
    if mode == EXACT:
        return tuple(exact(v) for v in values)
    return tuple(approx(v) for v in values)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __init__(self, coeffs: Sequence, mode: str | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        if mode is None:
            mode = _mode_of(coeffs)
        coeffs = _normalize(coeffs, mode)
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient a_n must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    n = degree

    @property
    def mode(self) -> str:
        return EXACT if is_exact(self.coeffs[0]) else APPROX

    @property
    def leading(self):
        return self.coeffs[-1]

    def coeff(self, i: int):
        """a_i, with zero outside 0..n."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.coeffs[0] * 0

    def __call__(self, x):
        return evaluate(self, x)

    def to_approx(self) -> "Polynomial":
        """Explicit, lossy exact -> approximate conversion."""
        return Polynomial([approx(c) for c in self.coeffs], APPROX)

    def to_json(self) -> dict:
        return {"mode": self.mode, "coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        mode = obj.get("mode")
        if mode not in (EXACT, APPROX):
            raise ValueError(f"unknown mode {mode!r}")
        coeffs = [scalar_from_json(c) for c in obj["coeffs"]]
        if _mode_of(coeffs) != mode:
            raise ValueError("coefficient encoding does not match declared mode")
        return cls(coeffs, mode)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]}, mode={self.mode!r})"


@dataclass(frozen=True)
class PaperRootTuple:
    """Roots x_1..x_n of ``leading * prod(x + x_i)``."""

    roots: tuple
    leading: object = 1

    def __init__(self, roots: Sequence, leading=1):
        roots = tuple(roots)
        if not roots:
            raise ValueError("need at least one root")
        mode = _mode_of(roots)
        if mode == EXACT and not is_exact(leading):
            raise TypeError("exact roots need an exact leading coefficient")
        roots = _normalize(roots, mode)
        (leading,) = _normalize((leading,), mode)
        if leading == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "leading", leading)

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def mode(self) -> str:
        return EXACT if is_exact(self.roots[0]) else APPROX

    def evaluation_roots(self) -> tuple:
        """The values where the expanded polynomial vanishes (-x_i)."""
        return tuple(-x for x in self.roots)

    def reordered(self, ordering: Sequence[int]) -> tuple:
        if sorted(ordering) != list(range(self.n)):
            raise ValueError(f"{ordering!r} is not a permutation of 0..{self.n - 1}")
        return tuple(self.roots[k] for k in ordering)


def evaluate(p: Polynomial, x):
    """Horner evaluation of sum a_i x^i."""
    if p.mode == "exact" and not is_exact(x):
        raise TypeError("exact polynomial evaluated at an approximate point; convert explicitly")
    return coeffs_eval(p.coeffs, x)


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th derivative. k == n yields the constant n! * a_n."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k > p.degree:
        raise ValueError(f"derivative order {k} exceeds degree {p.degree}")
    return Polynomial(coeffs_derivative(p.coeffs, k), p.mode)


def expand_factored(t: PaperRootTuple) -> Polynomial:
    """Vieta expansion of ``leading * prod(x + x_i)``."""
    out = (t.leading,)
    for x in t.roots:
        out = coeffs_mul(out, (x, t.leading * 0 + 1))
    return Polynomial(out, t.mode)


def sum_coefficient(t: PaperRootTuple):
    """a_{n-1} = a_n * sum(x_i)."""
    return t.leading * sum(t.roots, t.leading * 0)


# -- coefficient-tuple helpers (ascending, may be all zero) -----------------

def coeffs_trim(a: Sequence) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def coeffs_eval(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def coeffs_add(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return tuple(out)


def coeffs_scale(a: Sequence, s) -> tuple:
    return tuple(c * s for c in a)


def coeffs_sub(a: Sequence, b: Sequence) -> tuple:
    return coeffs_add(a, coeffs_scale(b, -1))


def coeffs_mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def coeffs_pow(a: Sequence, e: int) -> tuple:
    if e < 0:
        raise ValueError("negative exponent")
    result = (a[0] * 0 + 1,) if a else (1,)
    base = tuple(a)
    while e:
        if e & 1:
            result = coeffs_mul(result, base)
        e >>= 1
        if e:
            base = coeffs_mul(base, base)
    return result


def coeffs_derivative(a: Sequence, k: int = 1) -> tuple:
    # d^k/dx^k x^i = i!/(i-k)! x^(i-k)
    return tuple(a[i] * (math.factorial(i) // math.factorial(i - k)) for i in range(k, len(a)))


def coeffs_equal(a: Sequence, b: Sequence) -> bool:
    return coeffs_trim(a) == coeffs_trim(b)
