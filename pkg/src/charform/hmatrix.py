"""The symmetric integer matrix H_n of the characteristic quadratic form."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .discriminant import discriminant, prefactor
from .numeric import DEFAULT_POLICY, TolerancePolicy, approx_zero, is_exact
from .poly import Polynomial


class IntegrityError(ArithmeticError):
    """A generated matrix entry failed to be an integer."""


@dataclass(frozen=True)
class HMatrix:
    n: int
    entries: tuple  # (n-1) rows of (n-1) ints

    @property
    def size(self) -> int:
        return self.n - 1

    @property
    def prefactor(self) -> int:
        return prefactor(self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def diagonal(self) -> list:
        return [self.entries[i][i] for i in range(self.size)]


def generator_entry(n: int, i: int, j: int) -> Fraction:
    """Lower-triangle generator value at 1-based (i, j), i >= j."""
    i, j = Fraction(i), Fraction(j)
    row_part = (n * i**3 - Fraction(3, 2) * n * (n + 1) * i**2
                + Fraction(1, 2) * n * (3 * n + 1) * i + Fraction(1, 2) * (n**4 - n**2)) / 6
    return row_part - (i**2 - (2 * n + 1) * i + n * (n + 1)) * (j - 1) * j / 4


@lru_cache(maxsize=None)
def build_h(n: int) -> HMatrix:
    if n < 2:
        raise ValueError(f"H_n needs n >= 2, got {n}")
    size = n - 1
    rows = [[0] * size for _ in range(size)]
    for i in range(1, n):
        for j in range(1, i + 1):
            v = generator_entry(n, i, j)
            if v.denominator != 1:
                raise IntegrityError(f"h[{i},{j}] of H_{n} = {v} is not an integer")
            # mirror the lower triangle upward
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = v.numerator
    return HMatrix(n, tuple(tuple(r) for r in rows))


def _check_index(n: int, i: int):
    if not 1 <= i <= n - 1:
        raise IndexError(f"diagonal index {i} outside 1..{n - 1}")


def diag_entry(n: int, i: int) -> int:
    """Closed-form quartic for h_ii."""
    _check_index(n, i)
    v = Fraction(-3 * i**4 + 2 * (4 * n + 3) * i**3 - 3 * (2 * n**2 + 4 * n + 1) * i**2
                 + 2 * n * (3 * n + 2) * i + n**4 - n**2, 12)
    if v.denominator != 1:
        raise IntegrityError(f"h[{i},{i}] of H_{n} = {v} is not an integer")
    return v.numerator


def diag_factored(n: int, i: int) -> float:
    """Factored form of the diagonal quartic, in floating point."""
    _check_index(n, i)
    r = math.sqrt(16 * n * n + 9)
    return -0.25 * (i - n - 1) * (i - n) * (i - (2 * n + 3 + r) / 6) * (i - (2 * n + 3 - r) / 6)


def _b_vector(B) -> tuple:
    return tuple(getattr(B, "b", B))


def quadratic_form(H: HMatrix, B):
    """sum_ij h_ij b_i b_j for a CharacteristicSet or plain b sequence."""
    b = _b_vector(B)
    if len(b) != H.size:
        raise ValueError(f"H_{H.n} needs {H.size} characteristic roots, got {len(b)}")
    total = 0
    for i, bi in enumerate(b):
        row = H.entries[i]
        # symmetric: diagonal once, off-diagonal twice
        acc = row[i] * bi
        for j in range(i + 1, len(b)):
            acc += 2 * row[j] * b[j]
        total += acc * bi
    return total


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lhs: object   # D_n from the coefficients
    rhs: object   # prefactor * a_n^2 * B^T H B
    quadratic: object
    passed: bool

    @property
    def delta(self):
        return self.lhs - self.rhs


def verify_identity(p: Polynomial, B, policy: TolerancePolicy = DEFAULT_POLICY) -> IdentityReport:
    n = p.degree
    H = build_h(n)
    d = discriminant(p).d
    q = quadratic_form(H, B)
    rhs = H.prefactor * p.leading**2 * q
    if is_exact(d) and is_exact(rhs):
        ok = d == rhs
    else:
        # both sides may cancel heavily; judge the gap against the term magnitudes
        b = [abs(v) for v in _b_vector(B)]
        a_n, a_n1, a_n2 = (abs(p.coeff(k)) for k in (n, n - 1, n - 2))
        terms = (math.factorial(n - 1) ** 2 * a_n1**2 + 2 * math.factorial(n) * math.factorial(n - 2) * a_n * a_n2
                 + H.prefactor * a_n**2 * quadratic_form(H, b))
        ok = approx_zero(d - rhs, max(terms, abs(d), abs(rhs)), policy)
    return IdentityReport(n, d, rhs, q, ok)


def leading_principal_minors(H: HMatrix) -> list:
    """Exact leading principal minors via fraction-free elimination."""
    m = [list(r) for r in H.entries]
    size = len(m)
    minors = []
    prev = 1
    for k in range(size):
        if m[k][k] == 0:
            # a zero pivot means this and every later minor needs pivoting; not expected for H_n
            raise ArithmeticError(f"zero pivot at {k} in H_{H.n}")
        minors.append(m[k][k])
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return minors
