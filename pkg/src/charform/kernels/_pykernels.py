"""Pure-Python kernels. Same signatures as the compiled ``_ckernels``.

These also accept arbitrary-precision ints (no overflow), which is why the
dispatcher falls back here when inputs exceed the int64 budget.
"""
from itertools import permutations


def _second_differences(y):
    b = [y[1] - y[0]]
    for i in range(1, len(y) - 1):
        b.append(y[i + 1] - 2 * y[i] + y[i - 1])
    return b


def perm_moments(y):
    """Sums of b_i and of b_i*b_j over every ordering of ``y``.

    Returns ``(sums, pairs)`` with ``pairs`` a full symmetric matrix.
    """
    m = len(y) - 1
    sums = [0] * m
    pairs = [[0] * m for _ in range(m)]
    for perm in permutations(y):
        b = _second_differences(perm)
        for i in range(m):
            bi = b[i]
            sums[i] += bi
            row = pairs[i]
            for j in range(i, m):
                row[j] += bi * b[j]
    for i in range(m):
        for j in range(i):
            pairs[i][j] = pairs[j][i]
    return sums, pairs


def perm_qform_extrema(y, h):
    """(min, max) of b^T h b over every ordering of integer ``y``."""
    m = len(y) - 1
    lo = hi = None
    for perm in permutations(y):
        b = _second_differences(perm)
        q = 0
        for i in range(m):
            row = h[i]
            acc = row[i] * b[i]
            for j in range(i + 1, m):
                acc += 2 * row[j] * b[j]
            q += acc * b[i]
        if lo is None or q < lo:
            lo = q
        if hi is None or q > hi:
            hi = q
    return lo, hi


def aberth(coeffs, z0, max_iter, tol):
    """Aberth-Ehrlich iteration on ascending complex ``coeffs``.

    Updates in place (Gauss-Seidel order). Returns ``(roots, iterations,
    converged)``; converged means the largest relative step fell to ``tol``.
    """
    n = len(coeffs) - 1
    z = [complex(v) for v in z0]
    c = [complex(v) for v in coeffs]
    for it in range(1, max_iter + 1):
        worst = 0.0
        for i in range(n):
            zi = z[i]
            p = c[n]
            dp = 0j
            for k in range(n - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + c[k]
            if p == 0:
                continue
            s = 0j
            for j in range(n):
                if j != i:
                    diff = zi - z[j]
                    if diff != 0:
                        s += 1.0 / diff
            denom = dp - p * s
            if denom == 0:
                delta = 1e-8 * (1 + abs(zi)) * (1 + 1j)
            else:
                delta = p / denom
            znew = zi - delta
            z[i] = znew
            scale = abs(znew)
            rel = abs(delta) / (scale if scale > 1e-300 else 1.0)
            if rel > worst:
                worst = rel
        if worst <= tol:
            return z, it, True
    return z, max_iter, False
