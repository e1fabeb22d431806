# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Integer kernels work in int64; the dispatcher checks
the magnitude budget before calling them."""
from libc.stdlib cimport malloc, free
from libc.math cimport fabs


cdef inline double cabs_(double complex z) nogil:
    cdef double a = fabs(z.real), b = fabs(z.imag), t
    if a < b:
        t = a; a = b; b = t
    if a == 0.0:
        return 0.0
    t = b / a
    return a * (1.0 + t * t) ** 0.5


cdef void _accumulate(long long* y, int n, long long* b, long long* sums, long long* pairs) nogil:
    cdef int m = n - 1, i, j
    b[0] = y[1] - y[0]
    for i in range(1, m):
        b[i] = y[i + 1] - 2 * y[i] + y[i - 1]
    for i in range(m):
        sums[i] += b[i]
        for j in range(i, m):
            pairs[i * m + j] += b[i] * b[j]


def perm_moments(y):
    cdef int n = len(y), m = n - 1, i, j, k
    cdef long long tmp
    cdef long long* arr = <long long*> malloc(n * sizeof(long long))
    cdef long long* b = <long long*> malloc(n * sizeof(long long))
    cdef long long* sums = <long long*> malloc(n * sizeof(long long))
    cdef long long* pairs = <long long*> malloc(n * n * sizeof(long long))
    cdef int* ctr = <int*> malloc(n * sizeof(int))
    try:
        for i in range(n):
            arr[i] = y[i]
            ctr[i] = 0
            sums[i] = 0
        for i in range(n * n):
            pairs[i] = 0
        with nogil:
            # Heap's algorithm: order is irrelevant for these exact sums
            _accumulate(arr, n, b, sums, pairs)
            i = 1
            while i < n:
                if ctr[i] < i:
                    k = 0 if i % 2 == 0 else ctr[i]
                    tmp = arr[k]; arr[k] = arr[i]; arr[i] = tmp
                    _accumulate(arr, n, b, sums, pairs)
                    ctr[i] += 1
                    i = 1
                else:
                    ctr[i] = 0
                    i += 1
        out_sums = [sums[i] for i in range(m)]
        out_pairs = [[pairs[min(i, j) * m + max(i, j)] for j in range(m)] for i in range(m)]
        return out_sums, out_pairs
    finally:
        free(arr); free(b); free(sums); free(pairs); free(ctr)


cdef long long _qform(long long* y, int n, long long* b, long long* h) nogil:
    cdef int m = n - 1, i, j
    cdef long long q = 0, acc
    b[0] = y[1] - y[0]
    for i in range(1, m):
        b[i] = y[i + 1] - 2 * y[i] + y[i - 1]
    for i in range(m):
        acc = h[i * m + i] * b[i]
        for j in range(i + 1, m):
            acc += 2 * h[i * m + j] * b[j]
        q += acc * b[i]
    return q


def perm_qform_extrema(y, h):
    cdef int n = len(y), m = n - 1, i, j, k
    cdef long long tmp, q, lo, hi
    cdef long long* arr = <long long*> malloc(n * sizeof(long long))
    cdef long long* b = <long long*> malloc(n * sizeof(long long))
    cdef long long* hh = <long long*> malloc(n * n * sizeof(long long))
    cdef int* ctr = <int*> malloc(n * sizeof(int))
    try:
        for i in range(n):
            arr[i] = y[i]
            ctr[i] = 0
        for i in range(m):
            for j in range(m):
                hh[i * m + j] = h[i][j]
        with nogil:
            lo = hi = _qform(arr, n, b, hh)
            i = 1
            while i < n:
                if ctr[i] < i:
                    k = 0 if i % 2 == 0 else ctr[i]
                    tmp = arr[k]; arr[k] = arr[i]; arr[i] = tmp
                    q = _qform(arr, n, b, hh)
                    if q < lo:
                        lo = q
                    if q > hi:
                        hi = q
                    ctr[i] += 1
                    i = 1
                else:
                    ctr[i] = 0
                    i += 1
        return lo, hi
    finally:
        free(arr); free(b); free(hh); free(ctr)


def aberth(coeffs, z0, int max_iter, double tol):
    cdef int n = len(coeffs) - 1, i, j, k, it
    cdef double complex* c = <double complex*> malloc((n + 1) * sizeof(double complex))
    cdef double complex* z = <double complex*> malloc(n * sizeof(double complex))
    cdef double complex zi, p, dp, s, diff, denom, delta, znew
    cdef double worst, rel, scale
    cdef bint converged = False
    try:
        for i in range(n + 1):
            c[i] = coeffs[i]
        for i in range(n):
            z[i] = z0[i]
        it = 0
        with nogil:
            while it < max_iter:
                it += 1
                worst = 0.0
                for i in range(n):
                    zi = z[i]
                    p = c[n]
                    dp = 0
                    for k in range(n - 1, -1, -1):
                        dp = dp * zi + p
                        p = p * zi + c[k]
                    if p == 0:
                        continue
                    s = 0
                    for j in range(n):
                        if j != i:
                            diff = zi - z[j]
                            if diff != 0:
                                s = s + 1.0 / diff
                    denom = dp - p * s
                    if denom == 0:
                        delta = 1e-8 * (1 + cabs_(zi)) * (1 + 1j)
                    else:
                        delta = p / denom
                    znew = zi - delta
                    z[i] = znew
                    scale = cabs_(znew)
                    rel = cabs_(delta) / (scale if scale > 1e-300 else 1.0)
                    if rel > worst:
                        worst = rel
                if worst <= tol:
                    converged = True
                    break
        return [z[i] for i in range(n)], it, converged
    finally:
        free(c); free(z)
