"""Hot loops, compiled when the Cython extension is built.

``BACKEND`` names the active implementation. Set ``CHARFORM_PURE_PYTHON=1``
to force the pure-Python kernels. Integer kernels drop to pure Python (big
ints) whenever the int64 accumulators could overflow.
"""
import math
import os

from . import _pykernels as pure

compiled = None
if not os.environ.get("CHARFORM_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

BACKEND = "cython" if compiled is not None else "python"

_INT64_BUDGET = 2**62


def _int_magnitude(y):
    if not all(isinstance(v, int) for v in y):
        return None
    return max(abs(v) for v in y)


def _fits_moments(y):
    big = _int_magnitude(y)
    if big is None:
        return False
    # |b_i| <= 4*max|y|; accumulated over n! orderings
    return math.factorial(len(y)) * (4 * big) ** 2 < _INT64_BUDGET


def _fits_qform(y, h):
    big = _int_magnitude(y)
    if big is None:
        return False
    hmax = max(abs(v) for row in h for v in row) if h else 0
    m = len(y) - 1
    return 2 * m * m * hmax * (4 * big) ** 2 < _INT64_BUDGET


def perm_moments(y):
    y = list(y)
    if compiled is not None and len(y) >= 2 and _fits_moments(y):
        return compiled.perm_moments(y)
    return pure.perm_moments(y)


def perm_qform_extrema(y, h):
    y = list(y)
    if compiled is not None and len(y) >= 2 and _fits_qform(y, h):
        return compiled.perm_qform_extrema(y, h)
    return pure.perm_qform_extrema(y, h)


def aberth(coeffs, z0, max_iter, tol):
    impl = compiled if compiled is not None else pure
    return impl.aberth(list(coeffs), list(z0), int(max_iter), float(tol))
