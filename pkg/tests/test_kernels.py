import os
import random
import subprocess
import sys

import pytest

from charform import kernels
from charform.hmatrix import build_h

compiled_only = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")


@compiled_only
@pytest.mark.parametrize("n", range(2, 9))
def test_moment_parity(n):
    rng = random.Random(n)
    y = [rng.randint(-50400, 50400) for _ in range(n)]
    assert kernels.compiled.perm_moments(y) == kernels.pure.perm_moments(y)


@compiled_only
@pytest.mark.parametrize("n", range(2, 8))
def test_qform_parity(n):
    rng = random.Random(n)
    y = [rng.randint(-1000, 1000) for _ in range(n)]
    h = build_h(n).rows()
    lo, hi = kernels.compiled.perm_qform_extrema(y, h)
    assert (lo, hi) == kernels.pure.perm_qform_extrema(y, h)
    assert lo == hi


@compiled_only
def test_aberth_parity():
    coeffs = [-6, 11, -6, 1]
    z0 = [2 + 1j, -1 + 0.5j, 0.3 - 2j]
    a, _, ca = kernels.compiled.aberth(coeffs, z0, 100, 1e-14)
    b, _, cb = kernels.pure.aberth(coeffs, z0, 100, 1e-14)
    assert ca and cb
    assert sorted(a, key=lambda z: z.real) == pytest.approx(sorted(b, key=lambda z: z.real), abs=1e-12)


def test_overflow_falls_back_to_big_ints():
    y = [10**15, -(10**15), 3, 7]
    sums, pairs = kernels.perm_moments(y)
    assert (sums, pairs) == kernels.pure.perm_moments(y)
    assert pairs[0][0] > 2**63


def test_forced_pure_backend():
    env = dict(os.environ, CHARFORM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import charform.kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


@compiled_only
def test_exact_fuzz_report_identical_across_backends():
    cmd = [sys.executable, "-m", "charform", "fuzz", "--seed", "3", "--trials", "20", "--degrees", "2,7"]
    fast = subprocess.run(cmd, capture_output=True, check=True).stdout
    slow = subprocess.run(cmd, capture_output=True, check=True,
                          env=dict(os.environ, CHARFORM_PURE_PYTHON="1")).stdout
    assert fast == slow
