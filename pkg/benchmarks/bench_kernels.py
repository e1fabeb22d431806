"""Compare compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import cmath
import random
import timeit

from charform import kernels
from charform.hmatrix import build_h
from charform.poly import PaperRootTuple, expand_factored
from charform.solver import _initial_guesses


def cases():
    rng = random.Random(0)
    for n in (6, 7, 8):
        y = [rng.randint(-50400, 50400) for _ in range(n)]
        yield f"perm_moments n={n}", "perm_moments", (y,)
    for n in (6, 7, 8):
        y = [rng.randint(-2000, 2000) for _ in range(n)]
        yield f"perm_qform_extrema n={n}", "perm_qform_extrema", (y, build_h(n).rows())
    for n in (12, 40):
        xs = [cmath.rect(2 * rng.random(), rng.uniform(0, 6.3)) for _ in range(n)]
        monic = list(expand_factored(PaperRootTuple(xs)).coeffs)
        yield f"aberth degree={n}", "aberth", (monic, _initial_guesses(monic, 0), 200, 1e-14)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled kernels unavailable; build with `python setup.py build_ext --inplace`")
        return
    print(f"{'kernel':<26}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for label, name, argv in cases():
        times = {}
        for tag, mod in (("python", kernels.pure), ("cython", kernels.compiled)):
            fn = getattr(mod, name)
            number = 1
            times[tag] = min(timeit.repeat(lambda: fn(*argv), number=number, repeat=args.repeat)) / number
        print(f"{label:<26}{times['python']:>12.4f}{times['cython']:>12.5f}{times['python'] / times['cython']:>9.0f}x")


if __name__ == "__main__":
    main()
