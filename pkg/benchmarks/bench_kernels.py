"""Compare the compiled and pure-numpy elimination kernels.

    python3 benchmarks/bench_kernels.py [--sizes 40 80 160] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from frobquot import _fallback

try:
    from frobquot import _kernels
except ImportError:
    _kernels = None


def _case(n, p, seed):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
    B = rng.integers(0, p, size=(n + n // 2, n), dtype=np.int64)
    return A, B


def bench(sizes, p, repeat):
    rows = []
    for n in sizes:
        A, B = _case(n, p, n)
        for name, mod in (("python", _fallback), ("cython", _kernels)):
            if mod is None:
                continue
            # rref works in place, so time it on fresh copies
            t_rref = min(timeit.repeat(lambda: mod.rref_modp(A.copy(), p), number=1, repeat=repeat))
            t_mul = min(timeit.repeat(lambda: mod.matmul_modp(A, B, p), number=1, repeat=repeat))
            rows.append((n, name, t_rref, t_mul))
        if _kernels is not None:
            Ra, Rb = A.copy(), A.copy()
            assert list(_fallback.rref_modp(Ra, p)) == list(_kernels.rref_modp(Rb, p))
            assert np.array_equal(Ra, Rb)
            assert np.array_equal(_fallback.matmul_modp(A, B, p), _kernels.matmul_modp(A, B, p))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 160])
    ap.add_argument("--prime", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    rows = bench(args.sizes, args.prime, args.repeat)
    print(f"{'n':>5} {'backend':>8} {'rref (ms)':>11} {'matmul (ms)':>12}")
    for n, name, a, b in rows:
        print(f"{n:>5} {name:>8} {1e3 * a:>11.3f} {1e3 * b:>12.3f}")
    by = {(n, name): (a, b) for n, name, a, b in rows}
    for n in args.sizes:
        if (n, "cython") in by:
            (pa, pb), (ca, cb) = by[(n, "python")], by[(n, "cython")]
            print(f"n={n}: rref speedup {pa / ca:.1f}x, matmul speedup {pb / cb:.1f}x")


if __name__ == "__main__":
    main()
