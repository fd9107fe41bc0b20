"""Compare the compiled elimination kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 40 80 160] [--primes 2 3 7] [--repeat 3]

Both kernels get identical random matrices; results are checked for equality.
"""

import argparse
import random
import time

from equicobar import _kernels_py

try:
    from equicobar import _ckernels
except ImportError:
    _ckernels = None


def _random_matrix(rng, n, p, density):
    return [[rng.randrange(1, p) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]


def _best(fn, rows, n, p, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        data = [list(r) for r in rows]
        start = time.perf_counter()
        result = fn(data, n, p)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 160])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 7])
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rng = random.Random(args.seed)
    print(f"{'n':>5} {'p':>3} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}  rank")
    for n in args.sizes:
        for p in args.primes:
            rows = _random_matrix(rng, n, p, args.density)
            t_py, r_py = _best(_kernels_py.rank_mod_p, rows, n, p, args.repeat)
            t_c, r_c = _best(_ckernels.rank_mod_p, rows, n, p, args.repeat)
            if r_py != r_c:
                raise SystemExit(f"kernels disagree at n={n}, p={p}: {r_py} vs {r_c}")
            _, e_py = _best(_kernels_py.rref_mod_p, rows, n, p, 1)
            _, e_c = _best(_ckernels.rref_mod_p, rows, n, p, 1)
            if e_py != e_c:
                raise SystemExit(f"echelon forms disagree at n={n}, p={p}")
            print(f"{n:>5} {p:>3} {t_py:>12.5f} {t_c:>12.5f} {t_py / t_c:>7.1f}x  {r_c}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
