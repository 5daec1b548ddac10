"""Time the compiled and pure-Python enumeration kernels on the same groups.

    python benchmarks/bench_tally.py [--sizes 2:5,3:5,3:6,4:5] [--repeat 3]
"""
import argparse
import math
import time

from wreathstat import _pytally

try:
    from wreathstat import _ctally
except ImportError:
    _ctally = None

MS = (1, 2, 3, 4, 6)


def best_of(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="2:5,3:5,2:6,4:5,3:6")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [tuple(int(x) for x in item.split(":")) for item in args.sizes.split(",")]

    print(f"{'r':>2} {'n':>2} {'|G(r,n)|':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r, n in sizes:
        size = r**n * math.factorial(n)
        t_py, res_py = best_of(lambda: _pytally.tally(r, n, 1, MS), args.repeat)
        if _ctally is None:
            print(f"{r:>2} {n:>2} {size:>10} {t_py:>10.3f} {'n/a':>10} {'':>8}")
            continue
        t_c, res_c = best_of(lambda: _ctally.tally(r, n, 1, MS), args.repeat)
        assert res_c == res_py, (r, n)
        print(f"{r:>2} {n:>2} {size:>10} {t_py:>10.3f} {t_c:>10.4f} {t_py / t_c:>7.0f}x")


if __name__ == "__main__":
    main()
