"""Compare the compiled and pure-Python kernel backends.

Run:  python3 benchmarks/bench_kernels.py
"""
import importlib
import statistics
import time


def _load(pure: bool):
    if pure:
        from cfbounds import _kernels_py as mod
        return mod
    try:
        from cfbounds import _ckernels as mod
        return mod
    except ImportError:
        return None


def _time(fn, repeats=5):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return min(best), statistics.median(best)


CASES = [
    (
        "rational_cf_digits (fib pair, ~7k digits)",
        lambda m: m.rational_cf_digits(_fib(10_000), _fib(9_999)),
    ),
    (
        "convergent_pairs ([1]*2000)",
        lambda m: m.convergent_pairs([1] * 2000, 2000),
    ),
    (
        "periodic_cf_digits sqrt(D), 500 large D",
        lambda m: [m.periodic_cf_digits(0, 1, d) for d in range(10**9, 10**9 + 500) if _nonsquare(d)],
    ),
]


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _nonsquare(d):
    from math import isqrt
    return isqrt(d) ** 2 != d


def main():
    compiled = _load(pure=False)
    python = _load(pure=True)
    if compiled is None:
        print("compiled backend unavailable; build the extension first")
        return
    print(f"{'case':<45} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in CASES:
        tp, _ = _time(lambda: fn(python))
        tc, _ = _time(lambda: fn(compiled))
        print(f"{name:<45} {tp * 1e3:>8.1f}ms {tc * 1e3:>8.1f}ms {tp / tc:>7.2f}x")


if __name__ == "__main__":
    main()
