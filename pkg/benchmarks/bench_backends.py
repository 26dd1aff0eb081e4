"""Compare the pure-Python and compiled word kernels on the hot operations.

Usage: python3 benchmarks/bench_backends.py [--repeats N]

Each benchmark runs the identical workload against twosquares._kernel_py
and (if built) twosquares._speedups, reporting per-op times and speedup.
Results are asserted equal along the way, so this doubles as a stress
parity check.
"""

import argparse
import random
import time

from twosquares import _kernel_py

try:
    from twosquares import _speedups
except ImportError:
    _speedups = None


def random_codes(rng, length):
    return bytes(rng.randrange(4) for _ in range(length))


def random_reduced_codes(rng, length):
    if length == 0:
        return b""
    codes = [rng.randrange(4)]
    for _ in range(length - 1):
        c = rng.randrange(3)
        if c >= codes[-1] ^ 1:
            c += 1
        codes.append(c)
    return bytes(codes)


def bench_reduce(kernel, data):
    return [kernel.reduce_word(raw) for raw in data]


def bench_mul(kernel, data):
    return [kernel.mul(u, v) for u, v in data]


def bench_square_root(kernel, data):
    return [kernel.square_root(w) for w in data]


def bench_search(kernel, data):
    return [kernel.search_square_pair(g, bound) for g, bound in data]


def sweep(kernel, max_len, bound):
    """Criterion-8 style scan: search every short balanced word."""
    hits = 0
    for n in range(max_len + 1):
        for w in kernel.words_of_length(n):
            if w.count(0) != w.count(1) or w.count(2) != w.count(3):
                continue
            a, b, _ = kernel.search_square_pair(w, bound)
            if a is not None:
                hits += 1
    return hits


def bench_sweep(kernel, data):
    (max_len, bound) = data
    return sweep(kernel, max_len, bound)


def make_workloads(rng):
    return [
        ("reduce_word (500 x len 2000)",
         bench_reduce, [random_codes(rng, 2000) for _ in range(500)]),
        ("mul (5000 x len 200)",
         bench_mul, [(random_reduced_codes(rng, 200), random_reduced_codes(rng, 200))
                     for _ in range(5000)]),
        ("square_root (5000 x len 400)",
         bench_square_root,
         [_kernel_py.mul(w, w) for w in
          (random_reduced_codes(rng, 200) for _ in range(5000))]),
        ("search miss ([x,y], bound 9)",
         bench_search, [(bytes([0, 2, 1, 3]), 9)]),
        ("sweep (|g| <= 7, bound 4)",
         bench_sweep, (7, 4)),
    ]


def run(repeats):
    rng = random.Random(20260809)
    workloads = make_workloads(rng)
    kernels = [("python", _kernel_py)]
    if _speedups is not None:
        kernels.append(("c", _speedups))
    else:
        print("note: compiled kernel not built; benchmarking pure Python only\n")

    width = max(len(name) for name, _, _ in workloads)
    header = f"{'benchmark':<{width}}  " + "".join(f"{n:>12}" for n, _ in kernels)
    if len(kernels) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, fn, data in workloads:
        times = []
        results = []
        for _, kernel in kernels:
            best = min(
                _timed(fn, kernel, data) for _ in range(repeats)
            )
            times.append(best[0])
            results.append(best[1])
        assert all(r == results[0] for r in results), f"backends disagree on {name}"
        row = f"{name:<{width}}  " + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


def _timed(fn, kernel, data):
    start = time.perf_counter()
    result = fn(kernel, data)
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3,
                        help="take the best of this many runs (default 3)")
    run(parser.parse_args().repeats)


if __name__ == "__main__":
    main()
