#!/usr/bin/env python3
"""Benchmark the series-oracle hot kernel: numba @njit vs pure numpy.

The kernel sums (x + k)**-(n+1) over k < terms; it dominates the runtime of
the series-oracle verification checks.  Run as::

    python benchmarks/bench_backends.py [--terms N] [--repeats R]

The numba timing excludes the one-off JIT compile (a warmup call absorbs it).
"""
import argparse
import os
import statistics
import time

from polylim import _kernels

CASES = [(1, 0.5), (1, 1.0), (4, 2.0), (8, 10.0)]


def time_backend(backend: str, terms: int, repeats: int) -> dict:
    os.environ[_kernels.BACKEND_ENV] = backend
    # Warmup: triggers JIT compilation on the numba path.
    _kernels.shifted_power_sum(1.0, 2, min(terms, 1000))
    results = {}
    for order, x in CASES:
        timings = []
        value = None
        for _ in range(repeats):
            start = time.perf_counter()
            value = _kernels.shifted_power_sum(x, order + 1, terms)
            timings.append(time.perf_counter() - start)
        results[(order, x)] = (min(timings), statistics.median(timings), value)
    return results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=1_000_000)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    backends = ["numpy"]
    if _kernels.HAVE_NUMBA:
        backends.insert(0, "numba")
    else:
        print("numba not importable; benchmarking numpy only")

    all_results = {b: time_backend(b, args.terms, args.repeats) for b in backends}

    print(f"terms={args.terms}, repeats={args.repeats} (best / median, ms)")
    header = f"{'order':>5} {'x':>6}"
    for b in backends:
        header += f" {b + ' best':>12} {b + ' med':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for case in CASES:
        order, x = case
        row = f"{order:>5} {x:>6}"
        for b in backends:
            best, med, _ = all_results[b][case]
            row += f" {best * 1e3:>12.3f} {med * 1e3:>12.3f}"
        if len(backends) == 2:
            row += f" {all_results['numpy'][case][0] / all_results['numba'][case][0]:>7.1f}x"
        print(row)

    if len(backends) == 2:
        print("\nagreement between backends:")
        for case in CASES:
            a = all_results["numba"][case][2]
            b = all_results["numpy"][case][2]
            rel = abs(a - b) / abs(b)
            print(f"  order={case[0]}, x={case[1]}: relative difference {rel:.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
