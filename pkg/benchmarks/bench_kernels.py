#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops: the subset-residue DP (count_residue) and the
witness subset scan (find_witness_scan).  Run from the repo root after
`python3 setup.py build_ext --inplace`:

    python3 benchmarks/bench_kernels.py
"""
import random
import time

from equiseq import _kernels_py

try:
    from equiseq import _kernels
except ImportError:
    _kernels = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_count_residue(mod_impl, cases):
    def run():
        for res, n in cases:
            mod_impl.count_residue(res, n)

    return timeit(run)


def bench_witness_scan(mod_impl, cases):
    def run():
        for res, n in cases:
            mod_impl.find_witness_scan(res, n)

    return timeit(run)


def main():
    rng = random.Random(1234)

    count_cases = [
        ([rng.randrange(-1000, 1000) for _ in range(50)], rng.randrange(2, 12))
        for _ in range(2000)
    ]
    # conjecture-style instances: length 2N residue tuples, N=6 is the
    # heaviest exhaustive case (4096 subsets per instance)
    scan_cases = [
        ([rng.randrange(6) for _ in range(12)], 6) for _ in range(300)
    ]

    rows = []
    py_count = bench_count_residue(_kernels_py, count_cases)
    py_scan = bench_witness_scan(_kernels_py, scan_cases)
    rows.append(("python", py_count, py_scan))
    if _kernels is not None:
        cy_count = bench_count_residue(_kernels, count_cases)
        cy_scan = bench_witness_scan(_kernels, scan_cases)
        rows.append(("cython", cy_count, cy_scan))

        # sanity: identical results on a sample
        for res, n in count_cases[:50]:
            assert _kernels.count_residue(res, n) == _kernels_py.count_residue(res, n)
        for res, n in scan_cases[:20]:
            assert _kernels.find_witness_scan(res, n) == _kernels_py.find_witness_scan(
                res, n
            )

    print(f"{'backend':<8} {'count_residue':>15} {'witness_scan':>15}")
    for name, tc, ts in rows:
        print(f"{name:<8} {tc:>13.3f}s {ts:>13.3f}s")
    if _kernels is not None:
        print(
            f"speedup  {py_count / cy_count:>13.1f}x {py_scan / cy_scan:>13.1f}x"
        )
    else:
        print("compiled kernels not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
