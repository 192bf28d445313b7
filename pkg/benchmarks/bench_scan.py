#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python fallback.

Three workloads dominate the package's runtime:
  * full anisotropy scans (no witness, every candidate visited),
  * witness-hunting scans (early exit, called hundreds of thousands of times),
  * the mod-p^3 congruence sweep.

Run:  python benchmarks/bench_scan.py
"""

import itertools
import time

from delpezzo import scan
from delpezzo.quadform import DiagQF, find_common_isotropic
from delpezzo.scan import congruence_witness


def timed(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def full_scan(impl):
    # anisotropic pair: 14.3M candidates over F_243, no early exit
    Q1, Q2 = DiagQF([1, 1, 1, 1]), DiagQF([1, 2, 1, 2])
    assert find_common_isotropic(Q1, Q2, (3, 5), impl=impl) is None


def witness_batch(impl):
    # 2'000 short scans over F_13, the shape of the coverage harnesses
    pairs = itertools.islice(
        itertools.product(range(1, 13), range(1, 13), range(1, 13)), 2000)
    for a, b, c in pairs:
        Q1, Q2 = DiagQF([1, a, b, 3, 5]), DiagQF([1, c, 7, 11, 2])
        assert find_common_isotropic(Q1, Q2, (13, 1), impl=impl) is not None


def congruence(impl):
    # empty sweep mod 343 (the slowest case: nothing to find)
    assert congruence_witness(7, 3, impl=impl) is None


def main():
    impls = sorted(scan.IMPLEMENTATIONS)
    if len(impls) < 2:
        print("compiled kernel not available; benchmarking fallback only")
    workloads = [
        ("full scan, F_243 quaternary pair (14.3M candidates)", full_scan, 1),
        ("2000 witness scans, F_13 quinary pairs", witness_batch, 2),
        ("congruence sweep mod 343 (117k-pair folded sweep)", congruence, 2),
    ]
    print(f"{'workload':<55} " + " ".join(f"{i:>12}" for i in impls) + "  speedup")
    for name, fn, repeat in workloads:
        times = {impl: timed(lambda: fn(impl), repeat) for impl in impls}
        cols = " ".join(f"{times[i]:>11.3f}s" for i in impls)
        if "compiled" in times and "python" in times:
            ratio = times["python"] / times["compiled"]
            print(f"{name:<55} {cols}  {ratio:6.1f}x")
        else:
            print(f"{name:<55} {cols}")


if __name__ == "__main__":
    main()
