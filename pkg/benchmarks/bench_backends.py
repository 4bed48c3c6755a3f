#!/usr/bin/env python3
"""Benchmark: compiled double-interval kernel vs pure-Python MPFR backend.

Times the composite geometry kernels and one end-to-end proof workload on
each backend. Run: python3 benchmarks/bench_backends.py
"""

import time

from bubbleproof.backend import HAVE_KERNEL, KernelBackend, PyBackend
from bubbleproof import backend as backend_mod
from bubbleproof.bounds import Rect
from bubbleproof.enclosure import SlackConfig
from bubbleproof.engine import CLAIMS, sweep_band_h3, verify_rectangle_s3

SLACK = SlackConfig()


def time_call(fn, *args, target=0.4):
    n, total = 0, 0.0
    t0 = time.perf_counter()
    while total < target:
        fn(*args)
        n += 1
        total = time.perf_counter() - t0
    return total / n


def bench_composites():
    backends = [("python-mpfr", PyBackend(53))]
    if HAVE_KERNEL:
        backends.append(("compiled-double", KernelBackend()))
    cases = [
        ("s3_sphere_volume", lambda b: b.s3_sphere_volume(1.1)),
        ("s3_equal_volume", lambda b: b.s3_equal_volume(1.3)),
        ("s3_sdb", lambda b: b.s3_sdb(0.9, 1.3)),
        ("h3_sphere_volume_k", lambda b: b.h3_sphere_volume_k(1.85)),
        ("h3_sdb", lambda b: b.h3_sdb(1.849, 1.787)),
    ]
    results = {}
    for bname, be in backends:
        for cname, call in cases:
            results[(cname, bname)] = time_call(call, be)
    print(f"{'composite kernel':22s} {'python-mpfr':>14s} "
          f"{'compiled':>14s} {'speedup':>9s}")
    for cname, _ in cases:
        py = results[(cname, "python-mpfr")]
        row = f"{cname:22s} {py * 1e6:>12.1f}us"
        if HAVE_KERNEL:
            ck = results[(cname, "compiled-double")]
            row += f" {ck * 1e6:>12.1f}us {py / ck:>8.1f}x"
        print(row)


def bench_workloads():
    from fractions import Fraction

    jobs = [
        ("S3 rectangle proof (quarter domain)",
         lambda: verify_rectangle_s3(
             Rect(Fraction(1, 10), Fraction(1, 10),
                  Fraction(13, 60), Fraction(13, 60)), slack=SLACK)),
        ("H3 band sweep (8 rows of the 0.85..15 claim)",
         lambda: sweep_band_h3(CLAIMS["5.12"], slack=SLACK, row_limit=8)),
    ]
    modes = [(False, "compiled-double")] if HAVE_KERNEL else []
    modes.append((True, "python-mpfr"))
    print()
    print(f"{'workload':46s} " + "".join(f"{name:>16s}" for _, name in modes))
    for label, job in jobs:
        row = f"{label:46s} "
        for force_py, _ in modes:
            backend_mod.force_python_backend(force_py)
            t0 = time.perf_counter()
            out = job()
            dt = time.perf_counter() - t0
            assert out["outcome"] == "proved"
            row += f"{dt:>14.2f}s "
        print(row)
    backend_mod.force_python_backend(False)


if __name__ == "__main__":
    print(f"compiled kernel available: {HAVE_KERNEL}\n")
    bench_composites()
    bench_workloads()
