#!/usr/bin/env python3
"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Times mif_count (and optionally mif_masks) per ground-set size and
prints a comparison table.  Run after installing the package:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --ks 5 6 7 --masks
"""

from __future__ import annotations

import argparse
import time

from orcov import _purecore

try:
    from orcov import _fastcore
except ImportError:
    _fastcore = None


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ks", type=int, nargs="+", default=[4, 5, 6, 7])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--masks", action="store_true", help="also time full enumeration")
    args = parser.parse_args()

    backends = [("pure", _purecore)]
    if _fastcore is not None:
        backends.append(("compiled", _fastcore))
    else:
        print("note: compiled kernel not built; timing pure Python only")

    print(f"{'op':<12} {'k':>2} {'count':>9} " + "".join(f"{name:>12}" for name, _ in backends) + ("    speedup" if len(backends) == 2 else ""))
    ops = [("mif_count", "mif_count")]
    if args.masks:
        ops.append(("mif_masks", "mif_masks"))
    for label, attr in ops:
        for k in args.ks:
            count = _purecore.mif_count(k) if k <= 6 else None
            times = []
            for _, impl in backends:
                fn = getattr(impl, attr)
                times.append(best_of(lambda: fn(k), args.repeats))
            if count is None:
                count = backends[-1][1].mif_count(k)
            row = f"{label:<12} {k:>2} {count:>9} " + "".join(
                f"{t:>11.4f}s" for t in times
            )
            if len(times) == 2 and times[1] > 0:
                row += f"    {times[0] / times[1]:>6.1f}x"
            print(row)


if __name__ == "__main__":
    main()
