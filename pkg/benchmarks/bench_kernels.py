#!/usr/bin/env python3
"""Timing comparison of the pure-Python and compiled enumeration kernels.

Runs the two hot loops (cycle-subset certificate scan, exponent-box scan) on
identical workloads through every available backend and prints a table with
the speedup. Results are asserted equal across backends before timing is
reported.

Usage:
    python benchmarks/bench_kernels.py            # quick set
    python benchmarks/bench_kernels.py --full     # adds the larger workloads
    python benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import time

from coverdepth import make_cycle
from coverdepth._kernels import available_backends


def _vmasks(n):
    return [sum(1 << (v - 1) for v in e) for e in make_cycle(n).edges]


def workloads(full: bool):
    out = [
        ("cycle n=16 t=2", "cycle", (16, 2)),
        ("cycle n=18 t=2", "cycle", (18, 2)),
        ("cycle n=18 t=3", "cycle", (18, 3)),
        ("box   C_10 t=2", "box", (10, 2)),
        ("box   C_12 t=2", "box", (12, 2)),
        ("box   C_10 t=3", "box", (10, 3)),
    ]
    if full:
        out += [
            ("cycle n=20 t=2", "cycle", (20, 2)),
            ("cycle n=21 t=3", "cycle", (21, 3)),
            ("box   C_12 t=3", "box", (12, 3)),
            ("box   C_10 t=4", "box", (10, 4)),
        ]
    return out


def run_once(backend, kind, params):
    if kind == "cycle":
        n, t = params
        return backend.cycle_admissible_masks(n, t, 1, (1 << n) - 1)
    n, t = params
    return backend.box_admissible_masks(_vmasks(n), n, t)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true", help="include larger workloads")
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    backends = available_backends()
    names = list(backends)
    print(f"backends: {', '.join(names)}")
    header = f"{'workload':<16}" + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, kind, params in workloads(args.full):
        timings = {}
        results = {}
        for name in names:
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                results[name] = run_once(backends[name], kind, params)
                best = min(best, time.perf_counter() - start)
            timings[name] = best
        first = results[names[0]]
        assert all(results[name] == first for name in names[1:]), label
        row = f"{label:<16}" + "".join(f"{timings[name]:>11.3f}s" for name in names)
        if len(names) == 2:
            row += f"{timings['pure'] / timings['compiled']:>9.1f}x"
        row += f"   ({len(first)} masks)"
        print(row)


if __name__ == "__main__":
    main()
