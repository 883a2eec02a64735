#!/usr/bin/env python3
"""Compare the pure-Python and compiled census kernels.

Usage: python3 benchmarks/bench_census.py [--radius N] [--repeats K]
"""

import argparse
import statistics
import time

from cayleypotts.families import parse_family, random_config
from cayleypotts.kernels import available_backends, census_classes
from cayleypotts.words import ball_size


def bench(values, n_centers, backend, repeats):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = census_classes(values, n_centers, backend=backend)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=7)
    ap.add_argument("--repeats", type=int, default=9)
    args = ap.parse_args()

    backends = available_backends()
    configs = [
        ("xi7:1,2,3", parse_family("xi7:1,2,3")),
        ("random:99", random_config(args.radius, seed=99)),
    ]
    n_centers = ball_size(args.radius - 1)

    print(f"radius {args.radius}: {ball_size(args.radius)} values, "
          f"{n_centers} centers, backends {backends}")
    header = f"{'config':>12} {'backend':>9} {'best':>10} {'median':>10}"
    print(header)
    print("-" * len(header))
    for label, cfg in configs:
        values = cfg.values(args.radius)
        rows = {}
        for backend in backends:
            best, med, result = bench(values, n_centers, backend, args.repeats)
            rows[backend] = (best, result)
            print(f"{label:>12} {backend:>9} {best * 1e3:>8.2f}ms "
                  f"{med * 1e3:>8.2f}ms")
        if len(rows) == 2:
            assert rows["pure"][1] == rows["compiled"][1], "backends disagree"
            speedup = rows["pure"][0] / rows["compiled"][0]
            print(f"{label:>12} {'speedup':>9} {speedup:>9.1f}x")


if __name__ == "__main__":
    main()
