#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-python fallback.

The same branch-and-bound runs on both backends (identical values and
witnesses); this measures the speedup on representative instances.  The
first numba call per kernel includes JIT compilation, so a warmup pass runs
before timing.

Usage: python benchmarks/bench_solver.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from satnum import build_family
from satnum.solver import SolverCaps, saturation_exact

CASES = [
    ("cycle(18)", "small cycle"),
    ("wheel(14)", "wheel"),
    ("corona(cycle(5),cycle(4))", "25-vertex corona"),
    ("chaincyc(7,3,2)", "19-vertex cycle chain"),
    ("linkcyc(6,5,1)", "30-vertex cycle link"),
    ("linkcyc(7,5,3)", "35-vertex cycle link"),
    ("linkcyc(8,5,1)", "40-vertex cycle link"),
]

CAPS = SolverCaps(max_n_exact=40, max_n_matching=64)


def time_backend(graph, backend: str, repeat: int) -> tuple[float, int]:
    best = float("inf")
    value = -1
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = saturation_exact(graph, CAPS, backend=backend).value
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per case (best is reported)")
    args = parser.parse_args()

    warm = build_family("cycle(9)")
    print("warming up numba kernels (includes JIT compilation)...")
    t0 = time.perf_counter()
    saturation_exact(warm, CAPS, backend="numba")
    print(f"warmup: {time.perf_counter() - t0:.2f}s\n")

    header = f"{'instance':28s} {'description':24s} {'s(G)':>5s} {'numba':>10s} {'python':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for expr, desc in CASES:
        g = build_family(expr)
        t_numba, v1 = time_backend(g, "numba", args.repeat)
        t_python, v2 = time_backend(g, "python", args.repeat)
        assert v1 == v2, f"backend disagreement on {expr}: {v1} != {v2}"
        ratio = t_python / t_numba if t_numba > 0 else float("inf")
        print(f"{expr:28s} {desc:24s} {v1:5d} {t_numba * 1e3:9.2f}ms "
              f"{t_python * 1e3:9.2f}ms {ratio:7.1f}x")


if __name__ == "__main__":
    main()
