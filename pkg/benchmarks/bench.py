#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure numpy/python fallbacks.

Usage:
    python benchmarks/bench.py [--quick]

Covers the three hot paths: domination checking over a construction sweep,
greedy completion, and the branch-and-bound optimality proof. The first
numba call per kernel includes JIT compilation; a warmup run keeps that
out of the numbers.
"""

import argparse
import sys
import time

import numpy as np

import mixdom as md
from mixdom import _kernels
from mixdom.elements import ElementSet


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_verify_sweep(n_max, use_numba):
    graphs = [md.build(n, 1) for n in range(8, n_max + 1)]
    sets = [md.construct_k1(g.n).elements for g in graphs]

    def run():
        for g, s in zip(graphs, sets):
            counts = _kernels.coverage_counts(g.nbrs, s.mask, use_numba=use_numba)
            assert (counts > 0).all()

    return timed(run)


def bench_greedy(n, use_numba):
    g = md.build(n, 2)
    empty = np.zeros(5 * n, dtype=bool)

    def run():
        _kernels.greedy_fill(g.nbrs, empty, use_numba=use_numba)

    return timed(run)


def bench_solver(n, k, use_numba):
    g = md.build(n, k)

    def run():
        res = md.solve_exact(g, use_numba=use_numba)
        assert res.proved

    return timed(run, repeat=1)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args(argv)

    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1
    if not _kernels.numba_enabled():
        print(f"note: {_kernels.ENV_FLAG} is set; forcing numba on for the comparison")

    sweep_max = 300 if args.quick else 1000
    greedy_n = 200 if args.quick else 600
    solver_cases = [(12, 1), (12, 2)] if args.quick else [(14, 1), (13, 3), (12, 5)]

    # warmup compiles every kernel once
    md.solve_exact(md.build(8, 1), use_numba=True)
    _kernels.coverage_counts(md.build(8, 1).nbrs, np.zeros(40, dtype=bool), use_numba=True)

    rows = []
    rows.append((f"verify sweep k=1 n=8..{sweep_max}",
                 bench_verify_sweep(sweep_max, False),
                 bench_verify_sweep(sweep_max, True)))
    rows.append((f"greedy completion P({greedy_n},2)",
                 bench_greedy(greedy_n, False),
                 bench_greedy(greedy_n, True)))
    for n, k in solver_cases:
        rows.append((f"solver proof P({n},{k})",
                     bench_solver(n, k, False),
                     bench_solver(n, k, True)))

    print(f"{'workload':<34} {'fallback':>10} {'numba':>10} {'speedup':>8}")
    for label, t_py, t_nb in rows:
        print(f"{label:<34} {t_py:>9.4f}s {t_nb:>9.4f}s {t_py / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
