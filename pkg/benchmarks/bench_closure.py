"""Compare the compiled and the pure-numpy frontier kernels.

Runs the same forward-closure workload through both backends and prints
wall-clock timings.  The compiled path includes a warm-up call so the
numbers reflect steady-state throughput, not compilation time.

Usage: python benchmarks/bench_closure.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cohnibn import family, incidence, monoid_presentation
from cohnibn._kernels import NUMBA_ENABLED, _expand_frontier_loops, expand_frontier_numpy
from cohnibn.rewriting import _rule_dsum


def _workload():
    graph, _ = family(6, 3)
    rs = monoid_presentation(incidence(graph))
    dsum = _rule_dsum(rs)
    rng = np.random.default_rng(7)
    frontier = rng.integers(0, 5, size=(4000, rs.num_generators)).astype(np.int64)
    totals = frontier.sum(axis=1)
    return rs, dsum, frontier, totals


def _time(fn, rs, dsum, frontier, totals, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(frontier, totals, rs.rule_index, rs.rule_add, dsum, 200)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    rs, dsum, frontier, totals = _workload()
    print(f"workload: {frontier.shape[0]} states, "
          f"{rs.num_generators} generators, {rs.num_rules} rules")

    t_numpy = _time(expand_frontier_numpy, rs, dsum, frontier, totals,
                    args.repeats)
    print(f"numpy    : {t_numpy * 1e3:8.3f} ms per expansion")

    if NUMBA_ENABLED:
        from cohnibn._kernels import expand_frontier_jit

        expand_frontier_jit(frontier[:8], totals[:8], rs.rule_index,
                            rs.rule_add, dsum, 200)  # warm up compilation
        t_jit = _time(expand_frontier_jit, rs, dsum, frontier, totals,
                      args.repeats)
        print(f"numba    : {t_jit * 1e3:8.3f} ms per expansion")
        print(f"speedup  : {t_numpy / t_jit:8.2f}x (numba over numpy)")
    else:
        t_loops = _time(_expand_frontier_loops, rs, dsum, frontier, totals,
                        args.repeats)
        print(f"loops    : {t_loops * 1e3:8.3f} ms per expansion "
              "(numba disabled, interpreted fallback)")


if __name__ == "__main__":
    main()
