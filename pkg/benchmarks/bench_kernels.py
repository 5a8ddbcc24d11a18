"""Benchmark the compiled integer kernels against the pure-Python fallbacks.

Three workloads, each exercising a hot path of the library:

  rank-lifted   Bareiss rank of the lifted vertex matrix of pq(11,5,3)
                (55 rows x 122 columns of 0/1 entries).
  gram-table    full 55 x 55 agreement table of pq(11,5,3).
  face-lattice  end-to-end face lattice of dihedral:5 (brute-force facets,
                closure under intersection, one subset rank per face).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from frobtope import ExactPolytope, build_dihedral, build_pq, vertex_matrices
from frobtope.kernels import compiled_available, force_pure, gram_table, matrix_rank


def time_call(fn, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def workload_rank_lifted():
    system = build_pq(11, 5, 3)
    rows = [list(v.flat()) + [1] for v in vertex_matrices(system)]

    def run():
        assert matrix_rank(rows) == 51

    return run


def workload_gram_table():
    system = build_pq(11, 5, 3)
    images = [g.images for g in system.elements]

    def run():
        table = gram_table(images)
        assert table[0][0] == 11

    return run


def workload_face_lattice():
    system = build_dihedral(5)
    points = [v.entries for v in vertex_matrices(system)]

    def run():
        poly = ExactPolytope(points)
        result = poly.face_lattice()
        assert result.fvector[-2] == 25

    return run


WORKLOADS = [
    ("rank-lifted", workload_rank_lifted),
    ("gram-table", workload_gram_table),
    ("face-lattice", workload_face_lattice),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="best-of-N timing (default 5)")
    args = parser.parse_args()

    if not compiled_available():
        print("compiled kernels unavailable; timing the pure-Python path only")

    header = f"{'workload':<14} {'compiled':>12} {'pure':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, factory in WORKLOADS:
        run = factory()
        with force_pure():
            pure = time_call(run, args.repeat)
        if compiled_available():
            fast = time_call(run, args.repeat)
            print(f"{name:<14} {fast * 1e3:>10.2f}ms {pure * 1e3:>10.2f}ms {pure / fast:>8.1f}x")
        else:
            print(f"{name:<14} {'-':>12} {pure * 1e3:>10.2f}ms {'-':>9}")


if __name__ == "__main__":
    main()
