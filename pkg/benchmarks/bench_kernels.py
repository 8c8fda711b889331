"""Benchmark the numba kernels against their pure-Python fallbacks.

Usage:
    python3 benchmarks/bench_kernels.py [--seed N] [--repeat N]

Compares, on the same random inputs:
  canonical_code    (numba path, n <= 11)  vs  canon_code_py
  clique_number_sub (numba path, n <= 64)  vs  clique_number_sub_py

The numba functions are called once before timing so JIT compilation is
not charged to the measurement.  Setting CHIBOUND_DISABLE_NUMBA=1 makes
the script report that only the pure path is available.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chibound import kernels  # noqa: E402
from chibound.graph import Graph  # noqa: E402


def random_graph(n, edge_prob, rng):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def time_fn(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in inputs:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_canonical(rng, repeat):
    graphs = [random_graph(n, 0.5, rng) for n in (6, 7, 8, 9) for _ in range(8)]
    inputs = [(g.adj, g.n) for g in graphs]
    pure = time_fn(lambda adj, n: kernels.canon_code_py(adj, n), inputs, repeat)
    if not kernels.NUMBA_OK:
        return pure, None, len(inputs)
    import numpy as np

    def nb(adj, n):
        return int(kernels._canon_code_nb(np.array(adj, dtype=np.uint64), n))

    nb(*inputs[0])  # warm the JIT
    for args in inputs:
        assert nb(*args) == kernels.canon_code_py(*args)
    return pure, time_fn(nb, inputs, repeat), len(inputs)


def bench_clique(rng, repeat):
    graphs = [random_graph(n, 0.6, rng) for n in (16, 24, 32) for _ in range(8)]
    inputs = [(g.adj, g.full_mask()) for g in graphs]
    pure = time_fn(lambda adj, cand: kernels.clique_number_sub_py(adj, cand),
                   inputs, repeat)
    if not kernels.NUMBA_OK:
        return pure, None, len(inputs)
    import numpy as np

    def nb(adj, cand):
        return int(kernels._clique_number_sub_nb(
            np.array(adj, dtype=np.uint64), np.uint64(cand)))

    nb(*inputs[0])  # warm the JIT
    for args in inputs:
        assert nb(*args) == kernels.clique_number_sub_py(*args)
    return pure, time_fn(nb, inputs, repeat), len(inputs)


def report(name, pure, fast, count):
    print(f"{name}: {count} inputs")
    print(f"  pure python : {pure * 1e3:9.2f} ms")
    if fast is None:
        print("  numba       : unavailable (CHIBOUND_DISABLE_NUMBA set or "
              "numba missing)")
    else:
        print(f"  numba       : {fast * 1e3:9.2f} ms   "
              f"(speedup {pure / fast:.1f}x)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions; best run is reported")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"numba available: {kernels.NUMBA_OK}")
    report("canonical_code", *bench_canonical(rng, args.repeat))
    report("clique_number_sub", *bench_clique(rng, args.repeat))


if __name__ == "__main__":
    main()
