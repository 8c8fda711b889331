"""Exhaustive enumeration of small graphs and class-constrained sampling."""

from __future__ import annotations

import random
from functools import lru_cache

from . import kernels
from .detect import ClassSpec, is_member
from .graph import Graph
from .kernels import canonical_code

ENUM_CAP = 8


class EnumerationCapExceeded(ValueError):
    def __init__(self, n: int):
        super().__init__(
            f"internal enumerator is capped at n={ENUM_CAP} (asked for {n}); "
            "supply a graph6 file from an external enumerator for larger sweeps"
        )


def graph_from_code(code: int, n: int) -> Graph:
    """Inverse of the adjacency code (column-major upper triangle)."""
    adj = [0] * n
    total = n * (n - 1) // 2
    bit = total - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit -= 1
    return Graph(n, adj)


def canonical_form(g: Graph) -> int:
    return canonical_code(g.adj, g.n)


@lru_cache(maxsize=None)
def enumerate_codes(n: int):
    """Sorted canonical codes of all isomorphism classes on exactly n vertices."""
    if n > ENUM_CAP:
        raise EnumerationCapExceeded(n)
    if n < 1:
        return ()
    if n > 2:
        level = set(enumerate_codes(n - 1))
        start = n
    else:
        level = {0}
        start = 2
    for m in range(start, n + 1):
        nxt = set()
        for code in level:
            base = graph_from_code(code, m - 1)
            adj = list(base.adj) + [0]
            for nbrs in range(1 << (m - 1)):
                rows = list(adj)
                rows[m - 1] = nbrs
                for v in range(m - 1):
                    if nbrs >> v & 1:
                        rows[v] |= 1 << (m - 1)
                nxt.add(kernels.canonical_code(rows, m))
        level = nxt
    return tuple(sorted(level))


def enumerate_small(n_max: int):
    """Yield one representative per isomorphism class for 1..n_max vertices."""
    if n_max > ENUM_CAP:
        raise EnumerationCapExceeded(n_max)
    for n in range(1, n_max + 1):
        for code in enumerate_codes(n):
            yield graph_from_code(code, n)


class RejectionBudgetExhausted(RuntimeError):
    def __init__(self, spec: ClassSpec, n: int, budget: int):
        super().__init__(
            f"no member of {spec.label()} found on n={n} vertices "
            f"within {budget} rejection-sampling attempts"
        )


def sample_in_class(spec: ClassSpec, n: int, edge_prob: float, seed: int,
                    count: int, budget: int = 20000):
    """Rejection-sample `count` members of the class, deterministically per seed.

    Uses random.Random (Mersenne Twister), so sequences reproduce across
    platforms for a fixed seed.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        for _ in range(budget):
            adj = [0] * n
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < edge_prob:
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            g = Graph(n, adj)
            if is_member(g, spec):
                yield g
                produced += 1
                break
        else:
            raise RejectionBudgetExhausted(spec, n, budget)
