import random
from itertools import combinations, permutations

import pytest

from chibound import kernels
from chibound.graph import Graph, is_clique, mask_of


def _random_adj(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _code_of_perm(adj, n, perm):
    code = 0
    for j in range(1, n):
        for i in range(j):
            code = (code << 1) | (adj[perm[i]] >> perm[j] & 1)
    return code


def _canon_bruteforce(adj, n):
    return min(_code_of_perm(adj, n, p) for p in permutations(range(n)))


def _clique_bruteforce(adj, cand):
    g = Graph(len(adj), adj)
    verts = [v for v in range(len(adj)) if cand >> v & 1]
    for size in range(len(verts), 0, -1):
        for combo in combinations(verts, size):
            if is_clique(g, mask_of(combo)):
                return size
    return 0


def test_canon_pure_vs_bruteforce():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randrange(1, 7)
        adj = _random_adj(rng, n, rng.random())
        assert kernels.canon_code_py(adj, n) == _canon_bruteforce(adj, n)


def test_canon_dispatch_matches_pure():
    rng = random.Random(6)
    for _ in range(120):
        n = rng.randrange(1, 9)
        adj = _random_adj(rng, n, rng.random())
        assert kernels.canonical_code(adj, n) == kernels.canon_code_py(adj, n)


def test_canon_invariant_under_relabeling():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randrange(2, 7)
        adj = _random_adj(rng, n, 0.5)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [0] * n
        for i in range(n):
            for j in range(n):
                if adj[i] >> j & 1:
                    relabeled[perm[i]] |= 1 << perm[j]
        assert (kernels.canonical_code(adj, n)
                == kernels.canonical_code(relabeled, n))


def test_clique_kernel_vs_bruteforce():
    rng = random.Random(9)
    for _ in range(120):
        n = rng.randrange(1, 9)
        adj = _random_adj(rng, n, rng.random())
        cand = rng.randrange(1 << n)
        expect = _clique_bruteforce(adj, cand)
        assert kernels.clique_number_sub(adj, cand) == expect
        assert kernels.clique_number_sub_py(adj, cand) == expect


def test_clique_kernel_beyond_numba_width():
    # 70 vertices falls back to the pure path (mask wider than 64 bits)
    n = 70
    adj = [0] * n
    trio = [10, 40, 69]
    for i in trio:
        for j in trio:
            if i != j:
                adj[i] |= 1 << j
    assert kernels.clique_number_sub(adj, (1 << n) - 1) == 3


def test_trivial_codes():
    assert kernels.canonical_code([0], 1) == 0
    assert kernels.canonical_code([], 0) == 0
    # K3 has all bits set: code 0b111
    k3 = [0b110, 0b101, 0b011]
    assert kernels.canonical_code(k3, 3) == 0b111
