"""Hot numeric kernels with a numba fast path and a pure-Python fallback.

Set CHIBOUND_DISABLE_NUMBA=1 to force the fallback path.  Both paths are
differential-tested against each other; benchmarks/bench_kernels.py
compares their throughput.

Kernels:
  canonical_code  -- lexicographically minimal adjacency bit-string over
                     all vertex permutations (column-major upper triangle,
                     the graph6 bit order), as an integer.
  clique_number_sub -- clique number of the subgraph induced on a
                     candidate bitmask, by branch and bound.
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_NUMBA = os.environ.get("CHIBOUND_DISABLE_NUMBA", "").strip() not in ("", "0")

NUMBA_OK = False
if not DISABLE_NUMBA:
    try:
        from numba import njit

        NUMBA_OK = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_OK = False


# ---------------------------------------------------------------- pure path

def canon_code_py(adj, n: int) -> int:
    """Min adjacency code over all permutations, DFS with prefix pruning."""
    if n <= 1:
        return 0
    total = n * (n - 1) // 2
    best = 0
    for j in range(1, n):
        for i in range(j):
            best = (best << 1) | (adj[i] >> j & 1)
    perm = [0] * n

    def rec(pos, used, cur, bits_done):
        nonlocal best
        if pos == n:
            if cur < best:
                best = cur
            return
        for v in range(n):
            if used >> v & 1:
                continue
            chunk = 0
            for j in range(pos):
                chunk = (chunk << 1) | (adj[perm[j]] >> v & 1)
            cur2 = (cur << pos) | chunk
            bits2 = bits_done + pos
            if cur2 > best >> (total - bits2):
                continue
            perm[pos] = v
            rec(pos + 1, used | (1 << v), cur2, bits2)

    rec(0, 0, 0, 0)
    return best


def clique_number_sub_py(adj, cand: int) -> int:
    best = 0

    def rec(size, cand):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(size + 1, cand & adj[v])

    rec(0, cand)
    return best


# --------------------------------------------------------------- numba path

if NUMBA_OK:

    @njit(cache=True)
    def _popcount64(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))

    @njit(cache=True)
    def _canon_code_nb(adj, n):
        total = n * (n - 1) // 2
        best = np.int64(0)
        for j in range(1, n):
            for i in range(j):
                best = (best << 1) | np.int64((adj[i] >> np.uint64(j)) & np.uint64(1))
        perm = np.zeros(n, np.int64)
        nextv = np.zeros(n + 1, np.int64)
        curs = np.zeros(n + 1, np.int64)
        bitsd = np.zeros(n + 1, np.int64)
        used = np.int64(0)
        pos = 0
        while True:
            if pos == n:
                if curs[n] < best:
                    best = curs[n]
                pos -= 1
                used &= ~(np.int64(1) << perm[pos])
                continue
            found = False
            v = nextv[pos]
            while v < n:
                if not (used >> v) & 1:
                    chunk = np.int64(0)
                    for j in range(pos):
                        chunk = (chunk << 1) | np.int64((adj[perm[j]] >> np.uint64(v)) & np.uint64(1))
                    cur2 = (curs[pos] << pos) | chunk
                    bits2 = bitsd[pos] + pos
                    if cur2 <= best >> (total - bits2):
                        perm[pos] = v
                        used |= np.int64(1) << v
                        nextv[pos] = v + 1
                        pos += 1
                        nextv[pos] = 0
                        curs[pos] = cur2
                        bitsd[pos] = bits2
                        found = True
                        break
                v += 1
            if not found:
                if pos == 0:
                    break
                pos -= 1
                used &= ~(np.int64(1) << perm[pos])
        return best

    @njit(cache=True)
    def _clique_number_sub_nb(adj, cand0):
        best = 0
        cands = np.zeros(66, np.uint64)
        cands[0] = cand0
        depth = 0
        while depth >= 0:
            cand = cands[depth]
            if depth > best:
                best = depth
            if cand != np.uint64(0) and depth + _popcount64(cand) > best:
                low = cand & (~cand + np.uint64(1))
                v = _popcount64(low - np.uint64(1))
                rest = cand ^ low
                cands[depth] = rest
                cands[depth + 1] = rest & adj[v]
                depth += 1
            else:
                depth -= 1
        return best


# ----------------------------------------------------------------- dispatch

_CANON_NUMBA_MAX_N = 11  # keeps the code within a signed 64-bit integer


def canonical_code(adj, n: int) -> int:
    """Canonical form of a graph as the minimal adjacency code."""
    if n <= 1:
        return 0
    if NUMBA_OK and n <= _CANON_NUMBA_MAX_N:
        arr = np.array(adj, dtype=np.uint64)
        return int(_canon_code_nb(arr, n))
    return canon_code_py(adj, n)


def clique_number_sub(adj, cand: int) -> int:
    """Clique number of the subgraph induced on the bitmask cand."""
    if NUMBA_OK and len(adj) <= 64:
        arr = np.array(adj, dtype=np.uint64)
        return int(_clique_number_sub_nb(arr, np.uint64(cand)))
    return clique_number_sub_py(adj, cand)
