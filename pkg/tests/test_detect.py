import random
from itertools import permutations

import pytest

from chibound.classes import get_class
from chibound.detect import (Conditions, contains_induced, diamond_free_fast,
                             every_edge_two_triangles, find_induced,
                             is_isomorphic, is_member, make_class)
from chibound.graph import Graph, from_edges
from chibound.patterns import (bowtie, complete, diamond, make_pattern, path)


def _naive_contains(host, pattern):
    """Try every injection directly; independent oracle for find_induced."""
    if pattern.n > host.n:
        return False
    for perm in permutations(range(host.n), pattern.n):
        ok = True
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.has_edge(i, j) != host.has_edge(perm[i], perm[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def _random_graph(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def test_find_induced_against_naive_oracle():
    rng = random.Random(11)
    patterns = [path(3), path(4), diamond(), complete(3), bowtie(2, 2)]
    for _ in range(150):
        host = _random_graph(rng, rng.randrange(1, 8), rng.random())
        for pat in patterns:
            got = find_induced(host, pat)
            assert (got is not None) == _naive_contains(host, pat)
            if got is not None:
                # embedding really is induced
                for i in range(pat.n):
                    for j in range(i + 1, pat.n):
                        assert pat.has_edge(i, j) == host.has_edge(got[i], got[j])


def test_find_induced_is_deterministic_lex_first():
    host = complete(5)
    assert find_induced(host, complete(3)) == (0, 1, 2)
    with pytest.raises(ValueError):
        find_induced(host, Graph(0, []))
    assert find_induced(complete(2), complete(3)) is None


def test_is_isomorphic():
    a = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, from_edges(4, [(0, 1), (1, 2), (2, 0)]))
    assert is_isomorphic(Graph(0, []), Graph(0, []))


def test_diamond_free_fast_matches_induced_search():
    rng = random.Random(3)
    for _ in range(200):
        g = _random_graph(rng, rng.randrange(1, 8), rng.random())
        free, witness = diamond_free_fast(g)
        assert free == (not contains_induced(g, diamond()))
        if not free:
            u, v, a, b = witness
            assert g.has_edge(u, v) and g.has_edge(u, a) and g.has_edge(v, a)
            assert g.has_edge(u, b) and g.has_edge(v, b) and not g.has_edge(a, b)


def test_every_edge_two_triangles():
    assert every_edge_two_triangles(complete(4))
    ok, edge = every_edge_two_triangles(complete(3), witness=True)
    assert not ok and edge == (0, 1)
    assert every_edge_two_triangles(Graph(1, [0]))


def test_is_member_reports_violation():
    spec = get_class("diamond-free")
    rep = is_member(diamond(), spec)
    assert not rep
    assert rep.violated == "diamond"
    assert rep.witness is not None
    assert is_member(path(4), spec)


def test_conditions_in_membership():
    spec = make_class([make_pattern("diamond")],
                      conditions=Conditions(every_edge_in_two_triangles=True))
    assert not is_member(complete(3), spec)
    assert is_member(complete(4), spec)
    spec2 = make_class([], conditions=Conditions(min_omega=3))
    assert is_member(complete(3), spec2)
    assert not is_member(path(4), spec2)


def test_make_class_rejects_empty():
    with pytest.raises(ValueError):
        make_class([])
    with pytest.raises(TypeError):
        make_class([diamond()])  # raw Graph, not a PatternInstance
