from itertools import permutations

import pytest

from chibound.classes import get_class
from chibound.detect import is_member, make_class
from chibound.graph import Graph
from chibound.patterns import make_pattern
from chibound.smallgraphs import (ENUM_CAP, EnumerationCapExceeded,
                                  RejectionBudgetExhausted, canonical_form,
                                  enumerate_codes, enumerate_small,
                                  graph_from_code, sample_in_class)

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


@pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
def test_enumeration_counts(n, count):
    assert len(enumerate_codes(n)) == count


def test_enumeration_counts_bruteforce_crosscheck():
    # independent count at n = 4 by classing all 2^6 graphs under permutations
    n = 4
    classes = set()
    for code in range(1 << 6):
        g = graph_from_code(code, n)
        best = None
        for perm in permutations(range(n)):
            c = 0
            for j in range(1, n):
                for i in range(j):
                    c = (c << 1) | (g.adj[perm[i]] >> perm[j] & 1)
            best = c if best is None else min(best, c)
        classes.add(best)
    assert len(classes) == KNOWN_COUNTS[n]
    assert classes == set(enumerate_codes(n))


def test_enumerate_small_yields_valid_canonical_graphs():
    seen = []
    for g in enumerate_small(5):
        g.validate()
        seen.append((g.n, canonical_form(g)))
    assert len(seen) == len(set(seen))  # no isomorphic duplicates
    assert len(seen) == sum(KNOWN_COUNTS[n] for n in range(1, 6))


def test_graph_from_code_roundtrip():
    for g in enumerate_small(5):
        assert graph_from_code(canonical_form(g), g.n).n == g.n
        assert canonical_form(graph_from_code(canonical_form(g), g.n)) \
            == canonical_form(g)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_small(ENUM_CAP + 1))


def test_sampling_is_deterministic_and_in_class():
    spec = get_class("diamond-free")
    a = list(sample_in_class(spec, 8, 0.3, seed=1, count=10))
    b = list(sample_in_class(spec, 8, 0.3, seed=1, count=10))
    assert a == b
    assert len(a) == 10
    for g in a:
        assert is_member(g, spec)
    c = list(sample_in_class(spec, 8, 0.3, seed=2, count=10))
    assert c != a


def test_sampling_budget_exhaustion():
    # forbidding K1 makes every nonempty graph a non-member
    spec = make_class([make_pattern("complete", t=1)], id="empty-class")
    with pytest.raises(RejectionBudgetExhausted):
        list(sample_in_class(spec, 4, 0.5, seed=0, count=1, budget=50))


def test_sampling_trivial_class_accepts_first():
    spec = get_class("diamond-free")
    # p = 0 gives the edgeless graph, trivially diamond-free
    gs = list(sample_in_class(spec, 5, 0.0, seed=3, count=1))
    assert gs[0] == Graph(5, [0] * 5)


def test_sampling_rejects_bad_args():
    spec = get_class("diamond-free")
    with pytest.raises(ValueError):
        list(sample_in_class(spec, 4, 1.5, seed=0, count=1))
    with pytest.raises(ValueError):
        list(sample_in_class(spec, 4, 0.5, seed=0, count=0))
