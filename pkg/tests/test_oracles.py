from itertools import combinations

import pytest

from chibound.graph import Graph, bits, from_edges, is_clique, mask_of
from chibound.oracles import (OracleCapExceeded, chi_n, chromatic_number,
                              chromatic_number_bruteforce, clique_number,
                              clique_number_in, is_proper, max_clique,
                              max_clique_in, ramsey_upper)
from chibound.patterns import complete, cycle, path, pineapple
from chibound.smallgraphs import enumerate_small


def test_clique_number_basics():
    assert clique_number(Graph(0, [])) == 0
    assert clique_number(complete(6)) == 6
    assert clique_number(path(5)) == 2
    assert clique_number(cycle(5)) == 2
    assert clique_number(pineapple(4, 2)) == 4


def test_clique_number_in_mask():
    g = pineapple(4, 2)
    assert clique_number_in(g, mask_of([0, 4, 5])) == 2
    assert clique_number_in(g, 0) == 0


def test_max_clique_exhaustive_up_to_7():
    for g in enumerate_small(6):
        w = clique_number(g)
        best = 0
        for size in range(g.n, 0, -1):
            for combo in combinations(range(g.n), size):
                if is_clique(g, mask_of(combo)):
                    best = size
                    break
            if best:
                break
        assert w == best
        kmask = max_clique(g)
        assert kmask.bit_count() == w and is_clique(g, kmask)


def test_max_clique_is_lex_min():
    # two disjoint triangles: the clique on the smaller indices wins
    g = from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert max_clique(g) == mask_of([0, 1, 2])
    assert max_clique_in(g, mask_of([3, 4, 5])) == mask_of([3, 4, 5])


def test_chromatic_number_known_values():
    assert chromatic_number(Graph(0, []))[0] == 0
    assert chromatic_number(Graph(3, [0, 0, 0]))[0] == 1
    assert chromatic_number(complete(5))[0] == 5
    assert chromatic_number(cycle(5))[0] == 3
    assert chromatic_number(cycle(6))[0] == 2
    chi, coloring = chromatic_number(pineapple(4, 2))
    assert chi == 4
    assert is_proper(pineapple(4, 2), coloring)
    assert max(coloring) == chi


def test_chromatic_number_vs_bruteforce_exhaustive():
    for g in enumerate_small(5):
        assert chromatic_number(g)[0] == chromatic_number_bruteforce(g)


def test_oracle_caps():
    big = Graph(20, [0] * 20)
    with pytest.raises(OracleCapExceeded):
        chromatic_number(big, cap=16)
    with pytest.raises(OracleCapExceeded):
        chromatic_number_bruteforce(Graph(8, [0] * 8))
    with pytest.raises(OracleCapExceeded):
        chi_n(Graph(13, [0] * 13), 2)


def test_chi_n_examples():
    # K5: only subsets of size <= 2 have omega <= 2, so chi^(2) = 2
    assert chi_n(complete(5), 2) == 2
    # C5 is triangle-free, so the whole graph qualifies at n = 2
    assert chi_n(cycle(5), 2) == 3
    assert chi_n(complete(4), 4) == 4
    assert chi_n(path(4), 0) == 0
    with pytest.raises(ValueError):
        chi_n(path(3), -1)


def test_chi_n_brute_reference():
    # independent re-computation over all induced subgraphs, no maximality cut
    from chibound.graph import induced_subgraph
    for g in enumerate_small(5):
        for n in (1, 2, 3):
            best = 0
            for mask in range(1, g.full_mask() + 1):
                if clique_number_in(g, mask) <= n:
                    sub, _ = induced_subgraph(g, mask)
                    best = max(best, chromatic_number(sub)[0])
            assert chi_n(g, n) == best


def test_ramsey_upper():
    assert ramsey_upper(3, 3) == 6
    for s in range(2, 13):
        assert ramsey_upper(s, 2) == s
        assert ramsey_upper(2, s) == s
    with pytest.raises(ValueError):
        ramsey_upper(0, 3)


def test_is_proper():
    g = path(3)
    assert is_proper(g, [1, 2, 1])
    assert not is_proper(g, [1, 1, 2])
    assert is_proper(g, {0: 1, 1: 2, 2: 1})
    with pytest.raises(ValueError):
        is_proper(g, [1, 2])
    with pytest.raises(ValueError):
        is_proper(g, {0: 1, 1: 2})
