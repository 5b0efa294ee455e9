from itertools import combinations

import pytest

from esgraph.errors import DomainError
from esgraph.graph import enumerate_connected_graphs, make_cycle, make_path, make_star
from esgraph.subsets import (
    SubsetIndex,
    edge_neighborhood,
    format_mask,
    index_to_mask,
    mask_from_edges,
    mask_hex,
    mask_to_index,
    subset_neighborhood,
    subsets_adjacent,
)

from oracles import all_subsets, gamma_adjacent, lex_index, to_mask


def m(*edges_1based):
    return mask_from_edges(e - 1 for e in edges_1based)


def test_mask_to_index_examples():
    assert mask_to_index(m(1), 3) == SubsetIndex(1, 1)
    assert mask_to_index(m(2, 3), 3) == SubsetIndex(2, 3)
    assert mask_to_index(m(1, 2, 3), 3) == SubsetIndex(3, 1)
    with pytest.raises(DomainError):
        mask_to_index(0, 3)


def test_index_to_mask_examples():
    assert index_to_mask((1, 2), 3) == m(2)
    assert index_to_mask((2, 1), 3) == m(1, 2)
    assert index_to_mask((5, 1), 5) == 0b11111
    with pytest.raises(DomainError):
        index_to_mask((2, 4), 3)
    with pytest.raises(DomainError):
        index_to_mask((0, 1), 3)


def test_three_edge_labeling():
    # v_{2,2} = {e1,e3}, v_{2,3} = {e2,e3}
    assert index_to_mask((2, 2), 3) == m(1, 3)
    assert index_to_mask((2, 3), 3) == m(2, 3)


@pytest.mark.parametrize("eps", range(1, 11))
def test_index_roundtrip_against_lex_listing(eps):
    for s in range(1, eps + 1):
        for i, combo in enumerate(combinations(range(eps), s), start=1):
            mask = to_mask(combo)
            assert mask_to_index(mask, eps) == (s, i) == lex_index(combo, eps)
            assert index_to_mask((s, i), eps) == mask


def test_edge_neighborhood():
    assert edge_neighborhood(make_path(4), 1) == m(1, 3)
    assert edge_neighborhood(make_cycle(3), 0) == m(2, 3)
    assert edge_neighborhood(make_star(4), 0) == m(2, 3, 4)


def test_subset_neighborhood():
    p4 = make_path(4)
    assert subset_neighborhood(p4, m(1, 2)) == m(1, 2, 3)
    assert subset_neighborhood(p4, m(1, 3)) == m(2)
    for g in enumerate_connected_graphs(5):
        if g.epsilon >= 2:
            full = (1 << g.epsilon) - 1
            assert subset_neighborhood(g, full) == full
    with pytest.raises(DomainError):
        subset_neighborhood(p4, 0)


def test_subsets_adjacent_examples():
    p4 = make_path(4)
    assert not subsets_adjacent(p4, m(1), m(3))
    assert subsets_adjacent(p4, m(1), m(1, 2))
    assert not subsets_adjacent(p4, m(1), m(1, 3))
    with pytest.raises(DomainError):
        subsets_adjacent(p4, m(1), m(1))


def _small_graphs():
    return [g for g in enumerate_connected_graphs(5) if 1 <= g.epsilon <= 5]


def test_adjacency_exhaustive_against_pair_loop():
    for g in _small_graphs():
        subs = all_subsets(g.epsilon)
        for s in subs:
            for t in subs:
                if s == t:
                    continue
                S, T = to_mask(s), to_mask(t)
                got = subsets_adjacent(g, S, T)
                assert got == gamma_adjacent(g.edges, s, t)
                assert got == subsets_adjacent(g, T, S)
                assert got == bool(subset_neighborhood(g, S) & T) == bool(S & subset_neighborhood(g, T))


def test_neighborhood_of_union_exhaustive():
    for g in _small_graphs():
        masks = range(1, 1 << g.epsilon)
        for S in masks:
            for T in masks:
                assert subset_neighborhood(g, S | T) == subset_neighborhood(g, S) | subset_neighborhood(g, T)


def test_serialization():
    assert format_mask(m(1, 3)) == "{e1,e3}"
    assert mask_hex(m(1, 3)) == "0x5"
