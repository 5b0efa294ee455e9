"""Randomised and exhaustive invariants over small connected graphs."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from esgraph.domination import all_ced_masks, edges_connected, is_edge_dominating, superset_closure
from esgraph.esg import analytic_degrees, brute_force_degrees, degree_profile, subset_degree
from esgraph.graph import Graph, connected_graphs_by_edges, is_connected
from esgraph.subsets import index_to_mask, mask_to_index, subset_neighborhood, subsets_adjacent

from oracles import gamma_degrees


@st.composite
def connected_graphs(draw, max_nu=7, max_eps=10):
    nu = draw(st.integers(2, max_nu))
    order = draw(st.permutations(range(nu)))
    edges = set()
    for k in range(1, nu):
        parent = draw(st.integers(0, k - 1))
        u, v = order[k], order[parent]
        edges.add((min(u, v), max(u, v)))
    rest = [(u, v) for u in range(nu) for v in range(u + 1, nu) if (u, v) not in edges]
    room = max(0, min(len(rest), max_eps - len(edges)))
    extra = draw(st.lists(st.sampled_from(rest), max_size=room, unique=True)) if rest and room else []
    edges.update(extra)
    return Graph(nu, tuple(sorted(edges)))


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_closed_form_equals_pair_counting(g):
    assert is_connected(g)
    assert np.array_equal(analytic_degrees(g), brute_force_degrees(g))


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_nu=5, max_eps=7))
def test_closed_form_equals_definitional_oracle(g):
    oracle = gamma_degrees(g.edges)
    assert all(subset_degree(g, s) == d for s, d in oracle.items())


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_adjacency_symmetric_and_neighbourhood_driven(g, data):
    top = (1 << g.epsilon) - 1
    s = data.draw(st.integers(1, top))
    t = data.draw(st.integers(1, top).filter(lambda x: x != s))
    assert subsets_adjacent(g, s, t) == subsets_adjacent(g, t, s)
    assert subsets_adjacent(g, s, t) == bool(subset_neighborhood(g, s) & t)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20), st.data())
def test_index_roundtrip(eps, data):
    mask = data.draw(st.integers(1, (1 << eps) - 1))
    idx = mask_to_index(mask, eps)
    assert index_to_mask(idx, eps) == mask
    assert idx.s == mask.bit_count()


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_profile_bounds(g):
    prof = degree_profile(g)
    eps = g.epsilon
    assert prof.Delta == 2 * ((1 << (eps - 1)) - 1)
    assert prof.delta >= 2 * (eps - 1)
    assert prof.degree_sum % 2 == 0


def test_exhaustive_small_universe():
    # every connected graph with at most five edges
    for g in connected_graphs_by_edges(5):
        prof = degree_profile(g)
        ced = all_ced_masks(g)
        covered = superset_closure(ced, g.epsilon)
        assert np.all(prof.degrees[covered] == prof.Delta)
        for x in range(1, 1 << g.epsilon):
            assert ced[x] == (is_edge_dominating(g, x) and edges_connected(g, x))
