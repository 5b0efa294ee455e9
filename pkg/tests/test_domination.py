from itertools import combinations

import numpy as np
import pytest

from esgraph.domination import (
    CED_SEARCH_MAX_EPSILON,
    all_ced_masks,
    ced_report,
    ced_superset_violations,
    connected_edge_subsets,
    edges_connected,
    is_ced,
    is_edge_dominating,
    max_degree_vertex_count,
    smallest_ced_sets,
    superset_closure,
    verify_ced_superset_property,
)
from esgraph.errors import DomainError, ResourceLimitError
from esgraph.graph import enumerate_connected_graphs, make_complete, make_cycle, make_path, make_star
from esgraph.subsets import mask_from_edges

from oracles import ced_sets, dominates, edge_set_connected, to_mask


def m(*edges_1based):
    return mask_from_edges(e - 1 for e in edges_1based)


def test_is_edge_dominating():
    assert is_edge_dominating(make_path(4), m(2))
    assert not is_edge_dominating(make_path(5), m(1))
    assert is_edge_dominating(make_cycle(5), m(3, 4, 5))
    with pytest.raises(DomainError):
        is_edge_dominating(make_path(4), 0)


def test_is_ced():
    assert is_ced(make_path(6), m(2, 3, 4))
    assert not is_ced(make_path(6), m(2, 4))
    k4 = make_complete(4)
    pair = mask_from_edges([k4.edges.index((0, 1)), k4.edges.index((1, 2))])
    assert is_ced(k4, pair)


@pytest.mark.parametrize(
    "g,number,index,sets,total",
    [
        (make_path(3), 1, 2, [(0,), (1,)], 3),
        (make_path(4), 1, 1, [(1,)], 4),
        (make_path(6), 3, 1, [(1, 2, 3)], 4),
        (make_cycle(4), 2, 4, None, 9),
        (make_cycle(5), 3, 5, None, 11),
        (make_complete(4), 2, 12, None, 54),
    ],
    ids=["P3", "P4", "P6", "C4", "C5", "K4"],
)
def test_ced_report_frozen(g, number, index, sets, total):
    rep = ced_report(g)
    assert (rep.ced_number, rep.ced_index, rep.all_ced_count) == (number, index, total)
    if sets is not None:
        assert rep.smallest_sets == [to_mask(s) for s in sets]
    assert all(is_ced(g, x) and x.bit_count() == number for x in rep.smallest_sets)


def test_ced_matches_oracle():
    for g in enumerate_connected_graphs(5):
        oracle = ced_sets(g.edges)
        want_k = min(len(x) for x in oracle)
        want = sorted(to_mask(x) for x in oracle if len(x) == want_k)
        k, got = smallest_ced_sets(g)
        assert k == want_k and sorted(got) == want, g
        assert int(all_ced_masks(g).sum()) == len(oracle)


def test_predicates_match_oracle():
    for g in enumerate_connected_graphs(5):
        for r in range(1, g.epsilon + 1):
            for combo in combinations(range(g.epsilon), r):
                x = to_mask(combo)
                assert is_edge_dominating(g, x) == dominates(g.edges, combo)
                assert edges_connected(g, x) == edge_set_connected(g.edges, combo)


def test_connected_subsets_unique_and_complete():
    for g in (make_complete(4), make_cycle(6), make_star(4)):
        for size in range(1, g.epsilon + 1):
            got = list(connected_edge_subsets(g, size))
            assert len(got) == len(set(got))
            brute = {to_mask(c) for c in combinations(range(g.epsilon), size) if edges_connected(g, to_mask(c))}
            assert set(got) == brute


def test_cycle_ced_numbers():
    for n in range(4, 10):
        rep = ced_report(make_cycle(n), census=False)
        assert (rep.ced_number, rep.ced_index) == (n - 2, n)
        assert rep.all_ced_count is None


def test_k5_has_eighty_smallest_ced_sets():
    rep = ced_report(make_complete(5))
    assert rep.ced_number == 3 and rep.ced_index == 80


def test_guard():
    with pytest.raises(ResourceLimitError):
        ced_report(make_complete(7))
    assert CED_SEARCH_MAX_EPSILON == 20


def test_report_json():
    data = ced_report(make_path(6)).to_json()
    assert data == {"ced_number": 3, "ced_index": 1, "smallest_sets": ["{e2,e3,e4}"], "all_ced_count": 4}


def test_max_degree_vertex_count():
    assert max_degree_vertex_count(make_path(4)) == 4
    assert max_degree_vertex_count(make_cycle(4)) == 9
    assert max_degree_vertex_count(make_cycle(5)) == 11
    assert max_degree_vertex_count(make_complete(4)) == 54


def test_superset_closure():
    flags = np.zeros(8, dtype=bool)
    flags[0b010] = True
    assert np.nonzero(superset_closure(flags, 3))[0].tolist() == [2, 3, 6, 7]


def test_superset_property():
    for g in enumerate_connected_graphs(5):
        assert verify_ced_superset_property(g)
        assert ced_superset_violations(g) == []


def test_edge_domination_monotone():
    for g in enumerate_connected_graphs(5):
        full = (1 << g.epsilon) - 1
        for x in range(1, full + 1):
            if is_edge_dominating(g, x):
                for k in range(g.epsilon):
                    assert is_edge_dominating(g, x | (1 << k))


def test_cobasis_not_always_connected():
    # removing the middle edge of P_4 disconnects the rest
    assert is_edge_dominating(make_path(4), m(1, 3))
    assert not edges_connected(make_path(4), m(1, 3))
