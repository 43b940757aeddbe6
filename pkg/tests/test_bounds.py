import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcfc.bounds import (
    RADIUS,
    TREE_HALF_ORDER,
    TREE_RANKING,
    TREE_LOG_DIAMETER,
    TRIVIAL_2,
    TWO_CUT_VERTICES,
    bounds_report,
    ceil_log2,
    floor_log_three_halves,
    is_spanning_tree,
    lower_bound,
    lower_candidates,
    spanning_tree_bound,
    upper_bound,
    upper_candidates,
)
from vcfc.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    random_connected_graph,
    random_tree,
    star_graph,
)
from vcfc.solver import vcfc_exact


def test_ceil_log2_matches_float():
    for x in range(1, 5000):
        assert ceil_log2(x) == math.ceil(math.log2(x))


def test_floor_log_three_halves_exact():
    for n in range(1, 3000):
        j = floor_log_three_halves(n)
        assert 1.5 ** j <= n < 1.5 ** (j + 1)


def test_path_lower_bound_is_tree_formula():
    assert lower_bound(path_graph(8)) == (3, TREE_LOG_DIAMETER)
    assert lower_bound(path_graph(8), strict=True) == (4, TREE_LOG_DIAMETER)


def test_two_cut_vertices_lower_bound():
    g = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert lower_bound(g) == (3, TWO_CUT_VERTICES)
    assert lower_bound(cycle_graph(5)) == (2, TRIVIAL_2)


def test_upper_candidates_for_trees():
    cands = upper_candidates(path_graph(9))
    assert cands[RADIUS] == 5
    assert cands[TREE_RANKING] == floor_log_three_halves(9) == 5
    assert cands[TREE_HALF_ORDER] == 5
    assert upper_bound(path_graph(9)) == (5, RADIUS)


def test_half_order_only_from_five():
    assert TREE_HALF_ORDER not in upper_candidates(path_graph(4))
    assert TREE_RANKING not in upper_candidates(path_graph(2))


def test_complete_graph_bounds():
    rep = bounds_report(complete_graph(5))
    assert (rep.lower, rep.upper) == (2, 2)
    assert rep.to_dict()["candidates"]["upper:radius"] == 2


def test_bounds_need_connected_graph():
    with pytest.raises(GraphError):
        lower_candidates(from_edge_list(3, [(0, 1)]))
    with pytest.raises(GraphError):
        upper_bound(path_graph(1))


def test_spanning_tree_bound():
    g = cycle_graph(6)
    t = path_graph(6)
    assert is_spanning_tree(g, t)
    assert spanning_tree_bound(g, t) == 3 >= vcfc_exact(g).vcfc
    with pytest.raises(GraphError):
        spanning_tree_bound(g, star_graph(5))


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 8))
    return random_connected_graph(n, draw(st.floats(0, 0.7)), draw(st.integers(0, 2**32)))


@settings(max_examples=120, deadline=None)
@given(connected_graphs())
def test_sandwich(g):
    val = vcfc_exact(g).vcfc
    assert lower_bound(g)[0] <= val <= upper_bound(g)[0]
    assert lower_bound(g, strict=True)[0] <= val


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2**40))
def test_tree_bounds_sandwich(n, seed):
    t = random_tree(n, seed)
    val = vcfc_exact(t).vcfc
    for name, bound in lower_candidates(t, strict=True).items():
        assert bound <= val, name
    for name, bound in upper_candidates(t).items():
        assert val <= bound, name
