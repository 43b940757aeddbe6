import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcfc.bounds import ceil_log2, floor_log_three_halves
from vcfc.constructions import (
    CONSTRUCTIONS,
    ConstructionError,
    Ranking,
    centroid_ranking,
    corona_3coloring,
    cycle_corona_shape,
    is_valid_ranking,
    path_order,
    ranking_as_coloring,
    ruler_coloring,
    ruler_coloring_for,
    star_cutedges_3coloring,
    tree_level_coloring,
    tree_path,
    two_coloring_2connected,
    two_coloring_one_cut,
)
from vcfc.graph import (
    bridge_star,
    complete_graph,
    cycle_corona,
    cycle_graph,
    from_edge_list,
    metrics,
    path_graph,
    random_tree,
    star_graph,
)
from vcfc.verifier import is_cfvc


def test_ruler_p7():
    assert ruler_coloring(7).colors == (1, 2, 1, 3, 1, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 8, 15, 16, 100, 1023, 1024])
def test_ruler_uses_log_colours(n):
    assert ruler_coloring(n).uses == ceil_log2(n + 1)


@pytest.mark.parametrize("n", [1, 5, 31, 64, 130])
def test_ruler_subpath_maximum_is_unique(n):
    colors = ruler_coloring(n).colors
    for i in range(n):
        top, count = 0, 0
        for j in range(i, n):
            if colors[j] > top:
                top, count = colors[j], 1
            elif colors[j] == top:
                count += 1
            assert count == 1


def test_ruler_for_relabelled_path():
    g = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert path_order(g) in ([2, 0, 3, 1], [1, 3, 0, 2])
    assert is_cfvc(g, ruler_coloring_for(g)).verdict
    with pytest.raises(ConstructionError):
        path_order(star_graph(3))


def test_two_connected_and_one_cut():
    assert is_cfvc(cycle_graph(5), two_coloring_2connected(cycle_graph(5), 2)).verdict
    assert is_cfvc(star_graph(4), two_coloring_one_cut(star_graph(4))).verdict
    with pytest.raises(ConstructionError):
        two_coloring_2connected(path_graph(3), 0)
    with pytest.raises(ConstructionError):
        two_coloring_one_cut(path_graph(4))


@pytest.mark.parametrize("lengths,hub", [([3], 3), ([3, 4], 0), ([5, 5, 3], 4), ([4] * 5, 0)])
def test_star_cut_edges(lengths, hub):
    g = bridge_star(lengths, hub)
    col = star_cutedges_3coloring(g)
    assert col.k == 3 and is_cfvc(g, col).verdict


def test_star_cut_edges_rejects_paths():
    with pytest.raises(ConstructionError):
        star_cutedges_3coloring(path_graph(6))


@pytest.mark.parametrize("n,t", [(3, 1), (4, 2), (6, 3)])
def test_corona(n, t):
    g = cycle_corona(n, t)
    core, tt = cycle_corona_shape(g)
    assert sorted(core) == list(range(n)) and tt == t
    assert is_cfvc(g, corona_3coloring(g)).verdict


def test_corona_shape_rejects_others():
    assert cycle_corona_shape(complete_graph(4)) is None
    assert cycle_corona_shape(star_graph(3)) is None
    with pytest.raises(ConstructionError):
        corona_3coloring(path_graph(5))


def test_ranking_validity():
    p = path_graph(3)
    assert is_valid_ranking(p, Ranking((1, 2, 1)))
    assert not is_valid_ranking(p, Ranking((1, 1, 2)))
    assert not is_valid_ranking(p, Ranking((2, 1, 2)))


def test_tree_constructions_need_trees():
    with pytest.raises(ConstructionError):
        tree_level_coloring(cycle_graph(4))
    with pytest.raises(ConstructionError):
        centroid_ranking(cycle_graph(4))


def test_tree_path():
    assert tree_path(star_graph(3), 1, 2) == [1, 0, 2]


def test_registry_names():
    assert set(CONSTRUCTIONS) == {"ruler", "two-connected", "one-cut", "star-cut-edges",
                                  "corona", "tree-level", "centroid-ranking"}


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**40))
def test_tree_colourings_verify(n, seed):
    t = random_tree(n, seed)
    level = tree_level_coloring(t)
    assert level.uses == metrics(t).radius + 1
    assert is_cfvc(t, level).verdict
    r = centroid_ranking(t)
    assert is_valid_ranking(t, r)
    if n >= 3:
        assert r.k <= floor_log_three_halves(n)
    assert is_cfvc(t, ranking_as_coloring(t, r)).verdict
