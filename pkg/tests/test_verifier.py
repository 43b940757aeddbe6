import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcfc.graph import (
    DisconnectedGraphError,
    GraphError,
    all_connected,
    complete_graph,
    cycle_graph,
    from_edge_list,
    is_simple_path,
    path_graph,
    random_connected_graph,
)
from vcfc.solver import canonical_colorings
from vcfc.verifier import (
    ColoringError,
    VertexColoring,
    exists_cf_path,
    exists_cf_path_naive,
    format_coloring,
    is_cfvc,
    is_cfvc_naive,
    is_conflict_free_path,
    parse_coloring,
    recheck_certificate,
    unique_color,
)


@st.composite
def colored_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    g = random_connected_graph(n, draw(st.floats(0, 0.7)), draw(st.integers(0, 2**32)))
    k = draw(st.integers(1, n))
    colors = tuple(draw(st.lists(st.integers(1, k), min_size=n, max_size=n)))
    return g, VertexColoring(colors, k)


class TestColoring:
    def test_range_checked(self):
        with pytest.raises(ColoringError):
            VertexColoring((1, 3), 2)
        with pytest.raises(ColoringError):
            VertexColoring((0, 1), 2)

    def test_uses(self):
        c = VertexColoring.of([1, 3, 3])
        assert c.k == 3 and c.uses == 2 and c[1] == 3

    def test_file_roundtrip(self):
        c = VertexColoring((1, 2, 1, 3), 4)
        assert parse_coloring(format_coloring(c)) == c

    @pytest.mark.parametrize("text", ["", "2 1\n", "2\n0 1\n0 2\n", "2\n0 x\n", "2\n1 1\n"])
    def test_bad_files(self, text):
        with pytest.raises(ColoringError):
            parse_coloring(text)


class TestPathPredicate:
    def test_examples(self):
        assert is_conflict_free_path((1, 2, 1), [0, 1, 2])
        assert not is_conflict_free_path((1, 1), [0, 1])
        assert is_conflict_free_path((1,), [0])

    def test_non_simple_rejected(self):
        with pytest.raises(ValueError):
            is_conflict_free_path((1, 2, 1), [0, 1, 0])

    def test_unique_color_is_smallest(self):
        assert unique_color((3, 2, 1, 1), [0, 1, 2, 3]) == 2
        assert unique_color((1, 1), [0, 1]) is None


class TestExistsPath:
    def test_path_through_middle_colour(self):
        assert exists_cf_path(path_graph(3), VertexColoring((1, 2, 1), 2), 0, 2) == ((0, 1, 2), 2)

    def test_monochromatic_cycle(self):
        assert exists_cf_path(cycle_graph(4), VertexColoring.of([1] * 4), 0, 1) is None

    def test_hub_coloured_cycle(self):
        g = cycle_graph(5)
        col = VertexColoring((2, 1, 1, 1, 1), 2)
        for u, v in combinations(range(5), 2):
            path, c = exists_cf_path(g, col, u, v)
            assert is_conflict_free_path(col, path)
            if 0 not in (u, v):
                assert 0 in path and c == 2

    def test_detour_in_triangle(self):
        g = complete_graph(3)
        col = VertexColoring((1, 1, 2), 2)
        assert exists_cf_path(g, col, 0, 1)[0] == (0, 2, 1)
        assert exists_cf_path_naive(g, col, 0, 1)[0] == (0, 2, 1)

    def test_naive_examples(self):
        assert exists_cf_path_naive(path_graph(3), VertexColoring.of([1, 1, 1]), 0, 2) is None

    def test_argument_checks(self):
        col = VertexColoring.of([1, 2, 1])
        with pytest.raises(GraphError):
            exists_cf_path(path_graph(3), col, 1, 1)
        with pytest.raises(GraphError):
            exists_cf_path_naive(path_graph(11), VertexColoring.of([1] * 11), 0, 1)


class TestIsCfvc:
    def test_p4_failure_is_the_repeated_edge(self):
        cert = is_cfvc(path_graph(4), VertexColoring((1, 2, 2, 1), 2))
        assert not cert.verdict and cert.failure == (1, 2) and not cert.witnesses

    def test_ruler_p7(self):
        g = path_graph(7)
        col = VertexColoring((1, 2, 1, 3, 1, 2, 1), 3)
        cert = is_cfvc(g, col)
        assert cert.verdict and recheck_certificate(g, col, cert)
        assert len(cert.witnesses) == 21

    def test_single_vertex(self):
        assert is_cfvc(path_graph(1), VertexColoring((1,), 1)).verdict

    def test_size_mismatch(self):
        with pytest.raises(ColoringError):
            is_cfvc(path_graph(3), VertexColoring((1, 2), 2))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            is_cfvc(from_edge_list(3, [(0, 1)]), VertexColoring.of([1, 2, 3]))

    def test_certificate_dict(self):
        d = is_cfvc(path_graph(3), VertexColoring((1, 2, 1), 2)).to_dict()
        assert d["verdict"] is True and len(d["witnesses"]) == 3

    @settings(max_examples=100, deadline=None)
    @given(colored_graphs())
    def test_distinct_colours_always_work(self, gc):
        g, _ = gc
        col = VertexColoring(tuple(range(1, g.n + 1)), g.n)
        assert is_cfvc(g, col).verdict

    @settings(max_examples=150, deadline=None)
    @given(colored_graphs())
    def test_witnesses_recheck_and_naive_verdict(self, gc):
        g, col = gc
        cert = is_cfvc(g, col)
        assert cert.verdict == is_cfvc_naive(g, col)
        if cert.verdict:
            assert recheck_certificate(g, col, cert)
        else:
            u, v = cert.failure
            assert exists_cf_path_naive(g, col, u, v) is None

    @settings(max_examples=100, deadline=None)
    @given(colored_graphs(max_n=8), st.data())
    def test_refinement_keeps_witnesses(self, gc, data):
        g, col = gc
        cert = is_cfvc(g, col)
        # split classes: recolour a random subset with fresh colours
        fresh = col.k
        colors = list(col.colors)
        for v in range(g.n):
            if data.draw(st.booleans()):
                fresh += 1
                colors[v] = fresh
        finer = VertexColoring(tuple(colors), fresh)
        if cert.verdict:
            assert is_cfvc(g, finer).verdict
            for path, _ in cert.witnesses.values():
                assert is_conflict_free_path(finer, path)


class TestOracleEquivalence:
    def test_exhaustive_n4(self):
        for g in all_connected(4):
            for colors in canonical_colorings(4, 3):
                col = VertexColoring(colors, 3)
                for u, v in combinations(range(4), 2):
                    fast = exists_cf_path(g, col, u, v)
                    slow = exists_cf_path_naive(g, col, u, v)
                    assert (fast is None) == (slow is None)
                    if fast is not None:
                        path, c = fast
                        assert is_simple_path(g, path) and path[0] == u and path[-1] == v
                        assert sum(col.colors[x] == c for x in path) == 1

    def test_random_sample(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(2, 9)
            g = random_connected_graph(n, rng.random() * 0.6, rng.getrandbits(32))
            col = VertexColoring(tuple(rng.randint(1, 3) for _ in range(n)), 3)
            for u, v in combinations(range(n), 2):
                assert (exists_cf_path(g, col, u, v) is None) == (exists_cf_path_naive(g, col, u, v) is None)
