"""Explicit colourings and rankings that certify upper bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import cut_edge_subgraph, cut_vertices, is_two_connected
from .graph import Graph, GraphError, bfs_distances, metrics, reach_mask
from .verifier import VertexColoring


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class Ranking:
    labels: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.labels, default=0)


def ruler_coloring(n: int) -> VertexColoring:
    """Colour the i-th path vertex (1-based) by 1 + the 2-adic valuation of i."""
    if n < 1:
        raise ConstructionError("ruler coloring needs n >= 1")
    colors = [((i & -i).bit_length()) for i in range(1, n + 1)]
    return VertexColoring.of(colors)


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph listed end to end, starting at the lower-id end."""
    if g.n == 1:
        return [0]
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if g.m != g.n - 1 or len(ends) != 2 or g.max_degree > 2:
        raise ConstructionError("graph is not a path")
    order = [ends[0]]
    prev = -1
    while len(order) < g.n:
        x = order[-1]
        nxt = next(y for y in g.adj[x] if y != prev)
        prev = x
        order.append(nxt)
    return order


def ruler_coloring_for(g: Graph) -> VertexColoring:
    """Ruler colouring laid along a path graph with arbitrary labels."""
    order = path_order(g)
    ruler = ruler_coloring(g.n).colors
    colors = [0] * g.n
    for pos, v in enumerate(order):
        colors[v] = ruler[pos]
    return VertexColoring.of(colors)


def _hub_coloring(n: int, hub: int) -> VertexColoring:
    colors = [1] * n
    colors[hub] = 2
    return VertexColoring(tuple(colors), 2)


def two_coloring_2connected(g: Graph, w: int) -> VertexColoring:
    if not is_two_connected(g):
        raise ConstructionError("graph is not 2-connected")
    if not 0 <= w < g.n:
        raise ConstructionError(f"vertex {w} not in graph")
    return _hub_coloring(g.n, w)


def two_coloring_one_cut(g: Graph) -> VertexColoring:
    cuts = cut_vertices(g)
    if len(cuts) != 1:
        raise ConstructionError(f"graph has {len(cuts)} cut vertices, need exactly one")
    return _hub_coloring(g.n, next(iter(cuts)))


def star_cutedges_3coloring(g: Graph) -> VertexColoring:
    """Bridge-star centre gets 1, its bridge neighbours 2, everything else 3."""
    if len(cut_vertices(g)) < 2:
        raise ConstructionError("needs at least two cut vertices")
    ces = cut_edge_subgraph(g)
    center = ces.star_center()
    if center is None:
        raise ConstructionError("cut edges do not form a star")
    colors = [3] * g.n
    colors[center] = 1
    for x in ces.vertices:
        if x != center:
            colors[x] = 2
    return VertexColoring(tuple(colors), 3)


def cycle_corona_shape(g: Graph) -> tuple[list[int], int] | None:
    """Recognise a t-corona of a cycle; returns (cycle vertices, t) or None."""
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    core = [v for v in range(g.n) if g.degree(v) != 1]
    if len(core) < 3 or not leaves or len(leaves) % len(core):
        return None
    t = len(leaves) // len(core)
    core_set = set(core)
    for v in core:
        inside = sum(1 for y in g.adj[v] if y in core_set)
        if inside != 2 or g.degree(v) != 2 + t:
            return None
    for v in leaves:
        if g.adj[v][0] not in core_set:
            return None
    alive = sum(1 << v for v in core)
    if reach_mask(g, core[0], alive) != alive:
        return None
    return core, t


def corona_3coloring(g: Graph) -> VertexColoring:
    shape = cycle_corona_shape(g)
    if shape is None:
        raise ConstructionError("graph is not the corona of a cycle")
    core, _ = shape
    colors = [1] * g.n
    for v in core:
        colors[v] = 3
    colors[min(core)] = 2
    return VertexColoring(tuple(colors), 3)


def _require_tree(g: Graph) -> None:
    if not g.is_tree():
        raise ConstructionError("graph is not a tree")


def tree_level_coloring(g: Graph) -> VertexColoring:
    """Colour by distance from the lowest-id central vertex, plus one."""
    _require_tree(g)
    met = metrics(g)
    center = met.central_vertices()[0]
    return VertexColoring(tuple(d + 1 for d in met.distances[center]), met.radius + 1)


def _centroid(g: Graph, comp: list[int], alive: int) -> int:
    size = len(comp)
    for c in comp:
        rest = alive & ~(1 << c)
        worst = 0
        seen = 0
        for y in g.adj[c]:
            if rest >> y & 1 and not seen >> y & 1:
                part = reach_mask(g, y, rest)
                seen |= part
                worst = max(worst, bin(part).count("1"))
        if worst <= size // 2:
            return c
    raise AssertionError("tree component without a centroid")


def centroid_ranking(g: Graph) -> Ranking:
    """Rank a tree by recursive centroid removal.

    Each centroid receives one more than the largest label used in the
    components left after deleting it, so labels stay within ceil(log2(n+1)).
    """
    _require_tree(g)
    labels = [0] * g.n

    def solve(alive: int) -> int:
        comp = [x for x in range(g.n) if alive >> x & 1]
        c = _centroid(g, comp, alive)
        rest = alive & ~(1 << c)
        top = 0
        while rest:
            low = rest & -rest
            part = reach_mask(g, low.bit_length() - 1, rest)
            top = max(top, solve(part))
            rest &= ~part
        labels[c] = top + 1
        return top + 1

    solve((1 << g.n) - 1)
    return Ranking(tuple(labels))


def is_valid_ranking(g: Graph, ranking: Ranking) -> bool:
    """No two equal labels i are joined inside the subgraph of labels <= i."""
    labels = ranking.labels
    if len(labels) != g.n or any(x < 1 for x in labels):
        return False
    for i in set(labels):
        alive = sum(1 << x for x in range(g.n) if labels[x] <= i)
        same = [x for x in range(g.n) if labels[x] == i]
        seen = 0
        for x in same:
            if seen >> x & 1:
                return False
            seen |= reach_mask(g, x, alive)
    return True


def ranking_as_coloring(g: Graph, ranking: Ranking) -> VertexColoring:
    if not is_valid_ranking(g, ranking):
        raise ConstructionError("labels do not form a ranking of the graph")
    return VertexColoring(ranking.labels, ranking.k)


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    dist = bfs_distances(g, v)
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(next(y for y in g.adj[x] if dist[y] == dist[x] - 1))
    return path


CONSTRUCTIONS = {
    "ruler": ruler_coloring_for,
    "two-connected": lambda g: two_coloring_2connected(g, 0),
    "one-cut": two_coloring_one_cut,
    "star-cut-edges": star_cutedges_3coloring,
    "corona": corona_3coloring,
    "tree-level": tree_level_coloring,
    "centroid-ranking": lambda g: ranking_as_coloring(g, centroid_ranking(g)),
}
