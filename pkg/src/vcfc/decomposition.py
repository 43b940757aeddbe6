"""Cut vertices, blocks, block graph and the cut-edge subgraph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, require_connected


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_of: dict[tuple[int, int], int]
    block_graph: Graph

    def trivial_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if len(b) == 2]

    def nontrivial_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if len(b) >= 3]


def _biconnected_edge_sets(g: Graph) -> tuple[list[list[tuple[int, int]]], set[int]]:
    """Iterative Hopcroft-Tarjan over every component; returns edge blocks and cut vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] < 0:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(g.adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (parent, x):
                        break
                blocks.append(block)
        if root_children >= 2:
            cuts.add(root)
    return blocks, cuts


def cut_vertices(g: Graph) -> frozenset[int]:
    require_connected(g)
    return frozenset(_biconnected_edge_sets(g)[1])


def blocks(g: Graph) -> BlockDecomposition:
    if g.n < 2:
        raise GraphError("block decomposition needs n >= 2")
    require_connected(g)
    edge_blocks, cuts = _biconnected_edge_sets(g)
    vertex_sets = []
    block_of: dict[tuple[int, int], int] = {}
    for i, eb in enumerate(edge_blocks):
        vs = set()
        for a, b in eb:
            vs.add(a)
            vs.add(b)
            block_of[(min(a, b), max(a, b))] = i
        vertex_sets.append(frozenset(vs))
    containing: dict[int, list[int]] = {c: [] for c in cuts}
    for i, vs in enumerate(vertex_sets):
        for c in vs & cuts:
            containing[c].append(i)
    bg_edges = set()
    for members in containing.values():
        for a in members:
            for b in members:
                if a < b:
                    bg_edges.add((a, b))
    block_graph = Graph.from_edge_list(len(vertex_sets), sorted(bg_edges))
    return BlockDecomposition(tuple(vertex_sets), frozenset(cuts), block_of, block_graph)


def is_two_connected(g: Graph) -> bool:
    require_connected(g)
    return g.n >= 3 and not cut_vertices(g)


def is_block_path(g: Graph) -> bool:
    require_connected(g)
    if g.n < 2:
        return True
    bg = blocks(g).block_graph
    return bg.max_degree <= 2 and bg.m == bg.n - 1


@dataclass(frozen=True)
class CutEdgeSubgraph:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def star_center(self) -> int | None:
        """Centre of the star K_{1,t} (t >= 1) formed by the edges, else None.

        For a single edge both ends qualify; the lower id is returned.
        """
        if not self.edges:
            return None
        if len(self.edges) == 1:
            return min(self.edges[0])
        counts: dict[int, int] = {}
        for a, b in self.edges:
            counts[a] = counts.get(a, 0) + 1
            counts[b] = counts.get(b, 0) + 1
        hubs = [v for v, c in counts.items() if c == len(self.edges)]
        if len(hubs) == 1 and len(self.vertices) == len(self.edges) + 1:
            return hubs[0]
        return None

    def is_star(self) -> bool:
        return self.star_center() is not None


def cut_edge_subgraph(g: Graph) -> CutEdgeSubgraph:
    require_connected(g)
    if g.n < 2:
        return CutEdgeSubgraph(frozenset(), ())
    edge_blocks, _ = _biconnected_edge_sets(g)
    bridges = sorted((min(e), max(e)) for eb in edge_blocks if len(eb) == 1 for e in eb)
    verts = frozenset(v for e in bridges for v in e)
    return CutEdgeSubgraph(verts, tuple(bridges))


def pair_spans(g: Graph) -> list[list[int]]:
    """``spans[u][v]``: bitmask of vertices lying on at least one simple u-v path.

    These are the vertices of the blocks met along the block-cut tree path
    from ``u`` to ``v``.
    """
    n = g.n
    if n == 1:
        return [[1]]
    dec = blocks(g)
    nb = len(dec.blocks)
    cuts = sorted(dec.cut_vertices)
    cut_node = {c: nb + i for i, c in enumerate(cuts)}
    block_mask = [sum(1 << x for x in b) for b in dec.blocks]
    tree_adj: list[list[int]] = [[] for _ in range(nb + len(cuts))]
    home = [0] * n
    for i, b in enumerate(dec.blocks):
        for x in b:
            if x in cut_node:
                tree_adj[i].append(cut_node[x])
                tree_adj[cut_node[x]].append(i)
            else:
                home[x] = i
    for c, node in cut_node.items():
        home[c] = node

    spans = [[0] * n for _ in range(n)]
    for u in range(n):
        # BFS over the block-cut tree, accumulating block vertices along the way
        acc = {home[u]: block_mask[home[u]] if home[u] < nb else 1 << u}
        queue = [home[u]]
        for node in queue:
            for nxt in tree_adj[node]:
                if nxt not in acc:
                    acc[nxt] = acc[node] | (block_mask[nxt] if nxt < nb else 0)
                    queue.append(nxt)
        for v in range(n):
            spans[u][v] = acc[home[v]] | 1 << u | 1 << v
    return spans
