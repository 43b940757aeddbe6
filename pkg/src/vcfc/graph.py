"""Immutable simple graphs, metrics, generators and text formats."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 10_000
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Raised for malformed graphs or inputs that violate a precondition."""


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored twice: as sorted neighbour tuples and as integer
    bitmasks (bit ``j`` of ``masks[i]`` set iff ``i ~ j``). The masks are what
    the hot loops in the verifier and solver use.
    """

    __slots__ = ("n", "adj", "masks", "m", "_key")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        # trusted constructor; use from_edge_list for untrusted input
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        masks = []
        for nbrs in self.adj:
            mk = 0
            for x in nbrs:
                mk |= 1 << x
            masks.append(mk)
        self.masks = tuple(masks)
        self.m = sum(len(a) for a in self.adj) // 2
        self._key = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of range 0..{MAX_VERTICES}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        return cls(n, [[j for j in range(n) if mk >> j & 1] for mk in masks])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and is_connected(self)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        adj = [[index[x] for x in self.adj[v] if x in index] for v in old]
        return Graph(len(old), adj), old

    def _edge_key(self):
        if self._key is None:
            self._key = (self.n, tuple(self.edges()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._edge_key() == other._edge_key()

    def __hash__(self):
        return hash(self._edge_key())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


# connectivity ---------------------------------------------------------------


def reach_mask(g: Graph, start: int, alive: int | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``alive``."""
    masks = g.masks
    if alive is None:
        alive = (1 << g.n) - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return reach_mask(g, 0) == (1 << g.n) - 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_path(g: Graph, u: int, v: int, alive: int | None = None) -> list[int] | None:
    """Shortest ``u``-``v`` path using only vertices in ``alive``, or None."""
    if alive is None:
        alive = (1 << g.n) - 1
    if not (alive >> u & 1 and alive >> v & 1):
        return None
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return path[::-1]
        for y in g.adj[x]:
            if y not in parent and alive >> y & 1:
                parent[y] = x
                queue.append(y)
    return None


@dataclass(frozen=True)
class GraphMetrics:
    distances: tuple[tuple[int, ...], ...]
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    max_degree: int

    def central_vertices(self) -> list[int]:
        return [v for v, e in enumerate(self.eccentricities) if e == self.radius]


def metrics(g: Graph) -> GraphMetrics:
    if g.n == 0:
        raise GraphError("metrics of the empty graph are undefined")
    require_connected(g)
    dist = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    ecc = tuple(max(row) for row in dist)
    return GraphMetrics(dist, ecc, min(ecc), max(ecc), g.max_degree)


# paths through a prescribed vertex ------------------------------------------


def _fan_flow(g: Graph, alive: int, w: int, u: int, v: int) -> list[list[int]] | None:
    """Two paths ``w..u`` and ``w..v`` sharing only ``w``, via unit vertex-capacity flow.

    Every vertex other than ``w`` is split into an in-node and an out-node
    joined by a unit arc; ``u`` and ``v`` each have a unit arc to a super-sink.
    The residual network is walked implicitly: ``flow`` holds saturated
    out->in arcs, ``used`` the saturated split arcs, ``sunk`` the saturated
    sink arcs. Returns the two vertex sequences or None if max flow < 2.
    """
    adj = g.adj
    flow: set[tuple[int, int]] = set()
    used: set[int] = set()
    sunk: set[int] = set()
    targets = (u, v)
    for _ in range(2):
        # states are 2*x (in-node) and 2*x+1 (out-node)
        start = 2 * w + 1
        prev = {start: -1}
        queue = deque([start])
        end = -1
        while queue:
            s = queue.popleft()
            x = s >> 1
            if s & 1:
                if x in targets and x not in sunk:
                    end = s
                    break
                for y in adj[x]:
                    t = 2 * y
                    if t not in prev and y != w and alive >> y & 1 and (x, y) not in flow:
                        prev[t] = s
                        queue.append(t)
                if x in used and s - 1 not in prev:
                    prev[s - 1] = s
                    queue.append(s - 1)
            else:
                if x not in used:
                    if s + 1 not in prev:
                        prev[s + 1] = s
                        queue.append(s + 1)
                else:
                    for p in adj[x]:
                        t = 2 * p + 1
                        if (p, x) in flow and t not in prev:
                            prev[t] = s
                            queue.append(t)
        if end < 0:
            return None
        sunk.add(end >> 1)
        s = end
        while prev[s] >= 0:
            r = prev[s]
            a, b = r >> 1, s >> 1
            if a == b:
                if s & 1:
                    used.add(a)
                else:
                    used.discard(a)
            elif r & 1:
                flow.add((a, b))
            else:
                flow.discard((b, a))
            s = r
    succ: dict[int, int] = {}
    firsts = []
    for a, b in flow:
        if a == w:
            firsts.append(b)
        else:
            succ[a] = b
    paths = []
    for x in firsts:
        path = [w, x]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        paths.append(path)
    return paths


def path_through_masked(g: Graph, alive: int, u: int, v: int, w: int) -> list[int] | None:
    """``path_through`` restricted to the vertices in ``alive``."""
    if w == u or w == v:
        return bfs_path(g, u, v, alive)
    if not (alive >> u & 1 and alive >> v & 1 and alive >> w & 1):
        return None
    paths = _fan_flow(g, alive, w, u, v)
    if paths is None:
        return None
    to_u, to_v = (paths if paths[0][-1] == u else paths[::-1])
    return to_u[::-1] + to_v[1:]


def path_through(g: Graph, u: int, v: int, w: int) -> list[int] | None:
    """A simple ``u``-``v`` path containing ``w``, or None if there is none."""
    if u == v:
        raise GraphError("path_through needs distinct endpoints")
    for x in (u, v, w):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} not in graph")
    return path_through_masked(g, (1 << g.n) - 1, u, v, w)


def is_simple_path(g: Graph, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


# generators ----------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edge_list(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def corona(base: Graph, t: int) -> Graph:
    """Attach ``t`` pendant vertices to every vertex of ``base``.

    Pendants of base vertex ``i`` are ``base.n + i*t .. base.n + i*t + t-1``.
    """
    if t < 1:
        raise GraphError("corona needs t >= 1")
    edges = list(base.edges())
    for i in range(base.n):
        for j in range(t):
            edges.append((i, base.n + i * t + j))
    return Graph.from_edge_list(base.n * (t + 1), edges)


def cycle_corona(n: int, t: int) -> Graph:
    return corona(cycle_graph(n), t)


def bridge_star(cycle_lengths: Sequence[int], hub: int = 0) -> Graph:
    """Centre 0 joined by a bridge to one vertex of each listed cycle.

    With ``hub >= 3`` the centre also lies on its own cycle of that length.
    The bridges then form the whole cut-edge subgraph, a star at vertex 0.
    """
    if not cycle_lengths or any(L < 3 for L in cycle_lengths) or 0 < hub < 3:
        raise GraphError("cycle lengths must be >= 3 and hub 0 or >= 3")
    edges = []
    nxt = 1

    def add_cycle(first: int, length: int) -> None:
        nonlocal nxt
        ring = [first] + list(range(nxt, nxt + length - 1))
        nxt += length - 1
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))

    for length in cycle_lengths:
        anchor = nxt
        nxt += 1
        edges.append((0, anchor))
        add_cycle(anchor, length)
    if hub:
        add_cycle(0, hub)
    return Graph.from_edge_list(nxt, edges)


def prufer_decode(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a seeded Prüfer sequence."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n == 1:
        return Graph(1, [[]])
    if n == 2:
        return path_graph(2)
    rng = random.Random(seed & 0xFFFF_FFFF_FFFF_FFFF)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Random tree plus independent extra edges with probability ``p``."""
    rng = random.Random(seed)
    tree = random_tree(n, rng.getrandbits(64))
    edges = set(tree.edges())
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph.from_edge_list(n, edges)


def all_connected(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices.

    Labelled graphs by default, in order of their edge-subset bitmask. With
    ``dedup`` one representative per isomorphism class is produced (n <= 7).
    """
    if n < 1 or n > 7:
        raise GraphError("all_connected supports 1 <= n <= 7")
    if dedup:
        yield from _atlas_connected(n)
        return
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for subset in range(1 << len(pairs)):
        masks = [0] * n
        bits = subset
        i = 0
        while bits:
            if bits & 1:
                a, b = pairs[i]
                masks[a] |= 1 << b
                masks[b] |= 1 << a
            bits >>= 1
            i += 1
        # cheap connectivity test on masks before building the Graph
        seen = frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= masks[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph.from_masks(n, masks)


def _atlas_connected(n: int) -> Iterator[Graph]:
    import networkx as nx

    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and (n == 1 or nx.is_connected(h)):
            yield Graph.from_edge_list(n, h.edges())


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    import networkx as nx

    if n == 1:
        yield Graph(1, [[]])
        return
    for h in nx.nonisomorphic_trees(n):
        yield Graph.from_edge_list(n, h.edges())


FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "star": (star_graph, 1),
    "corona": (cycle_corona, 2),
    "random_tree": (random_tree, 2),
}
STREAM_FAMILIES = ("all_connected", "all_connected_dedup")


def generate(family: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``generate("corona", 4, 2)``."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s)")
    return fn(*params)


def generate_stream(spec: str, seed: int = 0) -> Iterator[Graph]:
    """Graphs named by a spec such as ``"path 7"``, ``"corona 3 1"`` or ``"all_connected 5"``.

    ``"random_tree n"`` without its own seed takes ``seed``.
    """
    parts = spec.replace(",", " ").split()
    if not parts:
        raise GraphError("empty generator spec")
    try:
        params = [int(p) for p in parts[1:]]
    except ValueError as exc:
        raise GraphError(f"bad generator parameters in {spec!r}") from exc
    if parts[0] in STREAM_FAMILIES:
        if len(params) != 1:
            raise GraphError(f"{parts[0]} takes one parameter n")
        return all_connected(params[0], dedup=parts[0].endswith("dedup"))
    if parts[0] == "random_tree" and len(params) == 1:
        params.append(seed)
    return iter([generate(parts[0], *params)])


# graph6 ------------------------------------------------------------------


def parse_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 character {ch!r}")
    if data[0] == "~":
        raise GraphError("graph6 long form (n > 62) is not supported")
    n = ord(data[0]) - 63
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> s & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_N}")
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


# edge-list text ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphError(f"edge list header says {m} edges, found {len(edges)}")
    return Graph.from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
