"""Vertex colourings and conflict-free vertex-connectivity checks.

Two independent routes decide whether a pair is joined by a conflict-free
path: :func:`exists_cf_path` reduces the question to unit vertex-capacity
flow, :func:`exists_cf_path_naive` enumerates every simple path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    bfs_path,
    is_simple_path,
    path_through_masked,
    reach_mask,
    require_connected,
)

NAIVE_CAP = 10


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise ColoringError("k must be at least 1")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ColoringError(f"vertex {v} has color {c} outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Iterable[int]) -> "VertexColoring":
        colors = tuple(colors)
        return cls(colors, max(colors, default=1))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def uses(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


@dataclass
class CfvcCertificate:
    verdict: bool
    witnesses: dict[tuple[int, int], tuple[tuple[int, ...], int]] = field(default_factory=dict)
    failure: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failure": list(self.failure) if self.failure else None,
            "witnesses": [
                {"pair": [u, v], "path": list(path), "color": c}
                for (u, v), (path, c) in sorted(self.witnesses.items())
            ],
        }


def is_conflict_free_path(coloring: VertexColoring | Sequence[int], path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        raise ColoringError("path repeats a vertex")
    colors = coloring.colors if isinstance(coloring, VertexColoring) else coloring
    return 1 in Counter(colors[x] for x in path).values()


def unique_color(colors: Sequence[int], path: Sequence[int]) -> int | None:
    counts = Counter(colors[x] for x in path)
    return min((c for c, m in counts.items() if m == 1), default=None)


def _check_args(g: Graph, coloring: VertexColoring, u: int, v: int) -> None:
    if coloring.n != g.n:
        raise ColoringError(f"coloring has {coloring.n} entries, graph has {g.n} vertices")
    if u == v:
        raise GraphError("pair endpoints must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"pair ({u}, {v}) outside graph")


def _tree_path(g: Graph, u: int, v: int) -> list[int] | None:
    return bfs_path(g, u, v)


def color_classes(g: Graph, colors: Sequence[int]) -> dict[int, int]:
    classes: dict[int, int] = {}
    for x, c in enumerate(colors):
        classes[c] = classes.get(c, 0) | 1 << x
    return classes


def _scan(g: Graph, colors: Sequence[int], classes: dict[int, int], u: int, v: int,
          want_path: bool):
    """Colour-by-colour, candidate-by-candidate search for a conflict-free path.

    Returns ``(path, color)`` (path is None when ``want_path`` is false) or None.
    """
    full = (1 << g.n) - 1
    cu, cv = colors[u], colors[v]
    for c in sorted(classes):
        cls = classes[c]
        if c == cu and c == cv:
            continue
        if c == cu:
            candidates = [u]
        elif c == cv:
            candidates = [v]
        else:
            candidates = [x for x in range(g.n) if cls >> x & 1]
        for w in candidates:
            alive = (full & ~cls) | 1 << w
            if w == u or w == v:
                if not want_path:
                    if reach_mask(g, u, alive) >> v & 1:
                        return None, c
                    continue
                path = bfs_path(g, u, v, alive)
            else:
                reach = reach_mask(g, w, alive)
                if not (reach >> u & 1 and reach >> v & 1):
                    continue
                path = path_through_masked(g, reach, u, v, w)
            if path is not None:
                return path, c
    return None


def exists_cf_path(g: Graph, coloring: VertexColoring, u: int, v: int):
    """A conflict-free ``u``-``v`` path and its uniquely used colour, or None."""
    _check_args(g, coloring, u, v)
    colors = coloring.colors
    if g.m == g.n - 1:
        path = _tree_path(g, u, v)
        if path is None:
            return None
        c = unique_color(colors, path)
        return (tuple(path), c) if c is not None else None
    hit = _scan(g, colors, color_classes(g, colors), u, v, True)
    if hit is None:
        return None
    return tuple(hit[0]), hit[1]


def has_cf_path(g: Graph, colors: Sequence[int], classes: dict[int, int], u: int, v: int,
                tree: bool = False) -> bool:
    """Boolean form of :func:`exists_cf_path` for search loops; no validation."""
    if colors[u] != colors[v] and g.masks[u] >> v & 1:
        return True
    if tree:
        return unique_color(colors, bfs_path(g, u, v)) is not None
    return _scan(g, colors, classes, u, v, False) is not None


def is_cfvc(g: Graph, coloring: VertexColoring) -> CfvcCertificate:
    require_connected(g)
    if coloring.n != g.n:
        raise ColoringError(f"coloring has {coloring.n} entries, graph has {g.n} vertices")
    # adjacent pairs first: an edge whose ends share a colour with no detour is
    # the most direct failure to report
    edges = list(g.edges())
    edge_set = set(edges)
    order = edges + [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in edge_set]
    witnesses = {}
    for u, v in order:
        hit = exists_cf_path(g, coloring, u, v)
        if hit is None:
            return CfvcCertificate(False, {}, (u, v))
        witnesses[(u, v)] = hit
    return CfvcCertificate(True, dict(sorted(witnesses.items())), None)


def recheck_certificate(g: Graph, coloring: VertexColoring, cert: CfvcCertificate) -> bool:
    """Independently re-validate every witness of a positive certificate."""
    if not cert.verdict:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (u, v) not in cert.witnesses:
                return False
            path, c = cert.witnesses[(u, v)]
            if path[0] != u or path[-1] != v or not is_simple_path(g, path):
                return False
            if sum(1 for x in path if coloring.colors[x] == c) != 1:
                return False
    return True


def exists_cf_path_naive(g: Graph, coloring: VertexColoring, u: int, v: int, cap: int = NAIVE_CAP):
    """Backtracking over all simple ``u``-``v`` paths; first conflict-free one wins."""
    if g.n > cap:
        raise GraphError(f"naive verifier capped at n <= {cap}")
    _check_args(g, coloring, u, v)
    colors = coloring.colors
    path = [u]
    on_path = [False] * g.n
    on_path[u] = True

    def extend(x: int):
        for y in g.adj[x]:
            if on_path[y]:
                continue
            path.append(y)
            on_path[y] = True
            if y == v:
                counts = Counter(colors[z] for z in path)
                once = [c for c, m in counts.items() if m == 1]
                if once:
                    return tuple(path), min(once)
            else:
                found = extend(y)
                if found:
                    return found
            path.pop()
            on_path[y] = False
        return None

    return extend(u)


def is_cfvc_naive(g: Graph, coloring: VertexColoring, cap: int = NAIVE_CAP) -> bool:
    return all(
        exists_cf_path_naive(g, coloring, u, v, cap) is not None
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


# coloring text format -------------------------------------------------------


def parse_coloring(text: str) -> VertexColoring:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 1:
        raise ColoringError("coloring file must start with a line holding k")
    try:
        k = int(lines[0][0])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise ColoringError(f"malformed coloring file: {exc}") from exc
    n = len(pairs)
    colors = [0] * n
    for x, c in pairs:
        if not 0 <= x < n or colors[x]:
            raise ColoringError(f"vertex {x} missing, repeated or out of range")
        colors[x] = c
    return VertexColoring(tuple(colors), k)


def format_coloring(coloring: VertexColoring) -> str:
    lines = [str(coloring.k)] + [f"{v} {c}" for v, c in enumerate(coloring.colors)]
    return "\n".join(lines) + "\n"
