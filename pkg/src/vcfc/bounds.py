"""Lower and upper bounds on the conflict-free vertex-connection number."""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import cut_vertices
from .graph import Graph, GraphError, is_connected, metrics

TRIVIAL_2 = "trivial-2"
TRIVIAL_N = "trivial-n"
TWO_CUT_VERTICES = "two-cut-vertices"
TREE_LOG_DIAMETER = "tree-log-diameter"
TREE_CHROMATIC = "tree-chromatic"
RADIUS = "radius"
TREE_RANKING = "tree-ranking"
TREE_HALF_ORDER = "tree-half-order"
SPANNING_TREE = "spanning-tree"


def ceil_log2(x: int) -> int:
    """Exact ceil(log2(x)) for x >= 1."""
    return (x - 1).bit_length()


def floor_log_three_halves(n: int) -> int:
    """Largest j with 1.5**j <= n, computed in integers."""
    j = 0
    while 3 ** (j + 1) <= n * 2 ** (j + 1):
        j += 1
    return j


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    lower_tag: str
    upper: int
    upper_tag: str
    candidates: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "lower_tag": self.lower_tag,
            "upper": self.upper,
            "upper_tag": self.upper_tag,
            "candidates": dict(self.candidates),
        }


def _check(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("bounds need n >= 2")
    if not is_connected(g):
        raise GraphError("bounds need a connected graph")


def lower_candidates(g: Graph, strict: bool = False) -> dict[str, int]:
    _check(g)
    out = {TRIVIAL_2: 2}
    if len(cut_vertices(g)) >= 2:
        out[TWO_CUT_VERTICES] = 3
    if g.is_tree():
        d = metrics(g).diameter
        # strict: the diametral path has d+1 vertices, so the path formula applies to it
        out[TREE_LOG_DIAMETER] = ceil_log2(d + 2) if strict else ceil_log2(d + 1)
        out[TREE_CHROMATIC] = 2
    return out


def upper_candidates(g: Graph) -> dict[str, int]:
    _check(g)
    n = g.n
    out = {RADIUS: metrics(g).radius + 1}
    if g.is_tree() and n >= 3:
        out[TREE_RANKING] = floor_log_three_halves(n)
        if n >= 5:
            out[TREE_HALF_ORDER] = -(-n // 2)
    out[TRIVIAL_N] = n
    return out


_LOWER_PREFERENCE = (TREE_LOG_DIAMETER, TWO_CUT_VERTICES, TREE_CHROMATIC, TRIVIAL_2)


def lower_bound(g: Graph, strict: bool = False) -> tuple[int, str]:
    cands = lower_candidates(g, strict)
    best = max(cands.values())
    tag = next(t for t in _LOWER_PREFERENCE if cands.get(t) == best)
    return best, tag


def upper_bound(g: Graph) -> tuple[int, str]:
    cands = upper_candidates(g)
    best = min(cands.values())
    # dict order is the preference order: radius first, trivial-n last
    tag = next(t for t, val in cands.items() if val == best)
    return best, tag


def bounds_report(g: Graph, strict: bool = False) -> BoundsReport:
    lo = lower_candidates(g, strict)
    hi = upper_candidates(g)
    lv, lt = lower_bound(g, strict)
    uv, ut = upper_bound(g)
    return BoundsReport(lv, lt, uv, ut, {**{f"lower:{k}": v for k, v in lo.items()},
                                         **{f"upper:{k}": v for k, v in hi.items()}})


def is_spanning_tree(g: Graph, t: Graph) -> bool:
    return t.n == g.n and t.is_tree() and all(g.has_edge(a, b) for a, b in t.edges())


def spanning_tree_bound(g: Graph, t: Graph, opts=None) -> int:
    """Exact value for the spanning tree ``t``, which bounds ``g`` from above."""
    from .solver import vcfc_exact

    if not is_spanning_tree(g, t):
        raise GraphError("second argument is not a spanning tree of the first")
    res = vcfc_exact(t, opts)
    if res.vcfc is None:
        raise GraphError(f"spanning tree solve incomplete ({res.status})")
    return res.vcfc
