"""Exact conflict-free vertex-connection numbers by backtracking search."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from . import bounds
from .constructions import ruler_coloring_for
from .decomposition import cut_vertices, pair_spans
from .graph import Graph, GraphError, require_connected
from .verifier import (
    CfvcCertificate,
    VertexColoring,
    has_cf_path,
    is_cfvc,
    is_cfvc_naive,
)

BRUTE_CAP = 8

OK = "ok"
BUDGET_EXHAUSTED = "budget-exhausted"
MAX_K_EXCEEDED = "max-k-exceeded"


class BudgetExhausted(RuntimeError):
    """The search hit its node budget before reaching a verdict."""


@dataclass
class SolveOptions:
    max_k: int | None = None
    node_budget: int | None = None
    use_fast_paths: bool = True
    tree_adjacent_distinct: bool = True
    incremental_pruning: bool = True
    # when false the search starts at k=1 and runs up to n, trusting no bound
    use_bounds: bool = True
    strict_bounds: bool = False


@dataclass
class SolveStats:
    nodes: int = 0
    colorings_tested: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    vcfc: int | None
    coloring: VertexColoring | None
    certificate: CfvcCertificate | None
    status: str = OK
    method: str = "search"
    lower: int | None = None
    upper: int | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def complete(self) -> bool:
        return self.status == OK


def search_order(g: Graph) -> list[int]:
    """BFS order from the lowest-id vertex of maximum degree."""
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


class _Search:
    """Backtracking over vertex colourings in :func:`search_order`.

    With incremental pruning each pair is checked as soon as its span (every
    vertex on some path between its ends) is coloured. A failed check only
    depends on the colours inside that span, which makes conflict-directed
    backjumping sound: when a subtree fails without involving the current
    position, the search jumps straight past it.
    """

    def __init__(self, g: Graph, k: int, opts: SolveOptions, stats: SolveStats):
        self.g = g
        self.k = k
        self.opts = opts
        self.stats = stats
        self.order = search_order(g)
        self.tree = g.m == g.n - 1
        self.colors = [0] * g.n
        self.class_masks = [0] * (k + 1)
        self.pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
        self.last_fail = 0
        pos = {v: i for i, v in enumerate(self.order)}
        self.parent_pos = [-1] * g.n
        if self.tree:
            for i, v in enumerate(self.order[1:], 1):
                self.parent_pos[i] = min(pos[y] for y in g.adj[v])
        # decided_at[i]: pairs whose span is fully coloured once position i is,
        # with the span given as a bitmask over positions
        self.decided_at: list[list[tuple[int, int, int]]] | None = None
        if opts.incremental_pruning:
            spans = pair_spans(g)
            self.decided_at = [[] for _ in range(g.n)]
            for u, v in self.pairs:
                span = spans[u][v]
                where = 0
                for x in range(g.n):
                    if span >> x & 1:
                        where |= 1 << pos[x]
                self.decided_at[where.bit_length() - 1].append((u, v, where))

    def run(self) -> list[int] | None:
        if self.decided_at is None:
            return self._assign_plain(0, 0)
        return self._assign_cbj(0, 0)[0]

    def _tick(self) -> None:
        self.stats.nodes += 1
        budget = self.opts.node_budget
        if budget is not None and self.stats.nodes > budget:
            raise BudgetExhausted(f"node budget {budget} exhausted at k={self.k}")

    def _forbidden(self, i: int) -> int:
        if self.tree and i > 0 and self.opts.tree_adjacent_distinct:
            return self.colors[self.order[self.parent_pos[i]]]
        return 0

    def _assign_cbj(self, i: int, used: int) -> tuple[list[int] | None, int]:
        g, colors = self.g, self.colors
        if i == g.n:
            self.stats.colorings_tested += 1
            return list(colors), 0
        v = self.order[i]
        bit = 1 << v
        top = min(used + 1, self.k)
        # values cut off by canonical introduction depend on every earlier position
        conflict = (1 << i) - 1 if top < self.k else 0
        forbid = self._forbidden(i)
        for c in range(1, top + 1):
            if c == forbid:
                conflict |= 1 << self.parent_pos[i]
                continue
            self._tick()
            colors[v] = c
            self.class_masks[c] |= bit
            failed = self._failing_span(i)
            if failed:
                conflict |= failed
            else:
                found, child = self._assign_cbj(i + 1, max(used, c))
                if found is not None:
                    return found, 0
                if not child >> i & 1:
                    self.class_masks[c] &= ~bit
                    colors[v] = 0
                    return None, child
                conflict |= child
            self.class_masks[c] &= ~bit
        colors[v] = 0
        return None, conflict & ~(1 << i)

    def _assign_plain(self, i: int, used: int) -> list[int] | None:
        g, colors = self.g, self.colors
        if i == g.n:
            self.stats.colorings_tested += 1
            return list(colors) if self._leaf_ok() else None
        v = self.order[i]
        bit = 1 << v
        forbid = self._forbidden(i)
        for c in range(1, min(used + 1, self.k) + 1):
            if c == forbid:
                continue
            self._tick()
            colors[v] = c
            self.class_masks[c] |= bit
            found = self._assign_plain(i + 1, max(used, c))
            if found is not None:
                return found
            self.class_masks[c] &= ~bit
        colors[v] = 0
        return None

    def _classes(self) -> dict[int, int]:
        return {c: m for c, m in enumerate(self.class_masks) if m}

    def _failing_span(self, i: int) -> int:
        """Position mask of the first pair decided at ``i`` that has no
        conflict-free path, or 0 when all of them pass."""
        pairs = self.decided_at[i]
        if not pairs:
            return 0
        g, colors = self.g, self.colors
        classes = self._classes()
        for u, v, where in pairs:
            if not has_cf_path(g, colors, classes, u, v, self.tree):
                return where
        return 0

    def _leaf_ok(self) -> bool:
        g, colors = self.g, self.colors
        classes = self._classes()
        pairs = self.pairs
        # retry the last failing pair first: most rejected colourings fail on it again
        u, v = pairs[self.last_fail]
        if not has_cf_path(g, colors, classes, u, v, self.tree):
            return False
        for idx, (u, v) in enumerate(pairs):
            if idx != self.last_fail and not has_cf_path(g, colors, classes, u, v, self.tree):
                self.last_fail = idx
                return False
        return True


def feasible_k(g: Graph, k: int, opts: SolveOptions | None = None,
               stats: SolveStats | None = None) -> VertexColoring | None:
    """A colouring with at most ``k`` colours that is conflict-free connected, or None.

    Raises :class:`BudgetExhausted` when the node budget runs out, which is
    distinct from returning None (proved infeasible).
    """
    opts = opts or SolveOptions()
    require_connected(g)
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} outside 1..{g.n}")
    found = _feasible(g, k, opts, stats if stats is not None else SolveStats())
    return None if found is None else found[0]


def _feasible(g: Graph, k: int, opts: SolveOptions, stats: SolveStats):
    found = _Search(g, k, opts, stats).run()
    if found is None:
        return None
    coloring = VertexColoring(tuple(found), k)
    # the certificate route shares nothing with the boolean checks used in the search
    cert = is_cfvc(g, coloring)
    if not cert.verdict:
        raise AssertionError("search accepted a coloring the verifier rejects")
    return coloring, cert


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _fast_path(g: Graph) -> tuple[VertexColoring, str] | None:
    n = g.n
    if _is_complete(g):
        colors = [1] * n
        colors[0] = 2
        return VertexColoring(tuple(colors), 2), "complete"
    if g.m == n - 1 and g.max_degree <= 2:
        return ruler_coloring_for(g), "path"
    cuts = cut_vertices(g)
    if not cuts:
        colors = [1] * n
        colors[0] = 2
        return VertexColoring(tuple(colors), 2), "two-connected"
    if len(cuts) == 1:
        colors = [1] * n
        colors[next(iter(cuts))] = 2
        return VertexColoring(tuple(colors), 2), "one-cut-vertex"
    return None


def vcfc_exact(g: Graph, opts: SolveOptions | None = None) -> SolveResult:
    opts = opts or SolveOptions()
    require_connected(g)
    if g.n == 0:
        raise GraphError("empty graph")
    t0 = time.perf_counter()
    stats = SolveStats()

    def done(result: SolveResult) -> SolveResult:
        stats.elapsed = time.perf_counter() - t0
        result.stats = stats
        return result

    if g.n == 1:
        coloring = VertexColoring((1,), 1)
        return done(SolveResult(1, coloring, is_cfvc(g, coloring), method="trivial", lower=1, upper=1))

    if opts.use_bounds:
        lo, _ = bounds.lower_bound(g, opts.strict_bounds)
        hi, _ = bounds.upper_bound(g)
    else:
        lo, hi = 1, g.n
    max_k = min(opts.max_k if opts.max_k is not None else hi, g.n)

    if opts.use_fast_paths:
        fast = _fast_path(g)
        if fast is not None:
            coloring, method = fast
            cert = is_cfvc(g, coloring)
            if not cert.verdict:
                raise AssertionError(f"{method} construction failed verification")
            return done(SolveResult(coloring.k, coloring, cert, method=method, lower=lo, upper=hi))

    for k in range(lo, max_k + 1):
        try:
            found = _feasible(g, k, opts, stats)
        except BudgetExhausted:
            return done(SolveResult(None, None, None, BUDGET_EXHAUSTED, lower=lo, upper=hi))
        if found is not None:
            return done(SolveResult(k, found[0], found[1], lower=lo, upper=hi))
    return done(SolveResult(None, None, None, MAX_K_EXCEEDED, lower=lo, upper=hi))


def canonical_colorings(n: int, k: int, exact: bool = False):
    """Restricted growth strings: colour 1 first, each new colour one above the max so far."""
    colors = [0] * n

    def rec(i: int, top: int):
        if i == n:
            if not exact or top == k:
                yield tuple(colors)
            return
        if exact and k - top > n - i:
            return
        for c in range(1, min(top + 1, k) + 1):
            colors[i] = c
            yield from rec(i + 1, max(top, c))

    if n == 0:
        return
    yield from rec(0, 0)


def vcfc_brute(g: Graph, cap: int = BRUTE_CAP) -> int:
    """Smallest k admitting a verified colouring, via path enumeration only."""
    if g.n > cap:
        raise GraphError(f"brute-force solver capped at n <= {cap}")
    require_connected(g)
    if g.n == 1:
        return 1
    for k in range(1, g.n + 1):
        # colourings with fewer than k colours were all rejected at smaller k
        for colors in canonical_colorings(g.n, k, exact=True):
            if is_cfvc_naive(g, VertexColoring(colors, k), cap=cap):
                return k
    raise AssertionError("distinct colours always work; unreachable")
