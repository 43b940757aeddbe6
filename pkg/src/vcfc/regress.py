"""Regression suites for the known results, over enumerated and constructed graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .bounds import ceil_log2, lower_bound, upper_bound
from .constructions import (
    centroid_ranking,
    corona_3coloring,
    ranking_as_coloring,
    ruler_coloring,
    star_cutedges_3coloring,
    tree_level_coloring,
)
from .decomposition import cut_edge_subgraph, cut_vertices
from .graph import (
    Graph,
    GraphError,
    all_connected,
    bridge_star,
    complete_graph,
    cycle_corona,
    encode_graph6,
    from_edge_list,
    metrics,
    nonisomorphic_trees,
    path_graph,
    random_tree,
)
from .solver import SolveOptions, canonical_colorings, feasible_k, vcfc_brute, vcfc_exact
from .verifier import VertexColoring, exists_cf_path, exists_cf_path_naive, is_cfvc

MAX_REGRESS_N = 7
SEARCH_ONLY = SolveOptions(use_fast_paths=False, use_bounds=False)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "notes": self.notes,
            "elapsed": round(self.elapsed, 3),
        }


def corpus(max_n: int, min_n: int = 1, labeled_limit: int = 6) -> Iterator[Graph]:
    """Connected graphs: every labelled one up to ``labeled_limit`` vertices,
    one per isomorphism class above it."""
    for n in range(min_n, max_n + 1):
        yield from all_connected(n, dedup=n > labeled_limit)


def cut_edge_star_family() -> list[Graph]:
    """Twenty-five graphs whose bridges form a star, t = 1..5 bridges."""
    # (cycle lengths, hub cycle, hub cycle used when t = 1 and none is given)
    variants = [
        lambda t: ([3] * t, 0, 3),
        lambda t: ([4] * t, 0, 4),
        lambda t: ([5] * t, 0, 5),
        lambda t: ([3, 4, 5, 3, 4][:t], 0, 5),
        lambda t: ([3] * t, 4, 4),
    ]
    family = []
    for t in range(1, 6):
        for make in variants:
            lengths, hub, single_hub = make(t)
            if t == 1 and hub == 0:
                # a single bridge needs a block at its centre too
                hub = single_hub
            family.append(bridge_star(lengths, hub))
    return family


def path_with_end_triangle() -> Graph:
    return from_edge_list(9, [(i, i + 1) for i in range(6)] + [(6, 7), (7, 8), (8, 6)])


def _g6(g: Graph) -> str:
    return encode_graph6(g)


def suite_oracle_equivalence(max_n: int) -> SuiteResult:
    res = SuiteResult("oracle-equivalence")
    for n in range(2, min(max_n, 5) + 1):
        for g in all_connected(n):
            for colors in canonical_colorings(n, min(3, n)):
                col = VertexColoring(colors, max(colors))
                for u, v in combinations(range(n), 2):
                    res.checked += 1
                    fast = exists_cf_path(g, col, u, v)
                    slow = exists_cf_path_naive(g, col, u, v)
                    if (fast is None) != (slow is None):
                        res.violations.append(f"{_g6(g)} {colors} pair ({u},{v})")
    return res


def suite_solver_oracle(max_n: int) -> SuiteResult:
    res = SuiteResult("solver-vs-brute")
    for g in corpus(min(max_n, 6), min_n=1):
        res.checked += 1
        a = vcfc_exact(g).vcfc
        b = vcfc_brute(g)
        if a != b:
            res.violations.append(f"{_g6(g)} exact={a} brute={b}")
    return res


def suite_path_formula(max_n: int) -> SuiteResult:
    res = SuiteResult("path-formula")
    for n in range(2, 13):
        res.checked += 1
        got = vcfc_exact(path_graph(n), SEARCH_ONLY).vcfc
        if got != ceil_log2(n + 1):
            res.violations.append(f"P{n}: search {got} != {ceil_log2(n + 1)}")
    for n in range(1, 65):
        res.checked += 1
        if not is_cfvc(path_graph(n), ruler_coloring(n)).verdict:
            res.violations.append(f"ruler coloring of P{n} fails")
    return res


def suite_complete(max_n: int) -> SuiteResult:
    res = SuiteResult("complete-graphs")
    for n in range(2, 9):
        res.checked += 1
        got = vcfc_exact(complete_graph(n)).vcfc
        if got != 2:
            res.violations.append(f"K{n}: {got}")
    return res


def suite_two_colour(max_n: int) -> SuiteResult:
    res = SuiteResult("two-colour-characterisation")
    for g in corpus(max_n, min_n=3):
        res.checked += 1
        two = feasible_k(g, 2, SEARCH_ONLY) is not None
        ncut = len(cut_vertices(g))
        if two != (ncut <= 1):
            res.violations.append(f"{_g6(g)} 2-colorable={two} cut vertices={ncut}")
    return res


def suite_max_degree(max_n: int) -> SuiteResult:
    res = SuiteResult("max-degree")
    for g in corpus(max_n, min_n=2):
        n = g.n
        if len(cut_vertices(g)) >= 2 and n - 4 <= g.max_degree <= n - 2:
            res.checked += 1
            got = vcfc_exact(g, SEARCH_ONLY).vcfc
            if got != 3:
                res.violations.append(f"{_g6(g)} vcfc={got}")
    for n, found in tightness_probe().items():
        res.notes.append(f"n={n}: tree with max degree n-5 and vcfc 4: {found or 'none'}")
    return res


def tightness_probe(sizes=range(8, 12)) -> dict[int, str | None]:
    """First tree (graph6) per size with max degree n-5 needing four colours."""
    out = {}
    for n in sizes:
        out[n] = None
        for t in nonisomorphic_trees(n):
            if t.max_degree == n - 5 and vcfc_exact(t).vcfc == 4:
                out[n] = _g6(t)
                break
    return out


def suite_cut_edge_star(max_n: int) -> SuiteResult:
    res = SuiteResult("cut-edge-star")
    for g in cut_edge_star_family():
        res.checked += 1
        if not cut_edge_subgraph(g).is_star() or len(cut_vertices(g)) < 2:
            res.violations.append(f"{_g6(g)} bridges do not form a star")
            continue
        if not is_cfvc(g, star_cutedges_3coloring(g)).verdict:
            res.violations.append(f"{_g6(g)} construction fails")
        got = vcfc_exact(g).vcfc
        if got != 3:
            res.violations.append(f"{_g6(g)} vcfc={got}")
    return res


def suite_corona(max_n: int) -> SuiteResult:
    res = SuiteResult("cycle-corona")
    for n in range(3, 7):
        for t in range(1, 4):
            res.checked += 1
            g = cycle_corona(n, t)
            if not is_cfvc(g, corona_3coloring(g)).verdict:
                res.violations.append(f"corona(C{n},{t}) construction fails")
            got = vcfc_exact(g).vcfc
            if got != 3:
                res.violations.append(f"corona(C{n},{t}) vcfc={got}")
    return res


def suite_end_triangle(max_n: int) -> SuiteResult:
    res = SuiteResult("end-triangle-probe")
    res.checked = 1
    got = vcfc_exact(path_with_end_triangle(), SEARCH_ONLY).vcfc
    if got is None or got < 4:
        res.violations.append(f"P7 with end triangle: vcfc={got}")
    return res


def suite_tree_bounds(max_n: int, count: int = 200, seed: int = 2017) -> SuiteResult:
    res = SuiteResult("tree-bounds")
    for i in range(count):
        n = 3 + (seed + i) % 10
        t = random_tree(n, seed * 1_000_003 + i)
        res.checked += 1
        met = metrics(t)
        got = vcfc_exact(t).vcfc
        lo = max(2, ceil_log2(met.diameter + 1))
        hi = min(met.radius + 1, upper_bound(t)[0])
        if not lo <= got <= hi:
            res.violations.append(f"{_g6(t)} vcfc={got} outside [{lo},{hi}]")
        if not is_cfvc(t, tree_level_coloring(t)).verdict:
            res.violations.append(f"{_g6(t)} level coloring fails")
        if not is_cfvc(t, ranking_as_coloring(t, centroid_ranking(t))).verdict:
            res.violations.append(f"{_g6(t)} ranking coloring fails")
    return res


def suite_sandwich_and_conjecture(max_n: int) -> list[SuiteResult]:
    sandwich = SuiteResult("bounds-sandwich")
    conj = SuiteResult("path-bound-conjecture")
    for g in corpus(max_n, min_n=2):
        got = vcfc_exact(g).vcfc
        sandwich.checked += 1
        conj.checked += 1
        lo, hi = lower_bound(g)[0], upper_bound(g)[0]
        if not lo <= got <= hi:
            sandwich.violations.append(f"{_g6(g)} vcfc={got} outside [{lo},{hi}]")
        if got > ceil_log2(g.n + 1):
            conj.violations.append(f"COUNTEREXAMPLE {_g6(g)} vcfc={got} > {ceil_log2(g.n + 1)}")
    return [sandwich, conj]


SUITES: list[Callable[[int], SuiteResult | list[SuiteResult]]] = [
    suite_oracle_equivalence,
    suite_solver_oracle,
    suite_path_formula,
    suite_complete,
    suite_two_colour,
    suite_max_degree,
    suite_cut_edge_star,
    suite_corona,
    suite_end_triangle,
    suite_tree_bounds,
    suite_sandwich_and_conjecture,
]


def run_regression(max_n: int = 6, progress: Callable[[SuiteResult], None] | None = None) -> list[SuiteResult]:
    if not 1 <= max_n <= MAX_REGRESS_N:
        raise GraphError(f"max n must lie in 1..{MAX_REGRESS_N}")
    results = []
    for suite in SUITES:
        t0 = time.perf_counter()
        out = suite(max_n)
        batch = out if isinstance(out, list) else [out]
        for r in batch:
            r.elapsed = time.perf_counter() - t0
            results.append(r)
            if progress:
                progress(r)
    return results
