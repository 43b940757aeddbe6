"""Command-line interface.

Usage:
    vcfc solve --gen "path 7"
    vcfc solve --input graphs.g6 --json
    vcfc verify --input p7.txt --format edgelist --coloring p7.col
    vcfc construct ruler --gen "path 7"
    vcfc bounds --gen "random_tree 12 42"
    vcfc generate all_connected 5
    vcfc regress --max-n 6
    vcfc conjecture --input graphs.g6
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterator

from .bounds import bounds_report, ceil_log2
from .constructions import CONSTRUCTIONS
from .decomposition import cut_vertices
from .graph import (
    Graph,
    GraphError,
    encode_graph6,
    format_edge_list,
    generate_stream,
    is_connected,
    metrics,
    parse_edge_list,
    parse_graph6,
)
from .regress import MAX_REGRESS_N, run_regression
from .solver import OK, SolveOptions, vcfc_exact
from .verifier import ColoringError, format_coloring, is_cfvc, parse_coloring

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

SKIPPED = "skipped"
ERROR = "error"
UNKNOWN = "unknown"


@dataclass
class Record:
    id: int
    graph6: str | None = None
    n: int | None = None
    m: int | None = None
    cut_vertices: int | None = None
    max_degree: int | None = None
    radius: int | None = None
    diameter: int | None = None
    lower: int | None = None
    upper: int | None = None
    vcfc: int | None = None
    method: str | None = None
    elapsed: float | None = None
    status: str = OK
    message: str | None = None


@dataclass
class ConjectureVerdict:
    id: int
    n: int
    vcfc: int | None
    path_bound: int
    holds: bool | None
    status: str = OK


# input -----------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _guess_format(text: str) -> str:
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return "edgelist"
    return "g6"


def iter_inputs(args) -> Iterator[tuple[int, Graph | None, str | None]]:
    """Yield ``(id, graph, error)``; ids are 1-based line numbers for graph6 streams."""
    if args.gen:
        for i, g in enumerate(generate_stream(args.gen, args.seed), 1):
            yield i, g, None
        return
    if not args.input:
        raise GraphError("give --input FILE or --gen SPEC")
    text = _read_text(args.input)
    fmt = args.format or _guess_format(text)
    if fmt == "edgelist":
        yield 1, parse_edge_list(text), None
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line), None
        except GraphError as exc:
            yield lineno, None, f"line {lineno}: {exc}"


def _single_graph(args) -> Graph:
    graphs = [g for _, g, err in iter_inputs(args) if g is not None]
    errors = [err for _, g, err in iter_inputs(args) if err]
    if errors:
        raise GraphError(errors[0])
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _options(args) -> SolveOptions:
    return SolveOptions(
        max_k=args.max_k,
        node_budget=args.node_budget,
        use_fast_paths=not args.no_fast_paths,
        strict_bounds=args.strict_bounds,
    )


# output ----------------------------------------------------------------


def _emit(rows: list[dict], args, out=None) -> None:
    out = out or sys.stdout
    if args.json:
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    if not rows:
        return
    cols = list(rows[0].keys())
    if args.csv:
        writer = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return
    shown = [["" if r[c] is None else str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[j]) for row in shown)) for j, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in shown:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


# per-graph work --------------------------------------------------------


def solve_record(item: tuple[int, Graph | None, str | None], opts: SolveOptions) -> Record:
    gid, g, err = item
    if g is None:
        return Record(gid, status=ERROR, message=err)
    rec = Record(gid, encode_graph6(g) if g.n <= 62 else None, g.n, g.m)
    if not is_connected(g) or g.n == 0:
        rec.status = SKIPPED
        rec.message = "disconnected"
        return rec
    met = metrics(g)
    rec.max_degree, rec.radius, rec.diameter = met.max_degree, met.radius, met.diameter
    rec.cut_vertices = len(cut_vertices(g))
    res = vcfc_exact(g, opts)
    rec.lower, rec.upper = res.lower, res.upper
    rec.vcfc, rec.method, rec.status = res.vcfc, res.method, res.status
    rec.elapsed = round(res.stats.elapsed, 6)
    return rec


def _solve_all(args) -> list[Record]:
    opts = _options(args)
    items = list(iter_inputs(args))
    if args.threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            return list(pool.map(solve_record, items, [opts] * len(items), chunksize=16))
    return [solve_record(item, opts) for item in items]


# commands --------------------------------------------------------------


def cmd_solve(args) -> int:
    records = _solve_all(args)
    _emit([asdict(r) for r in records], args)
    if any(r.status == ERROR for r in records):
        return EXIT_INPUT
    if any(r.status not in (OK, SKIPPED) for r in records):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _single_graph(args)
    coloring = parse_coloring(_read_text(args.coloring))
    if coloring.n != g.n:
        raise ColoringError(f"coloring covers {coloring.n} vertices, graph has {g.n}")
    cert = is_cfvc(g, coloring)
    if args.json:
        json.dump(cert.to_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"verdict: {str(cert.verdict).lower()}")
        if cert.failure:
            print(f"failing pair: {cert.failure[0]} {cert.failure[1]}")
    return EXIT_OK if cert.verdict else EXIT_VIOLATION


def cmd_construct(args) -> int:
    g = _single_graph(args)
    coloring = CONSTRUCTIONS[args.name](g)
    cert = is_cfvc(g, coloring)
    if args.json:
        json.dump({"colors": list(coloring.colors), "k": coloring.k, "verdict": cert.verdict},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(format_coloring(coloring))
        logger.info("construction %s verifies: %s", args.name, cert.verdict)
    return EXIT_OK if cert.verdict else EXIT_VIOLATION


def cmd_bounds(args) -> int:
    rows = []
    for gid, g, err in iter_inputs(args):
        if g is None:
            raise GraphError(err)
        if not is_connected(g) or g.n < 2:
            rows.append({"id": gid, "n": g.n, "lower": None, "lower_tag": None,
                         "upper": None, "upper_tag": None, "status": SKIPPED})
            continue
        rep = bounds_report(g, args.strict_bounds)
        rows.append({"id": gid, "n": g.n, "lower": rep.lower, "lower_tag": rep.lower_tag,
                     "upper": rep.upper, "upper_tag": rep.upper_tag, "status": OK})
    _emit(rows, args)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = " ".join([args.family] + [str(p) for p in args.params])
    for g in generate_stream(spec, args.seed):
        if args.format == "edgelist":
            sys.stdout.write(format_edge_list(g))
        else:
            print(encode_graph6(g))
    return EXIT_OK


def cmd_regress(args) -> int:
    if not 1 <= args.max_n <= MAX_REGRESS_N:
        raise GraphError(f"--max-n must lie in 1..{MAX_REGRESS_N}")

    def progress(r):
        if not (args.json or args.csv):
            mark = "PASS" if r.passed else "FAIL"
            print(f"[{mark}] {r.name}: {r.checked} checked, {len(r.violations)} violations "
                  f"({r.elapsed:.1f}s)", flush=True)
            for v in r.violations[:10]:
                print(f"    violation: {v}")
            for note in r.notes:
                print(f"    note: {note}")

    results = run_regression(args.max_n, progress)
    if args.json or args.csv:
        rows = [r.to_dict() for r in results]
        if args.csv:
            for row in rows:
                row["violations"] = len(row["violations"])
                row["notes"] = "; ".join(row["notes"])
        _emit(rows, args)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def conjecture_verdict(rec: Record) -> ConjectureVerdict:
    bound = ceil_log2((rec.n or 0) + 1)
    if rec.status != OK:
        # an incomplete solve proves nothing either way
        status = rec.status if rec.status in (SKIPPED, ERROR) else UNKNOWN
        return ConjectureVerdict(rec.id, rec.n or 0, None, bound, None, status)
    return ConjectureVerdict(rec.id, rec.n, rec.vcfc, bound, rec.vcfc <= bound)


def cmd_conjecture(args) -> int:
    records = _solve_all(args)
    verdicts = [conjecture_verdict(r) for r in records]
    _emit([asdict(v) for v in verdicts], args)
    violations = [v for v in verdicts if v.holds is False]
    for v in violations:
        print(f"!!! CONJECTURE VIOLATED by graph {v.id}: vcfc={v.vcfc} > {v.path_bound}", file=sys.stderr)
    if violations:
        return EXIT_VIOLATION
    if any(v.status == ERROR for v in verdicts):
        return EXIT_INPUT
    if any(v.status == UNKNOWN for v in verdicts):
        return EXIT_BUDGET
    return EXIT_OK


# parser ----------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=["g6", "edgelist"], help="input format (guessed when omitted)")
    p.add_argument("--gen", help='generator spec, e.g. "path 7" or "all_connected 5"')
    p.add_argument("--seed", type=int, default=0, help="seed for randomised generators")


def _add_output(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON report")
    g.add_argument("--csv", action="store_true", help="CSV report")


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-k", type=int, help="search ceiling (default: upper bound)")
    p.add_argument("--node-budget", type=int, help="cap on search nodes per graph")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--strict-bounds", action="store_true", help="use ceil(log2(d+2)) for trees")
    p.add_argument("--no-fast-paths", action="store_true", help="always search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vcfc", description="Conflict-free vertex-connection numbers")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact vcfc for each input graph")
    _add_input(p)
    _add_output(p)
    _add_solver(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring")
    _add_input(p)
    p.add_argument("--coloring", "-c", required=True, help="coloring file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit a named construction's coloring")
    p.add_argument("name", choices=sorted(CONSTRUCTIONS))
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="lower and upper bounds")
    _add_input(p)
    _add_output(p)
    p.add_argument("--strict-bounds", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="write graphs of a family")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised generators")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("regress", help="run the regression suites")
    p.add_argument("--max-n", type=int, default=6)
    _add_output(p)
    p.set_defaults(func=cmd_regress)

    p = sub.add_parser("conjecture", help="hunt for graphs beating the path bound")
    _add_input(p)
    _add_output(p)
    _add_solver(p)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, ColoringError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
