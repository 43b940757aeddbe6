import os

import pytest

from vcfc.graph import all_connected
from vcfc.solver import SolveOptions, vcfc_exact

SEARCH_ONLY = SolveOptions(use_fast_paths=False, use_bounds=False)

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("VCFC_SLOW"):
        return
    skip = pytest.mark.skip(reason="set VCFC_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def labeled_search():
    """(graph, vcfc) for every labelled connected graph on 1..6 vertices.

    Solved by plain search from k=1 with no bounds or shortcuts, so the
    results those shortcuts rely on are tested independently.
    """
    out = []
    for n in range(1, 7):
        for g in all_connected(n):
            res = vcfc_exact(g, SEARCH_ONLY)
            assert res.complete
            out.append((g, res.vcfc))
    return out
