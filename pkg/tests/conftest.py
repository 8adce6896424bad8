import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clique_kernels import generators as gen  # noqa: E402
from clique_kernels.graph import Graph  # noqa: E402


@pytest.fixture
def p3():
    return gen.path(3)


@pytest.fixture
def c5():
    return gen.cycle(5)


@pytest.fixture
def k4():
    return gen.complete(4)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def pytest_terminal_summary(terminalreporter):
    from suite import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
