import pytest

from nearfactor.graph import Graph, disjoint_union, generate

ACCEPTANCE_LINES: list[str] = []


def cycle(n):
    return generate("cycle", n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def two_triangles():
    return disjoint_union(cycle(3), cycle(3))


@pytest.fixture
def k2():
    return generate("complete", 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
