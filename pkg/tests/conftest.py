import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from alphaprod import BipartiteGraph, FamilySpec, VertexLabeling, enumerate_family


@pytest.fixture
def k2():
    return BipartiteGraph({0, 1}, [(0, 1)], {0}, {1})


@pytest.fixture
def star2():
    return BipartiteGraph({0, 1, 2}, [(0, 1), (0, 2)], {0}, {1, 2})


@pytest.fixture
def path_abc():
    """Path a-b-c with a=0, b=1, c=2; parts {a, c} and {b}."""
    return BipartiteGraph({0, 1, 2}, [(0, 1), (1, 2)], {0, 2}, {1})


@pytest.fixture
def six_edge_family():
    return enumerate_family(FamilySpec({0, 1, 2}, {3, 4, 6}, 6, "alpha"))


@pytest.fixture
def star_case(star2, six_edge_family):
    """The path P with E = {01, 02}, L_P = {0}, its identity alpha labeling, and h."""
    f = VertexLabeling({0: 0, 1: 1, 2: 2}, "alpha", characteristic=0)
    h = {(0, 2): 0, (0, 1): len(six_edge_family) - 1}
    return star2, f, six_edge_family, h


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        verdict, title, seconds = results[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title} ({seconds:.2f}s)")
