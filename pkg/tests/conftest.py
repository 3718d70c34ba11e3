from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from zagreb.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    word = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return Graph.from_edge_word(n, word)


@st.composite
def graph_with_perm(draw, min_n: int = 1, max_n: int = 9) -> tuple[Graph, list[int]]:
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def pytest_terminal_summary(terminalreporter):
    # acceptance lines are collected by tests/test_acceptance.py
    from tests_support import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda s: int(s.split()[0])):
            terminalreporter.write_line(RESULTS[key])
