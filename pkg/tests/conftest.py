import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rindep.graph import Graph
from rindep.generators import cycle, path, star

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 12, max_p: float = 0.5):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = draw(st.floats(0.05, max_p))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def subsets(g: Graph, min_size: int = 0, max_size: int | None = None):
    return st.lists(st.integers(0, max(g.n - 1, 0)), min_size=min_size,
                    max_size=g.n if max_size is None else max_size, unique=True) if g.n else st.just([])


def floyd_warshall(g: Graph) -> np.ndarray:
    inf = 10**6
    D = np.full((g.n, g.n), inf, dtype=np.int64)
    np.fill_diagonal(D, 0)
    for u, v in g.edges():
        D[u, v] = D[v, u] = 1
    for w in range(g.n):
        D = np.minimum(D, D[:, [w]] + D[[w], :])
    return D


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def star4():
    return star(4)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
