import numpy as np
import pytest
from hypothesis import given, strategies as st

from rindep.errors import InputError
from rindep.generators import clique, cycle, path, star
from rindep.graph import (Graph, ball, bounded_bfs, captures_pair, captures_set, distances,
                          induced_subgraph, is_r_independent)

from conftest import floyd_warshall, small_graphs


class TestConstruction:
    def test_csr_is_symmetric_and_sorted(self):
        g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 1)])
        assert g.edges() == [(0, 1), (0, 2), (1, 3)]
        assert list(g.neighbors(1)) == [0, 3]
        assert g.n == 4 and g.m == 3 and g.size == 7

    def test_duplicates_and_loops_counted(self):
        g, cleanup = Graph.from_edges_counted(3, [(0, 1), (1, 0), (2, 2)])
        assert g.m == 1
        assert (cleanup.duplicates, cleanup.self_loops) == (1, 1)

    def test_immutable(self):
        g = path(3)
        with pytest.raises(ValueError):
            g.indices[0] = 2

    def test_out_of_range_edge(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 5)])

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        assert g.n == 0 and g.m == 0


class TestBoundedBfs:
    def test_path_prefix(self, p5):
        assert bounded_bfs(p5, 0, 2) == {0: 0, 1: 1, 2: 2}

    def test_zero_radius(self, c6):
        assert bounded_bfs(c6, 4, 0) == {4: 0}

    def test_cycle_full_ball(self, c6):
        d = bounded_bfs(c6, 0, 3)
        assert sorted(d) == list(range(6)) and d[3] == 3

    def test_negative_radius_rejected(self, c6):
        with pytest.raises(InputError):
            bounded_bfs(c6, 0, -1)

    @given(small_graphs(), st.integers(0, 6))
    def test_matches_floyd_warshall(self, g, radius):
        D = floyd_warshall(g)
        for s in range(g.n):
            expect = {v: int(D[s, v]) for v in range(g.n) if D[s, v] <= radius}
            assert bounded_bfs(g, s, radius) == expect


class TestBall:
    def test_star_center(self, star4):
        assert ball(star4, [0], 1) == tuple(range(5))

    def test_empty_sources(self, c6):
        assert ball(c6, [], 3) == ()

    def test_two_antipodes(self, c6):
        assert ball(c6, [0, 3], 1) == tuple(range(6))


class TestIndependence:
    def test_cycle_examples(self, c6):
        assert is_r_independent(c6, [0, 3], 2)
        assert not is_r_independent(c6, [0, 2], 2)

    @given(small_graphs(), st.integers(0, 5))
    def test_singleton(self, g, r):
        assert is_r_independent(g, [g.n - 1], r)

    @given(small_graphs(), st.integers(1, 3), st.data())
    def test_even_radius_ball_disjointness(self, g, half, data):
        r = 2 * half
        X = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=min(g.n, 5), unique=True))
        balls = [set(ball(g, [x], half)) for x in X]
        disjoint = all(not (balls[i] & balls[j]) for i in range(len(X)) for j in range(i + 1, len(X)))
        assert is_r_independent(g, X, r) == disjoint


class TestCapture:
    def test_set_example(self, c6):
        ev = captures_set(c6, [1], [0, 2], 2)
        assert (ev.q, ev.endpoint_a, ev.endpoint_b, ev.length) == (1, 0, 2, 2)

    def test_set_empty_q(self, c6):
        assert captures_set(c6, [], [0, 1], 5) is None

    def test_set_too_long(self, p5):
        assert captures_set(p5, [2], [0, 4], 3) is None

    def test_pair_examples(self, c6):
        ev = captures_pair(c6, [0], [2], 0, 2)
        assert (ev.q, ev.endpoint_a, ev.endpoint_b, ev.length) == (0, 0, 2, 2)
        assert captures_pair(c6, [0], [2], 5, 2) is None

    @given(small_graphs(), st.integers(0, 3), st.data())
    def test_pair_zero_walk(self, g, r, data):
        a = data.draw(st.integers(0, g.n - 1))
        ev = captures_pair(g, [a], [a], a, r)
        assert ev is not None and ev.length == 0

    @given(small_graphs(), st.integers(1, 4), st.data())
    def test_monotone(self, g, r, data):
        W = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
        Q = data.draw(st.sampled_from([W[:i] for i in range(len(W) + 1)]))
        Y = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
        X = Y[: data.draw(st.integers(0, len(Y)))]
        if captures_set(g, Q, X, r) is not None:
            assert captures_set(g, W, Y, r) is not None
        a = data.draw(st.integers(0, g.n - 1))
        if captures_pair(g, Q, X, a, r) is not None:
            assert captures_pair(g, W, Y, a, r) is not None

    @given(small_graphs(min_n=2), st.integers(1, 4), st.data())
    def test_evidence_is_real(self, g, r, data):
        D = floyd_warshall(g)
        Q = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
        Y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, unique=True))
        ev = captures_set(g, Q, Y, r)
        brute = any(D[y1, q] + D[q, y2] <= r for q in Q for y1 in Y for y2 in Y if y1 != y2)
        assert (ev is not None) == brute
        if ev is not None:
            assert D[ev.endpoint_a, ev.q] + D[ev.q, ev.endpoint_b] == ev.length <= r


class TestInduced:
    def test_cycle_arc_is_path(self, c6):
        sub, relabel = induced_subgraph(c6, [0, 1, 2])
        assert sub == path(3) and relabel == {0: 0, 1: 1, 2: 2}

    def test_full_set_is_copy(self, c6):
        sub, relabel = induced_subgraph(c6, range(6))
        assert sub == c6 and relabel == {i: i for i in range(6)}

    def test_clique_hereditary(self):
        sub, _ = induced_subgraph(clique(4), [0, 2, 3])
        assert sub == clique(3)

    @given(small_graphs(), st.data())
    def test_distances_never_shrink(self, g, data):
        A = sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True)))
        sub, relabel = induced_subgraph(g, A)
        D, Ds = floyd_warshall(g), floyd_warshall(sub)
        for u in A:
            for v in A:
                assert Ds[relabel[u], relabel[v]] >= D[u, v]


def test_distances_allowed_mask():
    g = cycle(6)
    allowed = np.ones(6, dtype=bool)
    allowed[1] = False
    d = distances(g, [0], 5, allowed)
    assert d[2] == 4 and d[1] == -1
