"""Immutable unweighted graphs, bounded BFS, and the capture predicates."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InputError

log = logging.getLogger(__name__)

VertexSet = tuple[int, ...]


def vset(vertices: Iterable[int]) -> VertexSet:
    """Normalize any iterable of vertex ids into a sorted duplicate-free tuple."""
    return tuple(sorted({int(v) for v in vertices}))


@dataclass(frozen=True)
class EdgeCleanup:
    duplicates: int = 0
    self_loops: int = 0


def _normalize_edges(edges) -> tuple[np.ndarray, EdgeCleanup]:
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    loops = arr[:, 0] == arr[:, 1]
    n_loops = int(loops.sum())
    arr = np.sort(arr[~loops], axis=1)
    before = arr.shape[0]
    if before:
        arr = np.unique(arr, axis=0)
    return arr, EdgeCleanup(duplicates=before - arr.shape[0], self_loops=n_loops)


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` stored as CSR arrays.

    Instances are immutable; neighbor lists are sorted ascending.  Build one
    with :meth:`from_edges`.
    """

    __slots__ = ("indptr", "indices", "__dict__")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """Build a graph, dropping self-loops and duplicate edges with a warning."""
        graph, cleanup = cls.from_edges_counted(n, edges)
        if cleanup.duplicates:
            log.warning("dropped %d duplicate edge(s)", cleanup.duplicates)
        if cleanup.self_loops:
            log.warning("dropped %d self-loop(s)", cleanup.self_loops)
        return graph

    @classmethod
    def from_edges_counted(cls, n: int, edges) -> tuple["Graph", EdgeCleanup]:
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        edges = list(edges) if not isinstance(edges, np.ndarray) else edges
        arr, cleanup = _normalize_edges(edges if len(edges) else np.empty((0, 2)))
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InputError(f"edge endpoint outside [0, {n})")
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(indptr, dst[order]), cleanup

    @property
    def n(self) -> int:
        return self.indptr.shape[0] - 1

    @property
    def m(self) -> int:
        return self.indices.shape[0] // 2

    @property
    def size(self) -> int:
        """|G| = |V| + |E|."""
        return self.n + self.m

    @property
    def vertices(self) -> VertexSet:
        return tuple(range(self.n))

    @cached_property
    def full_mask(self) -> np.ndarray:
        mask = np.ones(self.n, dtype=np.bool_)
        mask.flags.writeable = False
        return mask

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    out.append((u, int(v)))
        return out

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for graph with n={self.n}")

    def check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            self.check_vertex(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self) -> int:
        return hash((self.indptr.tobytes(), self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def distances(g: Graph, sources: Iterable[int], radius: int,
              allowed: np.ndarray | None = None) -> np.ndarray:
    """Multi-source truncated distance array (-1 beyond ``radius``)."""
    src = np.fromiter((int(s) for s in sources), dtype=np.int64)
    if allowed is None:
        allowed = g.full_mask
    if g.n == 0:
        return np.empty(0, dtype=np.int32)
    return _kernels.bfs(g.indptr, g.indices, src, int(radius), allowed)


def bounded_bfs(g: Graph, source: int, radius: int) -> dict[int, int]:
    """Map every vertex within ``radius`` hops of ``source`` to its distance."""
    g.check_vertex(source)
    if radius < 0:
        raise InputError(f"radius must be >= 0, got {radius}")
    dist = distances(g, [source], radius)
    hit = np.flatnonzero(dist >= 0)
    return {int(v): int(dist[v]) for v in hit}


def ball(g: Graph, X: Iterable[int], radius: int) -> VertexSet:
    """The multi-source neighborhood N_radius(X); empty for empty X or radius < 0."""
    X = vset(X)
    g.check_vertices(X)
    if not X or radius < 0:
        return ()
    return tuple(int(v) for v in np.flatnonzero(distances(g, X, radius) >= 0))


def is_r_independent(g: Graph, X: Iterable[int], r: int) -> bool:
    X = vset(X)
    g.check_vertices(X)
    if len(X) <= 1:
        return True
    members = np.array(X, dtype=np.int64)
    for i, x in enumerate(X):
        dist = distances(g, [x], r)
        reach = dist[members] >= 0
        reach[i] = False
        if reach.any():
            return False
    return True


@dataclass(frozen=True)
class CaptureEvidence:
    """A short walk ``endpoint_a -> q -> endpoint_b`` of hop length ``length``."""

    q: int
    endpoint_a: int
    endpoint_b: int
    length: int


def captures_set(g: Graph, Q: Iterable[int], Y: Iterable[int], r: int) -> CaptureEvidence | None:
    """Evidence that some q in Q lies on a short path between two members of Y."""
    Q, Y = vset(Q), vset(Y)
    g.check_vertices(Q)
    g.check_vertices(Y)
    if len(Y) < 2:
        return None
    members = np.array(Y, dtype=np.int64)
    for q in Q:
        d = distances(g, [q], r)[members]
        hit = np.flatnonzero(d >= 0)
        if hit.size < 2:
            continue
        # stable sort keeps ascending ids among equal distances
        best = hit[np.argsort(d[hit], kind="stable")[:2]]
        length = int(d[best[0]] + d[best[1]])
        if length <= r:
            return CaptureEvidence(q, int(members[best[0]]), int(members[best[1]]), length)
    return None


def captures_pair(g: Graph, Q: Iterable[int], X: Iterable[int], a: int, r: int) -> CaptureEvidence | None:
    """Evidence that a short walk from ``a`` through Q reaches some member of X.

    ``a`` may itself belong to X; the zero-length walk counts when ``a`` is in Q.
    """
    Q, X = vset(Q), vset(X)
    g.check_vertices(Q)
    g.check_vertices(X)
    g.check_vertex(a)
    if not X:
        return None
    members = np.array(X, dtype=np.int64)
    for q in Q:
        dist = distances(g, [q], r)
        if dist[a] < 0:
            continue
        d = dist[members]
        hit = np.flatnonzero(d >= 0)
        if not hit.size:
            continue
        x = hit[np.argmin(d[hit])]
        length = int(dist[a] + d[x])
        if length <= r:
            return CaptureEvidence(q, a, int(members[x]), length)
    return None


def induced_subgraph(g: Graph, A: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``g[A]`` relabeled so that the i-th smallest member of A becomes i."""
    A = vset(A)
    g.check_vertices(A)
    sub, _ = induced_arrays(g, np.array(A, dtype=np.int64))
    return sub, {v: i for i, v in enumerate(A)}


def induced_arrays(g: Graph, members: np.ndarray) -> tuple[Graph, np.ndarray]:
    """Array form of :func:`induced_subgraph`; ``members`` must be sorted unique.

    Returns the subgraph and the ``members`` array (new id -> old id).
    """
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[members] = np.arange(members.shape[0])
    starts = g.indptr[members]
    counts = g.indptr[members + 1] - starts
    total = int(counts.sum())
    if total:
        offs = np.repeat(starts - np.cumsum(counts) + counts, counts) + np.arange(total)
        nbr = new_id[g.indices[offs]]
        src = np.repeat(np.arange(members.shape[0]), counts)
        keep = nbr >= 0
        src, nbr = src[keep], nbr[keep]
    else:
        src = nbr = np.empty(0, dtype=np.int64)
    indptr = np.zeros(members.shape[0] + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=members.shape[0]), out=indptr[1:])
    # source order is ascending and each neighbor slice was already sorted
    return Graph(indptr, nbr), members
