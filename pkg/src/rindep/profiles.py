"""Truncated distance profiles relative to a reference set, and traces."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .graph import Graph, VertexSet, distances, vset


@dataclass(frozen=True)
class Profile:
    """Distances from one vertex (or set) to each member of ``reference``.

    Values are capped at ``r + 1``, which stands for "farther than r".
    Equality and hashing use ``reference`` and ``values`` only.
    """

    reference: VertexSet
    values: tuple[int, ...]
    r: int = field(compare=False)

    def __post_init__(self):
        if len(self.values) != len(self.reference):
            raise ValueError("profile length does not match its reference set")
        if any(not 0 <= v <= self.r + 1 for v in self.values):
            raise ValueError(f"profile values must lie in [0, {self.r + 1}]")

    def __getitem__(self, s: int) -> int:
        return self.values[self.reference.index(s)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.reference, self.values))


def profile_matrix(g: Graph, S: Iterable[int], r: int,
                   allowed: np.ndarray | None = None) -> np.ndarray:
    """``out[v, i] = min(dist(v, S[i]), r + 1)`` for every vertex v.

    One bounded BFS per member of the (sorted) reference set.
    """
    S = vset(S)
    g.check_vertices(S)
    if not S or g.n == 0:
        return np.zeros((g.n, len(S)), dtype=np.int32)
    if allowed is None:
        allowed = g.full_mask
    rows = _kernels.bfs_rows(g.indptr, g.indices, np.array(S, dtype=np.int64), int(r), allowed)
    rows[rows < 0] = r + 1
    return np.ascontiguousarray(rows.T)


def vertex_profile(g: Graph, S: Iterable[int], v: int, r: int) -> Profile:
    S = vset(S)
    g.check_vertex(v)
    dist = distances(g, [v], r)
    vals = tuple(int(dist[s]) if dist[s] >= 0 else r + 1 for s in S)
    return Profile(S, vals, r)


def all_profiles(g: Graph, S: Iterable[int], r: int) -> dict[int, Profile]:
    S = vset(S)
    mat = profile_matrix(g, S, r)
    return {v: Profile(S, tuple(int(x) for x in mat[v]), r) for v in range(g.n)}


def set_profile(g: Graph, S: Iterable[int], X: Iterable[int], r: int) -> Profile:
    """Pointwise minimum of the member profiles; all ``r + 1`` for empty X."""
    S, X = vset(S), vset(X)
    g.check_vertices(X)
    if not X:
        return Profile(S, (r + 1,) * len(S), r)
    mat = profile_matrix(g, S, r)
    return Profile(S, tuple(int(x) for x in mat[list(X)].min(axis=0)), r)


def trace(g: Graph, p: Mapping[int, int] | Profile) -> VertexSet:
    """Union of the balls ``N_{p(s)}(s)``; negative radii contribute nothing."""
    if isinstance(p, Profile):
        p = p.as_dict()
    hit = np.zeros(g.n, dtype=np.bool_)
    for s, radius in p.items():
        if radius >= 0:
            hit |= distances(g, [s], radius) >= 0
    return tuple(int(v) for v in np.flatnonzero(hit))


def captured_region(g: Graph, Q: Iterable[int], X: Iterable[int], r: int) -> VertexSet:
    """All a such that Q captures the pair (X, a)."""
    prof = set_profile(g, Q, X, r)
    return trace(g, {s: r - v for s, v in zip(prof.reference, prof.values)})


def distinct_profile_count(g: Graph, S: Iterable[int], r: int) -> int:
    mat = profile_matrix(g, S, r)
    if mat.shape[1] == 0:
        return 1 if g.n else 0
    return int(np.unique(mat, axis=0).shape[0])


__all__ = [
    "Profile", "profile_matrix", "vertex_profile", "all_profiles", "set_profile",
    "trace", "captured_region", "distinct_profile_count",
]
