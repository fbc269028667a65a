"""Witness checking by profile multisets and the refinement to an independent set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from . import _kernels
from .errors import InputError, InternalInvariantError, PromiseViolation
from .graph import Graph, VertexSet, distances, vset
from .profiles import Profile, profile_matrix


@dataclass(frozen=True)
class WitnessCheckResult:
    tag: Literal["witness", "uncaptured"]
    X: VertexSet = ()
    # realizing profiles of X, one entry per member, in canonical order
    profiles: tuple[Profile, ...] = ()
    distinct_profiles: int = 0

    @property
    def is_witness(self) -> bool:
        return self.tag == "witness"


def profile_classes(g: Graph, Q: VertexSet, r: int):
    """Distinct realized profiles on Q in lexicographic order.

    Returns ``(rows, members)``: a (P, |Q|) array and, per row, the ascending
    vertex ids realizing it.
    """
    mat = profile_matrix(g, Q, r)
    if g.n == 0:
        return mat[:0], []
    if mat.shape[1] == 0:
        return mat[:1], [np.arange(g.n)]
    rows, inverse = np.unique(mat, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    cuts = np.cumsum(np.bincount(inverse, minlength=rows.shape[0]))[:-1]
    return rows, np.split(order, cuts)


def _first_uncaptured(rows: np.ndarray, caps: np.ndarray, r: int, k: int) -> list[int] | None:
    """Lexicographically first uncaptured multiset of k profile indices.

    Adding a profile to a captured multiset keeps it captured, so captured
    prefixes are pruned.
    """
    P, width = rows.shape
    suffix = np.concatenate([np.cumsum(caps[::-1])[::-1], [0]])
    chosen: list[int] = []
    start_min = np.full(width, 2 * r + 2, dtype=np.int64)

    def rec(start: int, used: int, mins: np.ndarray) -> bool:
        if len(chosen) == k:
            return True
        need = k - len(chosen)
        for i in range(start, P):
            room = caps[i] - (used if i == start else 0)
            if room <= 0:
                continue
            if suffix[i] - (used if i == start else 0) < need:
                return False
            row = rows[i]
            if width and (row + mins <= r).any():
                continue
            chosen.append(i)
            if rec(i, (used if i == start else 0) + 1, np.minimum(mins, row)):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, 0, start_min) else None


def check_witness(g: Graph, Q: Iterable[int], r: int, k: int) -> WitnessCheckResult:
    """Decide whether Q captures every k-subset of V(g).

    Vertices with equal profiles on Q are interchangeable, so only multisets
    of distinct profiles (each used at most as often as it is realized) are
    enumerated.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    Q = vset(Q)
    g.check_vertices(Q)
    rows, members = profile_classes(g, Q, r)
    if k > g.n:
        return WitnessCheckResult("witness", distinct_profiles=rows.shape[0])
    caps = np.minimum([len(m) for m in members], k).astype(np.int64)
    picked = _first_uncaptured(rows.astype(np.int64), caps, r, k)
    if picked is None:
        return WitnessCheckResult("witness", distinct_profiles=rows.shape[0])
    X: list[int] = []
    profs: list[Profile] = []
    for i in sorted(set(picked)):
        c = picked.count(i)
        X.extend(int(v) for v in members[i][:c])
        profs.extend([Profile(Q, tuple(int(x) for x in rows[i]), r)] * c)
    return WitnessCheckResult("uncaptured", vset(X), tuple(profs), rows.shape[0])


@dataclass(frozen=True)
class ConflictCount:
    """Number of members of X that have another member within distance r."""

    value: int


def conflict_count(g: Graph, X: Iterable[int], r: int) -> ConflictCount:
    X = vset(X)
    g.check_vertices(X)
    members = np.array(X, dtype=np.int64)
    f = 0
    for i, x in enumerate(X):
        reach = distances(g, [x], r)[members] >= 0
        reach[i] = False
        f += bool(reach.any())
    return ConflictCount(f)


def _captured(g: Graph, Q: VertexSet, X: VertexSet, r: int) -> bool:
    if len(X) < 2 or not Q:
        return False
    vals = np.sort(profile_matrix(g, Q, r)[list(X)], axis=0)
    return bool((vals[0] + vals[1] <= r).any())


@dataclass(frozen=True)
class RefinementTrace:
    result: VertexSet
    conflicts: tuple[int, ...]  # f before each iteration, ending with 0

    @property
    def iterations(self) -> int:
        return len(self.conflicts) - 1


def refine_trace(g: Graph, Q: Iterable[int], X: Iterable[int], r: int, k: int) -> RefinementTrace:
    """Swap conflicted members out of X until it is r-independent.

    Each step replaces the smallest conflicted w by the smallest vertex
    outside ``N_r(X - {w})``.  If no such vertex exists, Q was not a
    (k-1, r)-cowitness and :class:`PromiseViolation` is raised.
    """
    X = vset(X)
    if len(X) != k:
        raise InputError(f"expected |X| = k = {k}, got {len(X)}")
    g.check_vertices(X)
    if _captured(g, vset(Q), X, r):
        raise PromiseViolation(X, None)
    out, hist, status, bad = _kernels.refine(g.indptr, g.indices, np.array(X, dtype=np.int64), int(r))
    conflicts = tuple(int(f) for f in hist if f >= 0)
    if status == _kernels.REFINE_PROMISE:
        raise PromiseViolation(out.tolist(), int(bad))
    if status != _kernels.REFINE_OK:
        raise InternalInvariantError(f"refinement did not converge: conflicts {conflicts}")
    if any(b >= a for a, b in zip(conflicts, conflicts[1:])):
        raise InternalInvariantError(f"conflict count did not strictly decrease: {conflicts}")
    return RefinementTrace(tuple(int(v) for v in out), conflicts)


def refine_to_independent(g: Graph, Q: Iterable[int], X: Iterable[int], r: int, k: int) -> VertexSet:
    return refine_trace(g, Q, X, r, k).result
