"""Recursive construction of bounded-size (k, r)-cowitnesses.

A set Q is a (k, r)-cowitness for (A, G) when for every X with |X| <= k and
A inside N_r(X), every a in A is joined to some x in X by a walk of length
at most r through Q.  The builder recurses on a growing separator S, using
the splitter game (radius 3r) to localize and the greedy dichotomy to find
the few centers that matter.

Every level works on an induced subgraph of the input graph; ``orig`` arrays
translate local ids back to input ids, and results are always reported with
input ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InputError, InternalInvariantError, NonSparseInputError
from .graph import Graph, VertexSet, distances, induced_arrays, vset
from .greedy import greedy_dichotomy
from .profiles import profile_matrix
from .splitter import DEFAULT_STRATEGY, SplitterStrategy, splitter_respond


@dataclass(frozen=True)
class CowitnessCertificate:
    Q: VertexSet
    depth: int
    branches: int
    separator_sizes: tuple[int, ...]
    calls_per_level: tuple[int, ...]
    memo_hits: int = 0
    # set only by the optional top-level fast path
    independent_hint: VertexSet | None = None


def cowitness_size_bound(depth: int, k: int, r: int, s: int = 0) -> int:
    """Upper bound on |Q| for a call with |S| = s whose recursion reached ``depth``."""
    return (s + depth) * (k + 1) ** depth * (r + 1) ** (2 * s * depth + depth * (depth - 1))


def _target_splits(members: np.ndarray, prof: np.ndarray, r: int) -> list[np.ndarray]:
    """Distinct nonempty sets ``{a : prof(a) + p > r pointwise}`` over all profiles p.

    Members lie outside S, so each coordinate of ``prof`` is at least 1 and an
    entry ``p(s) = r + 1`` behaves exactly like ``p(s) = r``; the thresholds
    ``r - p(s)`` therefore range over ``0..r`` only.
    """
    s = prof.shape[1]
    seen: set[tuple[int, bytes]] = set()
    out: dict[bytes, np.ndarray] = {}

    def rec(i: int, idx: np.ndarray) -> None:
        if idx.size == 0:
            return
        key = (i, idx.tobytes())
        if key in seen:
            return
        seen.add(key)
        if i == s:
            out.setdefault(idx.tobytes(), members[idx])
            return
        col = prof[idx, i]
        for t in range(r + 1):
            rec(i + 1, idx[col > t])

    rec(0, np.arange(members.shape[0]))
    return list(out.values())


class _Builder:
    def __init__(self, r: int, k: int, strategy: SplitterStrategy, memoize: bool,
                 max_depth: int, fast_path: bool):
        self.r = r
        self.k = k
        self.strategy = strategy
        self.memoize = memoize
        self.max_depth = max_depth
        self.fast_path = fast_path
        self.memo: dict[tuple, tuple[frozenset, int]] = {}
        self.branches = 0
        self.memo_hits = 0
        self.sep_sizes: list[int] = []
        self.calls: list[int] = []
        self.hint: VertexSet | None = None

    def _record(self, level: int, s: int) -> None:
        if level == len(self.calls):
            self.calls.append(0)
            self.sep_sizes.append(0)
        self.calls[level] += 1
        self.sep_sizes[level] = max(self.sep_sizes[level], s)

    def run(self, g: Graph, orig: np.ndarray, S: np.ndarray, A: np.ndarray,
            level: int) -> tuple[frozenset, int]:
        if level > self.max_depth:
            raise NonSparseInputError(
                f"cowitness recursion exceeded depth {self.max_depth}; "
                "the input does not look sparse enough for this splitter strategy")
        self.branches += 1
        self._record(level, S.shape[0])
        if S.shape[0] == g.n:
            return frozenset(orig.tolist()), 0

        key = None
        if self.memoize:
            key = (frozenset(orig.tolist()), frozenset(orig[S].tolist()), frozenset(orig[A].tolist()))
            hit = self.memo.get(key)
            if hit is not None:
                self.memo_hits += 1
                return hit

        r, k = self.r, self.k
        in_s = np.zeros(g.n, dtype=np.bool_)
        in_s[S] = True
        outside = np.flatnonzero(~in_s)
        gp, _ = induced_arrays(g, outside)
        to_gp = np.full(g.n, -1, dtype=np.int64)
        to_gp[outside] = np.arange(outside.shape[0])

        free = A[~in_s[A]]  # members of S are captured by S itself
        prof = profile_matrix(g, S.tolist(), r)
        if S.shape[0] and free.size:
            _, group = np.unique(prof[free], axis=0, return_inverse=True)
            group = group.reshape(-1)
        else:
            group = np.zeros(free.shape[0], dtype=np.int64)

        centers: set[int] = set()
        for gi in range(int(group.max()) + 1 if free.size else 0):
            outcome = greedy_dichotomy(gp, to_gp[free[group == gi]].tolist(), r, k)
            if outcome.is_cover:
                centers.update(outcome.vertices)
            elif self.fast_path and level == 0 and S.shape[0] == 0 and self.hint is None:
                self.hint = vset(orig[outside[list(outcome.vertices)]].tolist())

        Q = set(orig[S].tolist())
        depth = 0
        for z in sorted(centers):
            w = splitter_respond(self.strategy, gp, z, 3 * r)
            dz = distances(gp, [z], 3 * r)
            near = outside[(dz >= 0) & (dz <= 2 * r)]
            targets = free[np.isin(free, near)]
            if not targets.size:
                continue
            members = np.union1d(outside[dz >= 0], S)
            gz, _ = induced_arrays(g, members)
            to_z = np.full(g.n, -1, dtype=np.int64)
            to_z[members] = np.arange(members.shape[0])
            sz = np.sort(np.append(to_z[S], to_z[outside[w]]))
            for part in _target_splits(targets, prof[targets], r):
                q_child, d_child = self.run(gz, orig[members], sz, to_z[part], level + 1)
                Q |= q_child
                depth = max(depth, d_child + 1)

        result = (frozenset(Q), depth)
        if key is not None:
            self.memo[key] = result
        return result


def build_cowitness_ext(g: Graph, S: Iterable[int], A: Iterable[int], r: int, k: int,
                        strategy: SplitterStrategy | str = DEFAULT_STRATEGY, *,
                        memoize: bool = True, max_depth: int | None = None,
                        fast_path: bool = False) -> CowitnessCertificate:
    """A (k, r)-cowitness Q for (A, g) with S contained in Q.

    Raises :class:`NonSparseInputError` if the recursion goes deeper than
    ``max_depth`` (default: the vertex count).
    """
    if r < 1 or k < 0:
        raise InputError(f"need r >= 1 and k >= 0, got r={r}, k={k}")
    S, A = vset(S), vset(A)
    g.check_vertices(S)
    g.check_vertices(A)
    builder = _Builder(r, k, SplitterStrategy(strategy), memoize,
                       g.n if max_depth is None else max_depth, fast_path)
    Q, depth = builder.run(g, np.arange(g.n), np.array(S, dtype=np.int64),
                           np.array(A, dtype=np.int64), 0)
    Q = vset(Q)
    if not set(S) <= set(Q):
        raise InternalInvariantError("cowitness lost part of its separator")
    bound = cowitness_size_bound(depth, k, r, len(S))
    if len(Q) > bound:
        raise InternalInvariantError(f"|Q|={len(Q)} exceeds the size bound {bound} at depth {depth}")
    return CowitnessCertificate(
        Q=Q, depth=depth, branches=builder.branches,
        separator_sizes=tuple(builder.sep_sizes), calls_per_level=tuple(builder.calls),
        memo_hits=builder.memo_hits, independent_hint=builder.hint,
    )


def build_cowitness(g: Graph, A: Iterable[int], r: int, k: int,
                    strategy: SplitterStrategy | str = DEFAULT_STRATEGY, **kwargs) -> CowitnessCertificate:
    return build_cowitness_ext(g, (), A, r, k, strategy, **kwargs)
