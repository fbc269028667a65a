"""Slow brute-force references for testing.

Everything here works from an all-pairs distance table built with a plain
Python BFS over the graph's neighbor lists; none of the package's kernels,
profiles or capture code is used.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .errors import BudgetExceeded

INF = 1 << 30


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 18
    max_subsets: int = 10**7


DEFAULT_BUDGET = OracleBudget()


def _check(g, budget: OracleBudget, subsets: int = 0) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds the oracle budget of {budget.max_vertices} vertices")
    if subsets > budget.max_subsets:
        raise BudgetExceeded(f"{subsets} subsets exceed the oracle budget of {budget.max_subsets}")


def all_pairs_distances(g) -> list[list[int]]:
    """Exact hop distances; unreachable pairs get a huge sentinel."""
    adj = [[int(u) for u in g.neighbors(v)] for v in range(g.n)]
    table = []
    for s in range(g.n):
        dist = [INF] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        table.append(dist)
    return table


def _table(g) -> np.ndarray:
    return np.array(all_pairs_distances(g), dtype=np.int64).reshape(g.n, g.n)


def _combos(items, size: int) -> np.ndarray:
    return np.array(list(combinations(items, size)), dtype=np.int64).reshape(-1, size)


def _via(D: np.ndarray, Q: list[int]) -> np.ndarray:
    """``M[u, v] = min over q in Q of d(u, q) + d(q, v)`` (INF when Q is empty)."""
    if not Q:
        return np.full(D.shape, 2 * INF, dtype=np.int64)
    q = np.array(Q, dtype=np.int64)
    return (D[:, q][:, :, None] + D[q, :][None, :, :]).min(axis=1)


def brute_independent(g, r: int, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """Lexicographically first r-independent k-subset, or None."""
    _check(g, budget, comb(g.n, k))
    D = all_pairs_distances(g)
    for X in combinations(range(g.n), k):
        if all(D[u][v] > r for u, v in combinations(X, 2)):
            return X
    return None


def brute_check_witness(g, Q: Iterable[int], r: int, k: int,
                        budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """Lexicographically first k-subset not captured by Q, or None if Q is a witness."""
    _check(g, budget, comb(g.n, k))
    M = _via(_table(g), sorted(set(Q)))
    C = _combos(range(g.n), k)
    captured = np.zeros(C.shape[0], dtype=np.bool_)
    for i, j in combinations(range(k), 2):
        captured |= M[C[:, i], C[:, j]] <= r
    bad = np.flatnonzero(~captured)
    return tuple(int(v) for v in C[bad[0]]) if bad.size else None


def _covering_sets(D, A, r, k, universe):
    """Subsets X of ``universe`` with 1 <= |X| <= k and A inside N_r(X), by size then lex."""
    near = D[np.array(A, dtype=np.int64)] <= r
    for size in range(1, k + 1):
        C = _combos(universe, size)
        if C.shape[0] == 0:
            continue
        covers = near[:, C].any(axis=2).all(axis=0)
        yield from C[covers]


def brute_check_cowitness(g, A: Iterable[int], Q: Iterable[int], r: int, k: int,
                          budget: OracleBudget = DEFAULT_BUDGET, *,
                          universe: Iterable[int] | None = None):
    """First ``(X, a)`` violating the cowitness condition, or None.

    X ranges over subsets of ``universe`` (default: A itself) with
    1 <= |X| <= k whose r-balls cover A.  Passing ``universe=range(n)``
    checks the stronger form where X is unrestricted.
    """
    A = sorted(set(A))
    Q = sorted(set(Q))
    universe = A if universe is None else sorted(set(universe))
    _check(g, budget, sum(comb(len(universe), s) for s in range(1, k + 1)))
    if not A:
        return None
    D = _table(g)
    M = _via(D, Q)[np.array(A, dtype=np.int64)]
    for X in _covering_sets(D, A, r, k, universe):
        ok = (M[:, X] <= r).any(axis=1)
        if not ok.all():
            return tuple(int(v) for v in X), A[int(np.argmin(ok))]
    return None


def brute_min_cowitness_size(g, A: Iterable[int], r: int, k: int,
                             budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Size of the smallest (k, r)-cowitness for (A, g), by increasing-size search."""
    A = sorted(set(A))
    _check(g, budget)
    if g.n > 62:
        raise BudgetExceeded("bitmask search supports at most 62 vertices")
    if not A:
        return 0
    D = _table(g)
    DA = D[np.array(A, dtype=np.int64)]
    weights = np.left_shift(np.int64(1), np.arange(g.n, dtype=np.int64))
    # each (X, a) requirement becomes the bitmask of vertices q that capture it
    needs = set()
    for X in _covering_sets(D, A, r, k, A):
        hit = (DA[:, :, None] + D[:, X][None, :, :]).min(axis=2) <= r
        needs.update(int(m) for m in hit.astype(np.int64) @ weights)
    if not needs:
        return 0
    need_arr = np.array(sorted(needs), dtype=np.int64)
    spent = 0
    for size in range(1, g.n + 1):
        spent += comb(g.n, size)
        _check(g, budget, spent)
        combos = np.array(list(combinations(range(g.n), size)), dtype=np.int64)
        masks = np.bitwise_or.reduce(np.left_shift(np.int64(1), combos), axis=1)
        ok = np.ones(masks.shape[0], dtype=np.bool_)
        for need in need_arr:
            ok &= (masks & need) != 0
            if not ok.any():
                break
        if ok.any():
            return size
    raise AssertionError("V(G) is always a cowitness")  # pragma: no cover
