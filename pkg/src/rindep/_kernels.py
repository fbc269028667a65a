"""Hot traversal kernels over CSR adjacency arrays.

Two implementations live side by side: numba ``@njit`` kernels and a
pure-numpy fallback. ``RINDEP_BACKEND=numpy`` (or a missing numba) selects the
fallback at import time; everything else in the package calls the public
names ``bfs``, ``bfs_rows`` and ``refine`` and never cares which is active.

Conventions shared by both paths:

* ``dist`` arrays are int32 of length n with -1 meaning "farther than radius"
  (or not reachable inside ``allowed``);
* ``allowed`` is a bool mask restricting the traversal to an induced subgraph;
  sources outside the mask are ignored;
* a negative radius yields an all -1 array.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

BACKEND = os.environ.get("RINDEP_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"RINDEP_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")
if numba is None:
    BACKEND = "numpy"

# refine() status codes
REFINE_OK = 0
REFINE_PROMISE = 1
REFINE_STALLED = 2


# --------------------------------------------------------------------------
# numpy fallback
# --------------------------------------------------------------------------

def _expand(indptr, indices, frontier):
    starts = indptr[frontier]
    counts = indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return indices[:0]
    offsets = np.repeat(starts - np.cumsum(counts) + counts, counts)
    return indices[offsets + np.arange(total)]


def bfs_numpy(indptr, indices, sources, radius, allowed):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int32)
    if radius < 0:
        return dist
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    frontier = frontier[allowed[frontier]]
    dist[frontier] = 0
    level = 0
    while frontier.size and level < radius:
        level += 1
        nbrs = _expand(indptr, indices, frontier)
        nbrs = nbrs[(dist[nbrs] < 0) & allowed[nbrs]]
        frontier = np.unique(nbrs)
        dist[frontier] = level
    return dist


def bfs_rows_numpy(indptr, indices, sources, radius, allowed):
    n = indptr.shape[0] - 1
    out = np.empty((len(sources), n), dtype=np.int32)
    for i, s in enumerate(sources):
        out[i] = bfs_numpy(indptr, indices, np.array([s]), radius, allowed)
    return out


def _conflicts_numpy(indptr, indices, X, r, allowed):
    k = X.shape[0]
    flags = np.zeros(k, dtype=np.bool_)
    for i in range(k):
        dist = bfs_numpy(indptr, indices, X[i:i + 1], r, allowed)
        reach = dist[X] >= 0
        reach[i] = False
        flags[i] = reach.any()
    return flags


def refine_numpy(indptr, indices, X, r):
    n = indptr.shape[0] - 1
    allowed = np.ones(n, dtype=np.bool_)
    X = np.array(X, dtype=np.int64)
    k = X.shape[0]
    hist = np.full(k + 2, -1, dtype=np.int64)
    for it in range(k + 2):
        flags = _conflicts_numpy(indptr, indices, X, r, allowed)
        hist[it] = int(flags.sum())
        if hist[it] == 0:
            return np.sort(X), hist[:it + 1], REFINE_OK, -1
        wi = int(np.argmin(np.where(flags, X, n)))
        rest = np.delete(X, wi)
        covered = bfs_numpy(indptr, indices, rest, r, allowed) >= 0
        outside = np.flatnonzero(~covered)
        if outside.size == 0:
            return np.sort(X), hist[:it + 1], REFINE_PROMISE, X[wi]
        X[wi] = outside[0]
    return np.sort(X), hist, REFINE_STALLED, -1


# --------------------------------------------------------------------------
# numba kernels
# --------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _bfs_into(indptr, indices, sources, radius, allowed, dist, queue):
        # dist must arrive filled with -1; queue needs room for n entries
        head = 0
        tail = 0
        for s in sources:
            if allowed[s] and dist[s] < 0:
                dist[s] = 0
                queue[tail] = s
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if du >= radius:
                break
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if dist[v] < 0 and allowed[v]:
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1

    @numba.njit(cache=True)
    def bfs_numba(indptr, indices, sources, radius, allowed):
        n = indptr.shape[0] - 1
        dist = np.full(n, -1, dtype=np.int32)
        if radius >= 0:
            _bfs_into(indptr, indices, sources, radius, allowed, dist, np.empty(n, dtype=np.int64))
        return dist

    @numba.njit(cache=True)
    def bfs_rows_numba(indptr, indices, sources, radius, allowed):
        n = indptr.shape[0] - 1
        out = np.full((sources.shape[0], n), -1, dtype=np.int32)
        if radius < 0:
            return out
        queue = np.empty(n, dtype=np.int64)
        one = np.empty(1, dtype=np.int64)
        for i in range(sources.shape[0]):
            one[0] = sources[i]
            _bfs_into(indptr, indices, one, radius, allowed, out[i], queue)
        return out

    @numba.njit(cache=True)
    def refine_numba(indptr, indices, X, r):
        n = indptr.shape[0] - 1
        allowed = np.ones(n, dtype=np.bool_)
        X = X.astype(np.int64)
        k = X.shape[0]
        hist = np.full(k + 2, -1, dtype=np.int64)
        one = np.empty(1, dtype=np.int64)
        for it in range(k + 2):
            f = 0
            wi = -1
            for i in range(k):
                one[0] = X[i]
                dist = bfs_numba(indptr, indices, one, r, allowed)
                for j in range(k):
                    if j != i and dist[X[j]] >= 0:
                        f += 1
                        if wi < 0 or X[i] < X[wi]:
                            wi = i
                        break
            hist[it] = f
            if f == 0:
                return np.sort(X), hist[:it + 1], 0, -1
            rest = np.empty(k - 1, dtype=np.int64)
            pos = 0
            for i in range(k):
                if i != wi:
                    rest[pos] = X[i]
                    pos += 1
            covered = bfs_numba(indptr, indices, rest, r, allowed)
            found = -1
            for v in range(n):
                if covered[v] < 0:
                    found = v
                    break
            if found < 0:
                return np.sort(X), hist[:it + 1], 1, X[wi]
            X[wi] = found
        return np.sort(X), hist, 2, -1


if BACKEND == "numba":
    bfs = bfs_numba
    bfs_rows = bfs_rows_numba
    refine = refine_numba
else:
    bfs = bfs_numpy
    bfs_rows = bfs_rows_numpy
    refine = refine_numpy
