"""Greedy 2r-packing versus 2r-covering dichotomy on a target set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .errors import InputError
from .graph import Graph, VertexSet, distances, vset


@dataclass(frozen=True)
class GreedyOutcome:
    """``independent``: k+1 targets pairwise farther than 2r apart.
    ``cover``: at most k targets whose 2r-ball contains every target."""

    tag: Literal["independent", "cover"]
    vertices: VertexSet

    @property
    def is_cover(self) -> bool:
        return self.tag == "cover"


def greedy_dichotomy(g: Graph, X: Iterable[int], r: int, k: int) -> GreedyOutcome:
    """Grow a 2r-independent subset of X, always taking the smallest uncovered id.

    Stops with ``independent`` once it holds k+1 vertices, or with ``cover``
    as soon as every member of X lies within 2r of the chosen ones.  ``g`` is
    the working graph; callers remove separators before calling.
    """
    if k < 0 or r < 0:
        raise InputError("r and k must be non-negative")
    X = vset(X)
    g.check_vertices(X)
    targets = np.array(X, dtype=np.int64)
    covered = np.zeros(g.n, dtype=np.bool_)
    chosen: list[int] = []
    pos = 0
    while True:
        while pos < targets.shape[0] and covered[targets[pos]]:
            pos += 1
        if pos == targets.shape[0]:
            return GreedyOutcome("cover", tuple(chosen))
        v = int(targets[pos])
        chosen.append(v)
        if len(chosen) == k + 1:
            return GreedyOutcome("independent", tuple(chosen))
        covered |= distances(g, [v], 2 * r) >= 0
