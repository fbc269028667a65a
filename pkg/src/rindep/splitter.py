"""The radius-bounded splitter game, with heuristic splitter strategies.

No construction of a provably winning splitter is available, so the
strategy is a configuration axis.  Consumers (the cowitness builder) are
correct for any legal splitter move; only recursion depth changes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import InputError
from .graph import Graph, distances, induced_arrays


class SplitterStrategy(str, Enum):
    CONNECTOR_ECHO = "connector-echo"
    MAX_DEGREE = "max-degree"
    BFS_CENTER = "bfs-center"


DEFAULT_STRATEGY = SplitterStrategy.BFS_CENTER


def _eccentricities(sub: Graph) -> np.ndarray:
    ecc = np.empty(sub.n, dtype=np.int64)
    for v in range(sub.n):
        dist = distances(sub, [v], sub.n)
        ecc[v] = dist.max()  # within v's component
    return ecc


def splitter_respond(strategy: SplitterStrategy | str, arena: Graph, v: int, radius: int) -> int:
    """Splitter's reply when connector localizes the game to ``N_radius(v)``."""
    strategy = SplitterStrategy(strategy)
    if not 0 <= v < arena.n:
        raise InputError(f"connector vertex {v} is not in the arena (n={arena.n})")
    if strategy is SplitterStrategy.CONNECTOR_ECHO:
        return v
    members = np.flatnonzero(distances(arena, [v], radius) >= 0)
    if strategy is SplitterStrategy.MAX_DEGREE:
        deg = arena.degrees[members]
        return int(members[np.argmax(deg)])
    sub, _ = induced_arrays(arena, members)
    return int(members[np.argmin(_eccentricities(sub))])


@dataclass(frozen=True)
class SplitterRound:
    connector: int
    splitter: int
    arena_size: int


@dataclass
class SplitterTrace:
    radius: int
    rounds: list[SplitterRound] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.rounds)


ConnectorPolicy = Callable[[Graph, np.ndarray], int]


def _random_connector(seed: int | None) -> ConnectorPolicy:
    rng = random.Random(seed)
    return lambda arena, ids: rng.randrange(arena.n)


def _max_eccentricity_connector(arena: Graph, ids: np.ndarray) -> int:
    return int(np.argmax(_eccentricities(arena)))


def _step(arena: Graph, ids: np.ndarray, v: int, w: int, radius: int):
    keep = distances(arena, [v], radius) >= 0
    keep[w] = False
    members = np.flatnonzero(keep)
    sub, _ = induced_arrays(arena, members)
    return sub, ids[members]


def _worst_case_moves(g: Graph, radius: int, strategy: SplitterStrategy,
                      limit: int) -> ConnectorPolicy:
    if g.n > limit:
        raise InputError(f"exhaustive connector is limited to n <= {limit}, got n={g.n}")
    memo: dict[frozenset, tuple[int, int]] = {}

    def value(arena: Graph, ids: np.ndarray) -> tuple[int, int]:
        key = frozenset(ids.tolist())
        if key in memo:
            return memo[key]
        best = (-1, -1)
        for v in range(arena.n):
            w = splitter_respond(strategy, arena, v, radius)
            sub, sub_ids = _step(arena, ids, v, w, radius)
            depth = 1 + (value(sub, sub_ids)[0] if sub.n else 0)
            if depth > best[0]:
                best = (depth, v)
        memo[key] = best
        return best

    return lambda arena, ids: value(arena, ids)[1]


def play_splitter_game(g: Graph, radius: int, strategy: SplitterStrategy | str = DEFAULT_STRATEGY,
                       connector: str | ConnectorPolicy = "max-eccentricity",
                       seed: int | None = None, exhaustive_limit: int = 15) -> SplitterTrace:
    """Simulate the game until Splitter empties the arena.

    ``connector`` is ``"random"`` (seeded), ``"max-eccentricity"``,
    ``"exhaustive-worst"`` (minimax over connector moves) or a callable
    ``(arena, original_ids) -> arena-local vertex``.  Rounds are recorded
    with ids of ``g``.
    """
    strategy = SplitterStrategy(strategy)
    if g.n == 0:
        raise InputError("the splitter game needs a nonempty graph")
    if connector == "random":
        policy = _random_connector(seed)
    elif connector == "max-eccentricity":
        policy = _max_eccentricity_connector
    elif connector == "exhaustive-worst":
        policy = _worst_case_moves(g, radius, strategy, exhaustive_limit)
    elif callable(connector):
        policy = connector
    else:
        raise InputError(f"unknown connector policy {connector!r}")

    trace = SplitterTrace(radius=radius)
    arena, ids = g, np.arange(g.n)
    while arena.n:
        v = policy(arena, ids)
        w = splitter_respond(strategy, arena, v, radius)
        arena, next_ids = _step(arena, ids, v, w, radius)
        trace.rounds.append(SplitterRound(int(ids[v]), int(ids[w]), arena.n))
        ids = next_ids
    return trace
