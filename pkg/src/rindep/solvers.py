"""End-to-end solvers: the ladder algorithm and the direct cowitness pipeline."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from operator import or_
from typing import Any, Literal, Sequence

import numpy as np

from .cowitness import build_cowitness
from .errors import InputError, InternalInvariantError
from .graph import Graph, VertexSet, is_r_independent, vset
from .profiles import profile_matrix
from .splitter import DEFAULT_STRATEGY, SplitterStrategy
from .witness import check_witness, refine_to_independent

log = logging.getLogger(__name__)

EXACT_COVER_LIMIT = 20


@dataclass
class SolveOutcome:
    kind: Literal["independent", "no-solution"]
    vertices: VertexSet  # the independent set, or the witness Q
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def independent(self) -> bool:
        return self.kind == "independent"


@dataclass
class LadderTranscript:
    xs: list[VertexSet] = field(default_factory=list)
    ys: list[VertexSet] = field(default_factory=list)
    accumulated: list[VertexSet] = field(default_factory=list)
    exact_covers: list[bool] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.xs) + len(self.ys)


@dataclass(frozen=True)
class YStep:
    found: VertexSet | None = None  # an r-independent row, when one exists
    Y: VertexSet = ()
    exact: bool = True


@dataclass(frozen=True)
class XStep:
    witness_confirmed: bool
    X: VertexSet = ()
    distinct_profiles: int = 0


def _check_params(r: int, k: int) -> None:
    if r < 1 or k < 1:
        raise InputError(f"need r >= 1 and k >= 1, got r={r}, k={k}")


def y_step(g: Graph, xs: Sequence[Sequence[int]], r: int,
           exact_limit: int = EXACT_COVER_LIMIT) -> YStep:
    """Return an r-independent row if there is one, else a smallest set capturing every row.

    Only the profile of a vertex on W = the union of rows decides which rows
    it captures, so the search runs over distinct realized profiles; ties
    between covers of equal size go to the lexicographically first
    combination in profile order, and each profile is represented by its
    smallest vertex.
    """
    rows = [vset(x) for x in xs]
    for x in rows:
        if is_r_independent(g, x, r):
            return YStep(found=x)
    W = vset(v for x in rows for v in x)
    col = {w: i for i, w in enumerate(W)}
    mat = profile_matrix(g, W, r)
    profiles, first = np.unique(mat, axis=0, return_index=True)

    full = (1 << len(rows)) - 1
    masks = np.zeros(profiles.shape[0], dtype=object)
    for i, x in enumerate(rows):
        vals = np.sort(profiles[:, [col[v] for v in x]], axis=1)
        hit = vals[:, 0] + vals[:, 1] <= r
        masks[hit] += 1 << i
    useful = [i for i in range(profiles.shape[0]) if masks[i]]
    if reduce(or_, masks[useful], 0) != full:
        raise InternalInvariantError("some non-independent row is captured by no vertex")

    chosen = None
    exact = len(useful) <= exact_limit
    if exact:
        for size in range(1, len(useful) + 1):
            for combo in combinations(useful, size):
                acc = 0
                for i in combo:
                    acc |= masks[i]
                if acc == full:
                    chosen = combo
                    break
            if chosen is not None:
                break
    else:
        log.info("y-step: %d candidate profiles, using greedy cover (may not be minimum)", len(useful))
        chosen, acc = [], 0
        while acc != full:
            best = max(useful, key=lambda i: (bin(masks[i] & ~acc).count("1"), -i))
            chosen.append(best)
            acc |= masks[best]
    return YStep(Y=vset(int(first[i]) for i in chosen), exact=exact)


def x_step(g: Graph, A: Sequence[int], r: int, k: int) -> XStep:
    res = check_witness(g, A, r, k)
    if res.is_witness:
        return XStep(True, distinct_profiles=res.distinct_profiles)
    return XStep(False, res.X, res.distinct_profiles)


def solve_ladder(g: Graph, r: int, k: int) -> tuple[SolveOutcome, LadderTranscript]:
    _check_params(r, k)
    t0 = time.perf_counter()
    transcript = LadderTranscript()
    A: VertexSet = ()
    cap = g.n + 2
    rounds = 0
    max_profiles = 0
    while True:
        rounds += 1
        if rounds > cap:
            raise InternalInvariantError(f"ladder exceeded {cap} rounds")
        xs = x_step(g, A, r, k)
        max_profiles = max(max_profiles, xs.distinct_profiles)
        if xs.witness_confirmed:
            outcome = SolveOutcome("no-solution", A)
            break
        transcript.xs.append(xs.X)
        ys = y_step(g, transcript.xs, r)
        if ys.found is not None:
            outcome = SolveOutcome("independent", ys.found)
            break
        transcript.ys.append(ys.Y)
        transcript.exact_covers.append(ys.exact)
        new_A = vset(A + ys.Y)
        if len(new_A) == len(A):
            raise InternalInvariantError("ladder accumulator did not grow")
        A = new_A
        transcript.accumulated.append(A)
    outcome.stats = {
        "algorithm": "ladder",
        "rounds": rounds,
        "witness_size": len(A),
        "ladder_length": transcript.length,
        "distinct_profiles": max_profiles,
        "exact_covers": all(transcript.exact_covers),
        "wall_time": time.perf_counter() - t0,
    }
    _certify(g, outcome, r, k)
    return outcome, transcript


def solve_direct(g: Graph, r: int, k: int,
                 strategy: SplitterStrategy | str = DEFAULT_STRATEGY, *,
                 fast_path: bool = False, **cowitness_options) -> SolveOutcome:
    """Build a (k-1, r)-cowitness Q, then decide by checking whether Q is a witness."""
    _check_params(r, k)
    t0 = time.perf_counter()
    cert = build_cowitness(g, range(g.n), r, k - 1, strategy, fast_path=fast_path, **cowitness_options)
    stats = {
        "algorithm": "direct",
        "strategy": SplitterStrategy(strategy).value,
        "cowitness_size": len(cert.Q),
        "cowitness_depth": cert.depth,
        "cowitness_branches": cert.branches,
        "rounds": 1,
    }
    if fast_path and cert.independent_hint is not None and len(cert.independent_hint) == k:
        outcome = SolveOutcome("independent", cert.independent_hint)
        stats["fast_path"] = True
    else:
        res = check_witness(g, cert.Q, r, k)
        stats["distinct_profiles"] = res.distinct_profiles
        if res.is_witness:
            outcome = SolveOutcome("no-solution", cert.Q)
        else:
            outcome = SolveOutcome("independent", refine_to_independent(g, cert.Q, res.X, r, k))
    stats["witness_size"] = len(outcome.vertices) if not outcome.independent else 0
    stats["wall_time"] = time.perf_counter() - t0
    outcome.stats = stats
    _certify(g, outcome, r, k)
    return outcome


def _certify(g: Graph, outcome: SolveOutcome, r: int, k: int) -> None:
    if outcome.independent:
        X = outcome.vertices
        if len(X) != k or not is_r_independent(g, X, r):
            raise InternalInvariantError(f"solver returned an invalid independent set {X}")
    elif not check_witness(g, outcome.vertices, r, k).is_witness:
        raise InternalInvariantError("solver returned a witness that does not capture every k-set")
