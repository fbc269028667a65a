"""Deterministic graph families and edge subdivision.

Labeling conventions: path and cycle vertices run 0..n-1 in order, grids are
row-major, star center is 0, trees attach vertex i to a parent < i.

Family specs have a compact text form used by the CLI::

    path:5   cycle:6   grid:3x4   star:5   clique:5
    tree:n=10,seed=3   rbd:n=30,d=3,seed=7   subdiv:clique:5:r=1
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .graph import Graph

FAMILIES = ("path", "cycle", "grid", "star", "clique", "tree", "rbd", "subdiv")
_POSITIONAL = {
    "path": ("n",), "cycle": ("n",), "star": ("leaves",), "clique": ("n",),
    "grid": ("rows", "cols"), "tree": ("n", "seed"), "rbd": ("n", "d", "seed"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    base: "FamilySpec | None" = None

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        text = text.strip()
        family, _, rest = text.partition(":")
        family = family.lower()
        if family not in FAMILIES:
            raise InputError(f"unknown graph family {family!r} in spec {text!r}")
        if family == "subdiv":
            inner, sep, last = rest.rpartition(":")
            key, eq, value = last.partition("=")
            if not sep or not eq or key != "r":
                raise InputError(f"subdivision spec must end with ':r=<int>', got {text!r}")
            return cls("subdiv", {"r": _int(value, text)}, cls.parse(inner))
        tokens = [t for t in rest.replace("x", ",").replace(":", ",").split(",") if t]
        params: dict[str, int] = {}
        names = _POSITIONAL[family]
        for i, tok in enumerate(tokens):
            key, eq, value = tok.partition("=")
            if eq:
                params[key.strip()] = _int(value, text)
            elif i < len(names):
                params[names[i]] = _int(tok, text)
            else:
                raise InputError(f"too many parameters in spec {text!r}")
        return cls(family, params)

    def __str__(self) -> str:
        if self.family == "subdiv":
            return f"subdiv:{self.base}:r={self.params['r']}"
        if self.family == "grid":
            return f"grid:{self.params['rows']}x{self.params['cols']}"
        if self.family in ("tree", "rbd"):
            return f"{self.family}:" + ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}:{next(iter(self.params.values()))}"


def _int(value: str, text: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InputError(f"expected an integer in spec {text!r}, got {value!r}") from None


def default_seed() -> int:
    return int(os.environ.get("RINDEP_SEED", "0"))


def _need(params: dict, *names: str) -> list[int]:
    try:
        vals = [params[n] for n in names]
    except KeyError as e:
        raise InputError(f"missing parameter {e.args[0]!r}") from None
    if any(v < 0 for v in vals):
        raise InputError(f"size parameters must be >= 0: {params}")
    return vals


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def clique(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tree(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    return Graph.from_edges(n, [(i, int(rng.integers(0, i))) for i in range(1, n)])


def random_bounded_degree(n: int, d: int, seed: int) -> Graph:
    """Random simple graph with maximum degree at most d.

    Shuffles n*d/2 candidate pairs and keeps each one that is not a loop,
    not a repeat and fits both endpoints' remaining degree.
    """
    rng = np.random.default_rng(seed)
    deg = np.zeros(n, dtype=np.int64)
    seen: set[tuple[int, int]] = set()
    edges = []
    if n >= 2:
        for _ in range(n * d):
            u, v = (int(x) for x in rng.integers(0, n, size=2))
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            if e in seen or deg[u] >= d or deg[v] >= d:
                continue
            seen.add(e)
            edges.append(e)
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def subdivide(g: Graph, r: int) -> Graph:
    """Replace every edge by a path of length r + 1 (r new inner vertices).

    Original vertices keep their ids; inner vertices are appended edge by
    edge (edges in lexicographic order), walking from the smaller endpoint.
    """
    if r < 0:
        raise InputError(f"subdivision parameter must be >= 0, got {r}")
    if r == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u, *range(nxt, nxt + r), v]
        nxt += r
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    fam = spec.family
    if fam == "path":
        return path(*_need(p, "n"))
    if fam == "cycle":
        return cycle(*_need(p, "n"))
    if fam == "grid":
        return grid(*_need(p, "rows", "cols"))
    if fam == "star":
        return star(*_need(p, "leaves"))
    if fam == "clique":
        return clique(*_need(p, "n"))
    if fam == "tree":
        (n,) = _need(p, "n")
        return random_tree(n, p.get("seed", default_seed()))
    if fam == "rbd":
        n, d = _need(p, "n", "d")
        return random_bounded_degree(n, d, p.get("seed", default_seed()))
    if fam == "subdiv":
        return subdivide(generate(spec.base), *_need(p, "r"))
    raise InputError(f"unknown family {fam!r}")  # pragma: no cover


def oracle_corpus() -> list[str]:
    """Small graphs (n <= 16) covering every family, sized for brute-force checks."""
    specs = [f"path:{n}" for n in range(1, 11)]
    specs += [f"cycle:{n}" for n in range(3, 11)]
    specs += [f"star:{n}" for n in range(1, 8)]
    specs += ["grid:2x2", "grid:2x3", "grid:3x3", "grid:2x5", "grid:3x4"]
    specs += [f"tree:n={n},seed={s}" for n, s in [(6, 1), (8, 2), (10, 3), (12, 4), (14, 5)]]
    specs += [f"rbd:n={n},d=3,seed={s}" for n, s in
              [(6, 1), (8, 2), (9, 3), (10, 4), (11, 5), (12, 6), (13, 7), (14, 8)]]
    specs += ["subdiv:clique:3:r=1", "subdiv:clique:3:r=2", "subdiv:clique:4:r=1",
              "subdiv:clique:4:r=2", "subdiv:clique:5:r=1"]
    return specs
