"""Edge-list reading and writing.

Format: one edge ``u v`` per line, whitespace separated; a line holding a
single token declares a vertex (needed for isolated vertices and to pin the
labeling); ``#`` starts a comment line.  Labels are arbitrary tokens mapped to
dense ids in order of first appearance.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .graph import Graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    labels: tuple  # dense id -> label (int when the token is a decimal integer)
    duplicate_edges: int = 0
    self_loops: int = 0

    def ids(self, tokens) -> list[int]:
        index = {str(lab): i for i, lab in enumerate(self.labels)}
        out = []
        for tok in tokens:
            if str(tok) not in index:
                raise ParseError(f"unknown vertex label {tok!r}")
            out.append(index[str(tok)])
        return out


def _label(token: str):
    try:
        return int(token) if token.lstrip("-").isdigit() else token
    except ValueError:  # pragma: no cover
        return token


def parse_edge_list(text: str) -> ParsedGraph:
    index: dict[str, int] = {}
    labels: list = []
    edges: list[tuple[int, int]] = []

    def vid(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(_label(tok))
        return index[tok]

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            edges.append((vid(parts[0]), vid(parts[1])))
        else:
            raise ParseError(f"expected 'u v', got {stripped!r}", lineno)

    graph, cleanup = Graph.from_edges_counted(len(labels), edges)
    if cleanup.duplicates:
        log.warning("dropped %d duplicate edge(s)", cleanup.duplicates)
    if cleanup.self_loops:
        log.warning("dropped %d self-loop(s)", cleanup.self_loops)
    return ParsedGraph(graph, tuple(labels), cleanup.duplicates, cleanup.self_loops)


def read_edge_list(path: str | Path) -> ParsedGraph:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_edge_list(text)


def format_edge_list(g: Graph, labels=None) -> str:
    """Vertex declarations in id order, then edges ``u < v`` in sorted order."""
    lab = labels if labels is not None else range(g.n)
    lines = [f"# n={g.n} m={g.m}"]
    lines += [str(lab[v]) for v in range(g.n)]
    lines += [f"{lab[u]} {lab[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_vertex_list(path: str | Path) -> list[str]:
    """Whitespace-separated labels, ``#`` comments allowed."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    return tokens
