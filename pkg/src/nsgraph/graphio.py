"""Edge-list reading and writing.

Format: one ``u v`` pair per line, whitespace separated. A line holding a
single label declares a vertex without adding an edge (needed for isolated
vertices). ``#`` starts a comment line; blank lines are skipped. Labels are
arbitrary tokens, mapped to vertex ids ``1..n`` in order of first appearance.
"""
from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyInput, ParseError, SelfLoop
from .graph import SimpleGraph


class DuplicateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ParsedGraph:
    graph: SimpleGraph
    labels: tuple  # labels[v - 1] is the input label of vertex v
    duplicates: int = 0


def read_edge_list(text: str) -> ParsedGraph:
    ids: dict[str, int] = {}
    edges = set()
    duplicates = 0

    def vid(label):
        if label not in ids:
            ids[label] = len(ids) + 1
        return ids[label]

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vid(tokens[0])
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = tokens
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u!r}", lineno)
        e = tuple(sorted((vid(u), vid(v))))
        if e in edges:
            duplicates += 1
            warnings.warn(f"line {lineno}: duplicate edge {u} {v} ignored", DuplicateEdgeWarning, stacklevel=2)
        edges.add(e)
    if not ids:
        raise EmptyInput("edge list contains no vertices")
    labels = tuple(sorted(ids, key=ids.get))
    return ParsedGraph(SimpleGraph(len(ids), frozenset(edges)), labels, duplicates)


def parse_edge_list(text: str) -> SimpleGraph:
    return read_edge_list(text).graph


def load_edge_list(path) -> ParsedGraph:
    return read_edge_list(Path(path).read_text())


def format_edge_list(g: SimpleGraph, labels=None) -> str:
    """Edge-list text that parses back to exactly ``g``.

    Vertex declarations are inserted wherever an edge would otherwise
    introduce a vertex ahead of a lower-numbered one.
    """
    if labels is None:
        labels = [str(v - 1) for v in range(1, g.n + 1)]
    lines = []
    nxt = 1  # lowest vertex id not yet written
    for u, v in g.sorted_edges():
        if v >= nxt:
            # u rides on the edge line only when it is the last vertex before v
            stop = v - 1 if u == v - 1 else v
            for w in range(nxt, stop):
                lines.append(labels[w - 1])
            nxt = v + 1
        lines.append(f"{labels[u - 1]} {labels[v - 1]}")
    for w in range(nxt, g.n + 1):
        lines.append(labels[w - 1])
    return "\n".join(lines) + "\n"


def write_edge_list(g: SimpleGraph, path, labels=None) -> None:
    Path(path).write_text(format_edge_list(g, labels))


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
