"""Simple undirected graphs with 1-based vertex ids."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import NSGError


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``1..n`` without loops or multi-edges.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise NSGError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise NSGError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise NSGError(f"edge ({u}, {v}) out of range 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_adjacency(cls, adj) -> "SimpleGraph":
        adj = np.asarray(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise NSGError("adjacency matrix must be square")
        if not np.array_equal(adj, adj.T):
            raise NSGError("adjacency matrix must be symmetric")
        if np.any(np.diag(adj)):
            raise NSGError("adjacency matrix has a non-zero diagonal")
        us, vs = np.nonzero(np.triu(adj, 1))
        return cls(adj.shape[0], frozenset(zip((us + 1).tolist(), (vs + 1).tolist())))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self, dtype=np.int64) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            e = np.array(self.sorted_edges()) - 1
            adj[e[:, 0], e[:, 1]] = 1
            adj[e[:, 1], e[:, 0]] = 1
        return adj

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists indexed by vertex id; index 0 is unused."""
        nbrs = [[] for _ in range(self.n + 1)]
        for u, v in self.sorted_edges():
            nbrs[u].append(v)
            nbrs[v].append(u)
        return nbrs

    def degrees(self) -> np.ndarray:
        """Degree of each vertex, in vertex order (position 0 is vertex 1)."""
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def relabel(self, perm) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v - 1]``."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise NSGError("relabelling must be a permutation of 1..n")
        return SimpleGraph(self.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add((1, n))
    return SimpleGraph(n, frozenset(edges))


def star_graph(leaves: int) -> SimpleGraph:
    """Star with the centre as the last vertex, matching NSG construction order."""
    c = leaves + 1
    return SimpleGraph(c, frozenset((i, c) for i in range(1, c)))
