"""Creation-sequence encodings of connected nested split graphs.

A connected NSG on ``n`` vertices is built by adding vertices one at a time,
each either isolated (bit 0) or dominating (bit 1). The first bit is always 0
and the last always 1. The compact form run-length encodes the bits: odd
positions count co-clique vertices, even positions count clique vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedResult, InvalidSequence
from .graph import SimpleGraph


@dataclass(frozen=True)
class CreationSequence:
    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) < 2:
            raise InvalidSequence(f"creation sequence needs at least 2 bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise InvalidSequence("creation sequence bits must be 0 or 1")
        if bits[0] != 0:
            raise InvalidSequence("creation sequence must start with 0")
        if bits[-1] != 1:
            raise InvalidSequence("creation sequence must end with 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_minimum(cls, text: str) -> "CreationSequence":
        """Parse the ``n - 2`` bit minimum representation (leading 0 and trailing 1 implied)."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise InvalidSequence(f"not a bit string: {text!r}")
        return cls((0,) + tuple(int(ch) for ch in text) + (1,))

    @classmethod
    def from_string(cls, text: str, full: bool = False) -> "CreationSequence":
        if not full:
            return cls.from_minimum(text)
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise InvalidSequence(f"not a bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def minimum_representation(self) -> str:
        return "".join(map(str, self.bits[1:-1]))

    def full_string(self) -> str:
        return "".join(map(str, self.bits))

    def __str__(self):
        return self.minimum_representation()


@dataclass(frozen=True)
class CompactCreationSequence:
    cells: tuple

    def __post_init__(self):
        cells = tuple(int(a) for a in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) < 2 or len(cells) % 2:
            raise InvalidSequence(f"compact sequence needs an even number (>= 2) of cells, got {len(cells)}")
        if any(a < 1 for a in cells):
            raise InvalidSequence(f"every cell must hold at least one vertex: {cells}")

    @property
    def n(self) -> int:
        return sum(self.cells)

    @property
    def r(self) -> int:
        return len(self.cells)

    @classmethod
    def parse(cls, text: str) -> "CompactCreationSequence":
        try:
            cells = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
        except ValueError:
            raise InvalidSequence(f"not a comma-separated integer list: {text!r}") from None
        return cls(tuple(cells))

    def __str__(self):
        return ",".join(map(str, self.cells))

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, i):
        return self.cells[i]


def as_compact(a) -> CompactCreationSequence:
    if isinstance(a, CompactCreationSequence):
        return a
    if isinstance(a, CreationSequence):
        return compact_from_full(a)
    if isinstance(a, str):
        return CompactCreationSequence.parse(a)
    return CompactCreationSequence(tuple(a))


def _run_lengths(bits: Sequence[int]) -> tuple:
    return tuple(len(list(g)) for _, g in groupby(bits))


def compact_from_full(c: CreationSequence) -> CompactCreationSequence:
    return CompactCreationSequence(_run_lengths(c.bits))


def _expand(cells: Iterable[int]) -> list:
    bits = []
    for i, a in enumerate(cells):
        bits.extend([i % 2] * a)
    return bits


def full_from_compact(a) -> CreationSequence:
    return CreationSequence(tuple(_expand(as_compact(a).cells)))


def normalize_cells(raw_cells: Sequence[int]) -> tuple:
    """Run-level form of :func:`normalize`, returning a plain tuple of cells."""
    runs = []  # [bit, count] with alternating bits
    for i, a in enumerate(raw_cells):
        if a < 0:
            raise InvalidSequence(f"cell sizes must be non-negative: {tuple(raw_cells)}")
        if a == 0:
            continue
        bit = i % 2
        if runs and runs[-1][0] == bit:
            runs[-1][1] += a
        else:
            runs.append([bit, a])
    if sum(cnt for _, cnt in runs) < 2:
        raise InvalidSequence(f"need at least 2 vertices, got {sum(raw_cells)}")
    if runs[-1][0] == 0:
        raise DisconnectedResult(f"cells {tuple(raw_cells)} end with an isolated vertex")
    if runs[0][0] == 1:
        # the first vertex is always constructed as isolated
        runs[0][1] -= 1
        if runs[0][1] == 0:
            runs.pop(0)
            runs[0][1] += 1
        else:
            runs.insert(0, [0, 1])
    return tuple(cnt for _, cnt in runs)


def normalize(raw_cells: Sequence[int]) -> CompactCreationSequence:
    """Canonicalise a cell-size list that may contain empty cells.

    Empty cells vanish and their neighbours merge. The first constructed
    vertex is always taken as isolated, so a leading clique run gives up one
    vertex to a new co-clique. Raises DisconnectedResult when the expansion
    ends with an isolated vertex.
    """
    return CompactCreationSequence(normalize_cells(raw_cells))


def adjacency_matrix(c) -> np.ndarray:
    """Dense 0/1 adjacency with ``A[i, j] = c[max(i, j)]`` off the diagonal."""
    if not isinstance(c, CreationSequence):
        c = full_from_compact(c)
    bits = np.asarray(c.bits, dtype=np.int64)
    idx = np.arange(c.n)
    adj = bits[np.maximum.outer(idx, idx)]
    np.fill_diagonal(adj, 0)
    return adj


def adjacency_from_creation(c) -> SimpleGraph:
    if not isinstance(c, CreationSequence):
        c = full_from_compact(c)
    edges = frozenset((i, j) for j in range(2, c.n + 1) if c.bits[j - 1] for i in range(1, j))
    return SimpleGraph(c.n, edges)


def realize(a) -> SimpleGraph:
    """The graph of a compact (or full) creation sequence, in construction order."""
    if isinstance(a, CreationSequence):
        return adjacency_from_creation(a)
    return adjacency_from_creation(full_from_compact(a))


def cell_of_vertex(a) -> np.ndarray:
    """0-based cell index of each vertex in construction order."""
    cells = as_compact(a).cells
    return np.repeat(np.arange(len(cells)), cells)


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient of the adjacency matrix over the cell partition.

    ``matrix[i, j]`` is the number of neighbours a vertex of cell ``i`` has in
    cell ``j``, so ``A X = X Q`` for the cell indicator matrix ``X``.
    """

    matrix: np.ndarray
    cells: tuple

    def symmetrized(self) -> np.ndarray:
        """``D^(1/2) Q D^(-1/2)`` with ``D = diag(cells)``; similar to Q and symmetric."""
        a = np.asarray(self.cells, dtype=float)
        # a_i * Q_ij counts edges between cells i and j, hence exactly symmetric
        edges_between = self.matrix * a[:, None]
        return edges_between / np.sqrt(np.outer(a, a))

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues of Q in non-increasing order."""
        return np.linalg.eigvalsh(self.symmetrized())[::-1]


def quotient_matrix(a) -> QuotientMatrix:
    cells = as_compact(a).cells
    r = len(cells)
    q = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        level_i = i // 2
        for j in range(r):
            level_j = j // 2
            if i % 2 == 0:
                # co-clique: joined to cliques at its level or higher
                if j % 2 == 1 and level_j >= level_i:
                    q[i, j] = cells[j]
            elif j % 2 == 1:
                q[i, j] = cells[j] - (1 if j == i else 0)
            elif level_j <= level_i:
                q[i, j] = cells[j]
    return QuotientMatrix(q, cells)
