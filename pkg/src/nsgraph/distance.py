"""Dissimilarity between graphs on the same number of vertices.

Two vector encodings are compared by Euclidean distance: the scaled walk
matrix (walk counts from each vertex, normalised by the maximum degree) and
the sorted adjacency spectrum.
"""
from __future__ import annotations

import numpy as np

from .errors import NoEdges, SizeMismatch
from .fast import cell_degrees, nsg_spectrum
from .graph import SimpleGraph
from .sequences import as_compact, quotient_matrix


def scaled_walk_matrix(g: SimpleGraph) -> np.ndarray:
    """``n x n`` matrix whose column ``i`` is ``A^i 1 / Delta^i``, ``i = 0 .. n-1``."""
    delta = int(g.degrees().max()) if g.n else 0
    if delta == 0:
        raise NoEdges("scaled walk matrix needs at least one edge")
    adj = g.adjacency(dtype=np.float64)
    walks = np.empty((g.n, g.n))
    w = np.ones(g.n)
    for i in range(g.n):
        walks[:, i] = w
        w = adj @ w / delta
    return walks


def nsg_walk_vectors(a) -> np.ndarray:
    """Scaled walk matrix of the realised NSG, computed on cells.

    Walk counts are constant on cells: ``A^i 1 = X Q^i 1``, so each column is
    an ``r``-vector power iteration expanded over the cell sizes.
    """
    a = as_compact(a)
    q = quotient_matrix(a).matrix.astype(np.float64)
    delta = max(cell_degrees(a).degrees)
    n = a.n
    cols = np.empty((a.r, n))
    w = np.ones(a.r)
    for i in range(n):
        cols[:, i] = w
        w = q @ w / delta
    return np.repeat(cols, a.cells, axis=0)


def spectrum(g: SimpleGraph) -> np.ndarray:
    """Adjacency eigenvalues in non-increasing order."""
    if g.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(g.adjacency(dtype=np.float64))[::-1]


def _check_sizes(g1, g2):
    if g1.n != g2.n:
        raise SizeMismatch(f"graphs have {g1.n} and {g2.n} vertices")


def walk_distance(g1: SimpleGraph, g2: SimpleGraph) -> float:
    """Frobenius norm of the difference of the scaled walk matrices.

    Vertices are paired by id, so the result depends on the labelling.
    """
    _check_sizes(g1, g2)
    return float(np.linalg.norm(scaled_walk_matrix(g1) - scaled_walk_matrix(g2)))


def spectral_distance(g1: SimpleGraph, g2: SimpleGraph) -> float:
    _check_sizes(g1, g2)
    return float(np.linalg.norm(spectrum(g1) - spectrum(g2)))


class WalkEnergy:
    """Walk distance from a fixed target graph to NSG candidates."""

    name = "walk"

    def __init__(self, target: SimpleGraph):
        self.n = target.n
        self.target = scaled_walk_matrix(target)

    def __call__(self, a) -> float:
        return float(np.linalg.norm(nsg_walk_vectors(a) - self.target))


class SpectralEnergy:
    """Spectral distance from a fixed target graph to NSG candidates."""

    name = "spectral"

    def __init__(self, target: SimpleGraph):
        self.n = target.n
        self.target = spectrum(target)

    def __call__(self, a) -> float:
        return float(np.linalg.norm(nsg_spectrum(a) - self.target))


ENERGIES = {"walk": WalkEnergy, "spectral": SpectralEnergy}
