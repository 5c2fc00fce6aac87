"""Reference index computations on arbitrary simple graphs.

These work from the definitions (BFS distances, a dense eigensolve) and are
deliberately independent of the closed forms in :mod:`nsgraph.fast`.
"""
from __future__ import annotations

import math
from collections import deque

import numpy as np
from numba import njit

from .errors import Disconnected, EmptyGraph
from .graph import SimpleGraph

UNREACHABLE = -1


@njit(cache=True)
def _cyclic_jacobi(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if math.sqrt(off) <= tol:
            return a, v, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return a, v, -1


def jacobi_eigh(matrix, tol=None, max_sweeps=100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm is at most ``tol``
    (default ``1e-12 * n``). Returns ``(eigenvalues, eigenvectors)`` with
    eigenvalues in non-increasing order and eigenvectors as columns.
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    if tol is None:
        tol = 1e-12 * n
    diag, vecs, sweeps = _cyclic_jacobi(a, float(tol), int(max_sweeps))
    if sweeps < 0:
        raise RuntimeError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
    w = np.diag(diag).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], vecs[:, order]


def distance_matrix(g: SimpleGraph) -> np.ndarray:
    """All-pairs hop distances by BFS from every vertex; UNREACHABLE for no path."""
    nbrs = g.neighbors()
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    for src in range(1, g.n + 1):
        row = dist[src - 1]
        row[src - 1] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u - 1]
            for w in nbrs[u]:
                if row[w - 1] == UNREACHABLE:
                    row[w - 1] = du + 1
                    queue.append(w)
    return dist


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return True
    return bool(np.all(distance_matrix(g)[0] != UNREACHABLE))


def _connected_distances(g: SimpleGraph) -> np.ndarray:
    dist = distance_matrix(g)
    if np.any(dist == UNREACHABLE):
        raise Disconnected("distance-based indices need a connected graph")
    return dist


def closer_counts(g: SimpleGraph, dist=None):
    """For every edge ``(u, v)``: ``nu(u, v)`` and ``nu(v, u)``.

    ``nu(u, v)`` counts vertices strictly closer to ``u`` than to ``v``.
    Returns the sorted edge list and two integer arrays aligned with it.
    """
    if dist is None:
        dist = _connected_distances(g)
    edges = g.sorted_edges()
    if not edges:
        return edges, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    e = np.array(edges) - 1
    du, dv = dist[e[:, 0]], dist[e[:, 1]]
    return edges, np.sum(du < dv, axis=1), np.sum(dv < du, axis=1)


def oracle_edge_count(g: SimpleGraph) -> int:
    return g.m


def oracle_entropy(g: SimpleGraph) -> float:
    if g.m == 0:
        raise EmptyGraph("entropy is undefined for a graph without edges")
    return math.log2(g.m)


def oracle_randic(g: SimpleGraph) -> float:
    deg = g.degrees()
    return sum(1.0 / math.sqrt(deg[u - 1] * deg[v - 1]) for u, v in g.sorted_edges())


def oracle_wiener(g: SimpleGraph) -> int:
    dist = _connected_distances(g)
    return int(dist.sum()) // 2


def oracle_szeged(g: SimpleGraph) -> int:
    _, nu_uv, nu_vu = closer_counts(g)
    return int(np.sum(nu_uv * nu_vu))


def oracle_copi(g: SimpleGraph) -> int:
    _, nu_uv, nu_vu = closer_counts(g)
    return int(np.sum(np.abs(nu_uv - nu_vu)))


def oracle_spectrum(g: SimpleGraph) -> np.ndarray:
    w, _ = jacobi_eigh(g.adjacency(dtype=np.float64))
    return w


def oracle_estrada(g: SimpleGraph, spectrum=None) -> float:
    lam = oracle_spectrum(g) if spectrum is None else spectrum
    return float(np.sum(np.exp(lam)))


def oracle_gutman(g: SimpleGraph, spectrum=None) -> float:
    lam = oracle_spectrum(g) if spectrum is None else spectrum
    return float(np.sum(np.abs(lam)))


def oracle_resolvent(g: SimpleGraph, spectrum=None) -> float:
    lam = oracle_spectrum(g) if spectrum is None else spectrum
    return float(np.sum(1.0 / (g.n - lam)))


def oracle_indices(g: SimpleGraph, strict: bool = True) -> dict:
    """All nine values for ``g``.

    With ``strict=False`` indices that are undefined for ``g`` (entropy of an
    edgeless graph, distance indices of a disconnected one) come back as None
    instead of raising.
    """
    out = {}
    lam = oracle_spectrum(g)
    out["edges"] = g.m
    try:
        out["entropy"] = oracle_entropy(g)
    except EmptyGraph:
        if strict:
            raise
        out["entropy"] = None
    out["randic"] = oracle_randic(g)
    dist = distance_matrix(g)
    if np.any(dist == UNREACHABLE):
        if strict:
            raise Disconnected("distance-based indices need a connected graph")
        out.update(wiener=None, szeged=None, copi=None)
    else:
        _, nu_uv, nu_vu = closer_counts(g, dist)
        out["wiener"] = int(dist.sum()) // 2
        out["szeged"] = int(np.sum(nu_uv * nu_vu))
        out["copi"] = int(np.sum(np.abs(nu_uv - nu_vu)))
    out["estrada"] = oracle_estrada(g, lam)
    out["gutman"] = oracle_gutman(g, lam)
    out["resolvent"] = oracle_resolvent(g, lam)
    return out
