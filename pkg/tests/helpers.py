"""Test-only reference implementations and generators."""
import itertools
import math

import numpy as np
from hypothesis import strategies as st

from nsgraph.sequences import CompactCreationSequence, compact_from_full, CreationSequence


def random_compact(rng, n_min=2, n_max=40):
    n = int(rng.integers(n_min, n_max + 1))
    bits = [0] + rng.integers(0, 2, size=n - 2).tolist() + [1]
    return compact_from_full(CreationSequence(tuple(bits)))


def random_corpus(count, seed, n_min=2, n_max=40):
    rng = np.random.default_rng(seed)
    return [random_compact(rng, n_min, n_max) for _ in range(count)]


def _split(a):
    cells = CompactCreationSequence(tuple(a)).cells
    return cells[0::2], cells[1::2]


def degrees_direct(a):
    odd, even = _split(a)
    h = len(odd)
    rho_odd = [sum(even[j] for j in range(k, h)) for k in range(h)]
    rho_even = [sum(odd[j] for j in range(k + 1)) + sum(even) - 1 for k in range(h)]
    return rho_odd, rho_even


def randic_direct(a):
    """Double-sum form: co-clique/clique edges, clique/clique edges, within-clique edges."""
    odd, even = _split(a)
    h = len(odd)
    ro, re = degrees_direct(a)
    total = 0.0
    for k in range(h):
        for j in range(k, h):
            total += odd[k] * even[j] / math.sqrt(ro[k] * re[j])
    for k in range(h - 1):
        for j in range(k + 1, h):
            total += even[k] * even[j] / math.sqrt(re[k] * re[j])
    for k in range(h):
        total += even[k] * (even[k] - 1) / (2 * re[k])
    return total


def wiener_direct(a):
    odd, even = _split(a)
    h = len(odd)
    w = sum(even[k] * (even[k] - 1) // 2 for k in range(h))
    w += sum(even[k] * sum(even[k + 1:]) for k in range(h - 1))
    w += sum(odd[k] * (odd[k] - 1) for k in range(h))
    w += sum(2 * odd[k] * sum(odd[k + 1:]) for k in range(h - 1))
    w += sum(odd[k] * sum(even[k:]) for k in range(h))
    w += sum(2 * even[k] * sum(odd[k + 1:]) for k in range(h - 1))
    return w


def szeged_direct(a):
    odd, even = _split(a)
    h = len(odd)
    sz = sum(e * (e - 1) // 2 for e in even)
    for k in range(h - 1):
        sz += even[k] * sum(even[j] * (1 + sum(odd[k + 1:j + 1])) for j in range(k + 1, h))
    sz += odd[0] * sum(even[j] * sum(odd[:j + 1]) for j in range(h))
    for k in range(1, h):
        sz += odd[k] * sum(even[j] * (sum(odd[:j + 1]) + sum(even[:k])) for j in range(k, h))
    return sz


def copi_direct(a):
    odd, even = _split(a)
    h = len(odd)
    c = 0
    for k in range(h - 1):
        c += even[k] * sum(even[j] * sum(odd[k + 1:j + 1]) for j in range(k + 1, h))
    c += odd[0] * sum(even[j] * (sum(odd[:j + 1]) - 1) for j in range(h))
    for k in range(1, h):
        c += odd[k] * sum(even[j] * (sum(odd[:j + 1]) + sum(even[:k]) - 1) for j in range(k, h))
    return c


def isomorphic(g1, g2):
    """Brute force over all vertex permutations; small graphs only."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    target = g2.edges
    for perm in itertools.permutations(range(1, g1.n + 1)):
        if frozenset(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in g1.edges) == target:
            return True
    return False


def has_forbidden_induced(g):
    """True if some 4 vertices induce P4, C4 or 2K2."""
    adj = g.adjacency()
    for quad in itertools.combinations(range(g.n), 4):
        sub = adj[np.ix_(quad, quad)]
        deg = sorted(sub.sum(axis=1).tolist())
        if deg in ([1, 1, 2, 2], [2, 2, 2, 2], [1, 1, 1, 1]):
            return True
    return False


@st.composite
def creation_sequences(draw, min_n=2, max_n=40):
    n = draw(st.integers(min_n, max_n))
    free = draw(st.lists(st.integers(0, 1), min_size=n - 2, max_size=n - 2))
    return CreationSequence(tuple([0] + free + [1]))


@st.composite
def compact_sequences(draw, min_n=2, max_n=40):
    return compact_from_full(draw(creation_sequences(min_n, max_n)))
