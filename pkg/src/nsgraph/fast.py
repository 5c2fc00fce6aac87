"""Graph indices of a nested split graph computed from its compact sequence.

Every function takes the compact creation sequence ``a`` and runs in time
linear in the number of cells ``r`` (the spectral ones add an ``r x r``
eigensolve). Integer-valued indices use exact Python integers.

Internally cells are split into co-cliques ``odd[k] = a[2k]`` and cliques
``even[k] = a[2k + 1]``, ``k = 0 .. r/2 - 1``; cell pair ``k`` is a level.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate

import numpy as np

from .sequences import as_compact, quotient_matrix


@dataclass(frozen=True)
class PrefixSums:
    """Cumulative sums shared by the index formulas.

    Suffix arrays (``delta``, ``gamma``, ``eta``) carry a trailing zero so
    ``x[k + 1]`` is valid on the last level. ``kappa`` is ``delta``.
    """

    odd: tuple
    even: tuple
    delta: tuple  # suffix sums of clique sizes
    gamma: tuple  # suffix sums of co-clique sizes
    epsilon: tuple  # prefix sums of co-clique sizes (inclusive)
    zeta: tuple  # prefix sums of clique sizes (inclusive)
    eta: tuple  # suffix sums of even[j] * epsilon[j]

    @property
    def kappa(self) -> tuple:
        return self.delta

    @property
    def levels(self) -> int:
        return len(self.odd)

    @property
    def n(self) -> int:
        return self.gamma[0] + self.delta[0]


def _suffix(xs):
    return tuple(accumulate(reversed(xs)))[::-1] + (0,)


def prefix_sums(a) -> PrefixSums:
    cells = as_compact(a).cells
    odd, even = cells[0::2], cells[1::2]
    epsilon = tuple(accumulate(odd))
    return PrefixSums(
        odd=odd,
        even=even,
        delta=_suffix(even),
        gamma=_suffix(odd),
        epsilon=epsilon,
        zeta=tuple(accumulate(even)),
        eta=_suffix([e * p for e, p in zip(even, epsilon)]),
    )


def _sums(a, sums):
    return sums if sums is not None else prefix_sums(a)


def edge_count(a, sums=None) -> int:
    s = _sums(a, sums)
    k1 = s.kappa[0]
    return k1 * (k1 - 1) // 2 + sum(o * d for o, d in zip(s.odd, s.kappa))


def entropy(a, sums=None) -> float:
    return math.log2(edge_count(a, sums))


@dataclass(frozen=True)
class CellDegrees:
    degrees: tuple

    @property
    def coclique(self) -> tuple:
        return self.degrees[0::2]

    @property
    def clique(self) -> tuple:
        return self.degrees[1::2]

    def per_vertex(self, a) -> np.ndarray:
        return np.repeat(np.asarray(self.degrees), as_compact(a).cells)


def cell_degrees(a, sums=None) -> CellDegrees:
    s = _sums(a, sums)
    total_clique = s.delta[0]
    degrees = []
    for k in range(s.levels):
        degrees.append(s.delta[k])
        degrees.append(s.epsilon[k] + total_clique - 1)
    return CellDegrees(tuple(degrees))


def randic(a, sums=None) -> float:
    s = _sums(a, sums)
    rho = cell_degrees(a, s)
    alpha_odd = [o / math.sqrt(d) for o, d in zip(s.odd, rho.coclique)]
    alpha_even = [e / math.sqrt(d) for e, d in zip(s.even, rho.clique)]
    beta = _suffix(alpha_even)
    between = sum(alpha_odd[k] * beta[k] + alpha_even[k] * beta[k + 1] for k in range(s.levels))
    within = sum(e * (e - 1) / (2 * d) for e, d in zip(s.even, rho.clique))
    return between + within


def wiener(a, sums=None) -> int:
    s = _sums(a, sums)
    total = 0
    for k, (o, e) in enumerate(zip(s.odd, s.even)):
        total += o * (o - 1 + s.delta[k]) + e * (e - 1) // 2
        # zero on the last level since delta/gamma end with 0
        total += 2 * o * s.gamma[k + 1] + e * (s.delta[k + 1] + 2 * s.gamma[k + 1])
    return total


def szeged(a, sums=None) -> int:
    s = _sums(a, sums)
    total = sum(e * (e - 1) // 2 for e in s.even)
    for k, e in enumerate(s.even):
        total += e * (s.delta[k + 1] * (1 - s.epsilon[k]) + s.eta[k + 1])
    total += s.odd[0] * s.eta[0]
    for k in range(1, s.levels):
        total += s.odd[k] * (s.eta[k] + s.delta[k] * s.zeta[k - 1])
    return total


def copi(a, sums=None) -> int:
    s = _sums(a, sums)
    total = 0
    for k, e in enumerate(s.even):
        total += e * (s.eta[k + 1] - s.delta[k + 1] * s.epsilon[k])
    total += s.odd[0] * (s.eta[0] - s.delta[0])
    for k in range(1, s.levels):
        total += s.odd[k] * (s.delta[k] * (s.zeta[k - 1] - 1) + s.eta[k])
    return total


def nonmain_multiplicities(a, sums=None) -> tuple[int, int]:
    """Multiplicities of the eigenvalues -1 and 0 outside the quotient spectrum."""
    s = _sums(a, sums)
    return s.delta[0] - s.levels, s.gamma[0] - s.levels


def main_eigenvalues(a) -> np.ndarray:
    return quotient_matrix(a).eigenvalues()


def nsg_spectrum(a, sums=None) -> np.ndarray:
    """Full adjacency spectrum, non-increasing, assembled from the quotient."""
    s = _sums(a, sums)
    minus_ones, zeros = nonmain_multiplicities(a, s)
    lam = np.concatenate([main_eigenvalues(a), np.zeros(zeros), -np.ones(minus_ones)])
    return -np.sort(-lam)


def estrada(a, sums=None, eigenvalues=None) -> float:
    s = _sums(a, sums)
    lam = main_eigenvalues(a) if eigenvalues is None else eigenvalues
    minus_ones, zeros = nonmain_multiplicities(a, s)
    return minus_ones * math.exp(-1) + zeros + float(np.sum(np.exp(lam)))


def gutman_energy(a, sums=None, eigenvalues=None) -> float:
    s = _sums(a, sums)
    lam = main_eigenvalues(a) if eigenvalues is None else eigenvalues
    minus_ones, _ = nonmain_multiplicities(a, s)
    return minus_ones + float(np.sum(np.abs(lam)))


def resolvent_energy(a, sums=None, eigenvalues=None) -> float:
    s = _sums(a, sums)
    lam = main_eigenvalues(a) if eigenvalues is None else eigenvalues
    minus_ones, zeros = nonmain_multiplicities(a, s)
    n = s.n
    return minus_ones / (n + 1) + zeros / n + float(np.sum(1.0 / (n - lam)))


INDEX_NAMES = ("edges", "entropy", "randic", "wiener", "szeged", "copi", "estrada", "gutman", "resolvent")


def all_indices(a) -> dict:
    """Every index of the NSG, sharing one set of prefix sums and one eigensolve."""
    a = as_compact(a)
    s = prefix_sums(a)
    lam = main_eigenvalues(a)
    return {
        "edges": edge_count(a, s),
        "entropy": entropy(a, s),
        "randic": randic(a, s),
        "wiener": wiener(a, s),
        "szeged": szeged(a, s),
        "copi": copi(a, s),
        "estrada": estrada(a, s, lam),
        "gutman": gutman_energy(a, s, lam),
        "resolvent": resolvent_energy(a, s, lam),
    }
