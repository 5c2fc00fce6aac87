import math

import numpy as np
import pytest
from hypothesis import given, settings

from helpers import compact_sequences
from nsgraph import oracle
from nsgraph.errors import Disconnected, EmptyGraph
from nsgraph.graph import SimpleGraph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from nsgraph.sequences import realize


def test_entropy():
    assert oracle.oracle_entropy(complete_graph(2)) == 0
    assert oracle.oracle_entropy(cycle_graph(4)) == 2
    assert oracle.oracle_entropy(realize((1, 2, 1, 1, 5, 2))) == pytest.approx(4.807, abs=5e-4)
    with pytest.raises(EmptyGraph):
        oracle.oracle_entropy(empty_graph(3))


def test_randic():
    assert oracle.oracle_randic(complete_graph(2)) == 1
    assert oracle.oracle_randic(star_graph(3)) == pytest.approx(math.sqrt(3))
    assert oracle.oracle_randic(realize((1, 1, 1, 1, 7, 1))) == pytest.approx(4.087, abs=5e-4)


@pytest.mark.parametrize(
    "g, w, sz, copi",
    [
        (complete_graph(5), 10, 10, 0),
        (realize((1, 1, 1, 1, 7, 1)), 117, 121, 106),
        # P3: nu values per edge are (1, 2) and (2, 1)
        (path_graph(3), 4, 4, 2),
    ],
)
def test_distance_indices(g, w, sz, copi):
    assert oracle.oracle_wiener(g) == w
    assert oracle.oracle_szeged(g) == sz
    assert oracle.oracle_copi(g) == copi


def test_closer_counts_on_path():
    edges, nu_uv, nu_vu = oracle.closer_counts(path_graph(3))
    assert edges == [(1, 2), (2, 3)]
    assert nu_uv.tolist() == [1, 2]
    assert nu_vu.tolist() == [2, 1]


def test_disconnected_raises_for_distance_indices_only():
    g = SimpleGraph(4, frozenset({(1, 2), (3, 4)}))
    for fn in (oracle.oracle_wiener, oracle.oracle_szeged, oracle.oracle_copi):
        with pytest.raises(Disconnected):
            fn(g)
    assert oracle.oracle_entropy(g) == 1
    assert oracle.oracle_gutman(g) == pytest.approx(4)
    values = oracle.oracle_indices(g, strict=False)
    assert values["wiener"] is None and values["edges"] == 2
    with pytest.raises(Disconnected):
        oracle.oracle_indices(g)


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(2), [1, -1]),
        (cycle_graph(4), [2, 0, 0, -2]),
        (complete_graph(5), [4, -1, -1, -1, -1]),
    ],
)
def test_spectrum(g, expected):
    assert np.allclose(oracle.oracle_spectrum(g), expected, atol=1e-12)


def test_spectral_indices():
    k2 = complete_graph(2)
    assert oracle.oracle_estrada(k2) == pytest.approx(math.e + 1 / math.e)
    assert oracle.oracle_gutman(k2) == pytest.approx(2)
    assert oracle.oracle_resolvent(k2) == pytest.approx(4 / 3)
    g = realize((1, 2, 2, 1, 7, 1))
    assert f"{oracle.oracle_estrada(g):.4g}" == "136.9"
    assert f"{oracle.oracle_gutman(g):.4g}" == "14.08"
    assert f"{oracle.oracle_resolvent(g):.4g}" == "1.019"
    e = empty_graph(6)
    assert oracle.oracle_estrada(e) == 6
    assert oracle.oracle_gutman(e) == 0
    assert oracle.oracle_resolvent(e) == pytest.approx(1)


@pytest.mark.parametrize("seed", range(4))
def test_jacobi_residual(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 60))
    a = rng.normal(size=(n, n))
    a = a + a.T
    w, v = oracle.jacobi_eigh(a)
    assert np.all(np.diff(w) <= 0)
    assert np.linalg.norm(a @ v - v * w) <= 1e-10 * n * max(1.0, np.abs(a).max())
    assert np.allclose(v.T @ v, np.eye(n), atol=1e-10)
    assert np.allclose(w, np.linalg.eigvalsh(a)[::-1], atol=1e-9)


@settings(deadline=None, max_examples=50)
@given(compact_sequences())
def test_nsg_distances_are_one_or_two(a):
    d = oracle.distance_matrix(realize(a))
    assert np.array_equal(d, d.T)
    assert np.all(np.diag(d) == 0)
    off = d[~np.eye(a.n, dtype=bool)]
    assert set(off.tolist()) <= {1, 2}


@settings(deadline=None, max_examples=50)
@given(compact_sequences())
def test_nu_at_least_one_and_spectrum_moments(a):
    g = realize(a)
    _, nu_uv, nu_vu = oracle.closer_counts(g)
    assert nu_uv.min() >= 1 and nu_vu.min() >= 1
    lam = oracle.oracle_spectrum(g)
    assert abs(lam.sum()) <= 1e-8
    assert (lam ** 2).sum() == pytest.approx(2 * g.m, abs=1e-6)


def test_distance_matrix_triangle_inequality():
    g = SimpleGraph(7, frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 7), (2, 5)}))
    d = oracle.distance_matrix(g)
    for k in range(g.n):
        assert np.all(d <= d[:, [k]] + d[[k], :])
