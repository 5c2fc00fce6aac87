import pytest
from hypothesis import given, strategies as st

from nsgraph.errors import EmptyInput, ParseError, SelfLoop
from nsgraph.graph import SimpleGraph, path_graph
from nsgraph.graphio import (
    DuplicateEdgeWarning,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
    load_edge_list,
)


def test_parse_path():
    assert parse_edge_list("0 1\n1 2") == path_graph(3)


def test_duplicate_edges_collapse_with_warning():
    with pytest.warns(DuplicateEdgeWarning):
        parsed = read_edge_list("0 1\n0 1\n1 0\n")
    assert parsed.graph.m == 1
    assert parsed.duplicates == 2


def test_errors():
    with pytest.raises(SelfLoop):
        parse_edge_list("0 0")
    with pytest.raises(EmptyInput):
        parse_edge_list("# nothing\n\n")
    with pytest.raises(ParseError) as info:
        parse_edge_list("0 1\n1 2 3\n")
    assert info.value.lineno == 2


def test_comments_labels_and_isolated_vertices():
    parsed = read_edge_list("# header\n\n  a   b\nc\nb d\n")
    assert parsed.labels == ("a", "b", "c", "d")
    assert parsed.graph == SimpleGraph(4, frozenset({(1, 2), (2, 4)}))


def test_sparse_ids_remapped_in_first_appearance_order():
    parsed = read_edge_list("10 3\n3 7\n")
    assert parsed.labels == ("10", "3", "7")
    assert parsed.graph == path_graph(3)


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 15))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, frozenset(chosen))


@given(graphs())
def test_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_round_trip_file(tmp_path):
    g = SimpleGraph(9, frozenset({(1, 9), (2, 5), (4, 8), (3, 4)}))
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert load_edge_list(path).graph == g
