import io

import pytest

from ktcover.cliques import WeightMap
from ktcover.graph import Graph, cycle_graph, turan_hypergraph
from ktcover.io import (
    FormatError,
    format_edge_list,
    format_hypergraph,
    format_weights,
    parse_edge_list,
    parse_hypergraph,
    parse_ordering,
    parse_weights,
    read_text,
)


def test_edge_list_round_trip():
    g = cycle_graph(5)
    text = format_edge_list(g, ["a comment"])
    assert text.startswith("# a comment\np 5 5\n")
    assert parse_edge_list(text) == g


def test_edge_list_comments_and_blanks():
    assert parse_edge_list("# hi\n\np 3 1\n  # mid\n0 2\n") == Graph(3, [(0, 2)])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "q 3 1\n0 1\n",
        "p 3\n",
        "p 3 1\n0 3\n",
        "p 3 1\n1 1\n",
        "p 3 2\n0 1\n",
        "p 3 2\n0 1\n1 0\n",
        "p 3 1\n0 x\n",
        "p 3 1\n0 1 2\n",
    ],
)
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_hypergraph_round_trip():
    h = turan_hypergraph(7)
    assert parse_hypergraph(format_hypergraph(h)) == h
    with pytest.raises(FormatError):
        parse_hypergraph("h3 3 1\n0 1 1\n")


def test_weights_round_trip():
    w = WeightMap(2, 0, {(0, 1): 3, (1, 2): 5})
    assert parse_weights(format_weights(w)) == w
    with pytest.raises(FormatError):
        parse_weights("w 2 0\n1 0 3\n")
    with pytest.raises(FormatError):
        parse_weights("w 2 0\n0 1 3\n0 1 4\n")
    with pytest.raises(FormatError):
        parse_weights("w 2 0\n0 1 -3\n")


def test_ordering():
    assert parse_ordering("3 1\n# c\n0 2\n") == [3, 1, 0, 2]
    with pytest.raises(FormatError):
        parse_ordering("1 a")


def test_read_text_stdin():
    assert read_text("-", io.StringIO("abc")) == "abc"
