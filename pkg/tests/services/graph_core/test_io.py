"""Tests for the graph file format."""

import pytest

from app.services.graph_core import Graph, format_graph, parse_graph, read_graph, write_graph
from app.services.graph_core.exceptions import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedLineError,
    MissingHeaderError,
    SelfLoopError,
    UnorderedEdgeError,
    VertexOutOfRangeError,
)

from tests.helpers import complete


def test_parse_single_edge():
    assert parse_graph("p edge 2 1\ne 1 2\n") == Graph.from_edges(2, [(1, 2)])


def test_parse_triangle():
    assert parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete(3)


def test_parse_reads_comments_and_labels():
    g = parse_graph("c a comment\nc label 2 mid\n\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g.edges == frozenset({(1, 2), (2, 3)})
    assert g.labels == {2: "mid"}


def test_label_names_may_contain_spaces():
    g = parse_graph("c label 1 x 1 ^ 1\np edge 1 0\n")
    assert g.labels == {1: "x 1 ^ 1"}


def test_format_graph_layout():
    """Comment, labels, header, then edges in ascending order."""
    g = Graph.from_edges(3, [(2, 3), (1, 2)], {2: "mid"})
    assert format_graph(g, comment="hi") == "c hi\nc label 2 mid\np edge 3 2\ne 1 2\ne 2 3\n"


def test_format_then_parse_keeps_labels():
    g = Graph.from_edges(4, [(1, 4), (2, 3)], {1: "z", 4: "y^1"})
    parsed = parse_graph(format_graph(g))
    assert parsed == g
    assert parsed.labels == g.labels


@pytest.mark.parametrize(
    "text,error,line_number",
    [
        ("", MissingHeaderError, 0),
        ("e 1 2\n", MissingHeaderError, 1),
        ("p edge 3 x\n", MalformedLineError, 1),
        ("p edge 2 0\np edge 2 0\n", MalformedLineError, 2),
        ("p edge 2 1\nq 1 2\n", MalformedLineError, 2),
        ("p edge 2 1\ne 1\n", MalformedLineError, 2),
        ("p edge 2 1\ne 1 3\n", VertexOutOfRangeError, 2),
        ("p edge 2 1\ne 1 1\n", SelfLoopError, 2),
        ("p edge 3 2\ne 1 2\ne 1 2\n", DuplicateEdgeError, 3),
        ("p edge 3 2\ne 1 2\ne 3 2\n", UnorderedEdgeError, 3),
        ("p edge 2 1\ne 2 1\n", UnorderedEdgeError, 2),
        ("p edge 2 1\ne 1 \u00b2\n", MalformedLineError, 2),
        ("p edge \u0662 0\n", MalformedLineError, 1),
        ("c label \u00b9 z\np edge 1 0\n", MalformedLineError, 1),
        ("p edge 3 2\ne 1 2\n", EdgeCountMismatchError, 1),
        ("c label 9 z\np edge 2 0\n", VertexOutOfRangeError, 1),
    ],
)
def test_parse_errors_name_the_line(text, error, line_number):
    with pytest.raises(error) as excinfo:
        parse_graph(text)
    assert excinfo.value.line_number == line_number


def test_write_and_read(tmp_path):
    g = complete(4).with_labels({3: "apex"})
    target = tmp_path / "k4.gr"
    write_graph(g, str(target), comment="K_4")
    assert target.read_text(encoding="utf-8").startswith("c K_4\n")
    assert read_graph(str(target)).labels == {3: "apex"}


def test_reversed_edge_message_names_the_rule():
    with pytest.raises(UnorderedEdgeError, match=r"Line 2: edge endpoints must satisfy u < v: 'e 3 1'"):
        parse_graph("p edge 3 1\ne 3 1\n")


def test_superscript_digit_is_a_parse_error_not_a_crash():
    # str.isdigit accepts "²" but int() rejects it
    with pytest.raises(MalformedLineError) as excinfo:
        parse_graph("p edge 2 1\ne 1 ²\n")
    assert excinfo.value.line == "e 1 ²"
