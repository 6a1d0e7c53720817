"""Tests for graph core exceptions."""

from app.services.graph_core.exceptions import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    GraphCoreError,
    GraphParseError,
    InvalidGraphError,
    InvalidParameterError,
    MissingHeaderError,
    VertexOutOfRangeError,
    VertexRangeError,
)


def test_invalid_graph_error():
    error = InvalidGraphError("self-loop at 2")
    assert str(error) == "Invalid graph: self-loop at 2"
    assert isinstance(error, GraphCoreError)


def test_vertex_range_error():
    error = VertexRangeError(5, 3)
    assert str(error) == "Vertex 5 out of range 1..3"
    assert isinstance(error, GraphCoreError)


def test_invalid_parameter_error():
    error = InvalidParameterError("p", 0, "a positive integer")
    assert str(error) == "Invalid p=0: expected a positive integer"


def test_parse_errors_share_a_base():
    errors = [
        MissingHeaderError(1, "e 1 2"),
        DuplicateEdgeError(3, "e 2 1"),
        VertexOutOfRangeError(2, "e 1 3", 3, 2),
        EdgeCountMismatchError(1, "p edge 3 2", 2, 1),
    ]
    for error in errors:
        assert isinstance(error, GraphParseError)
        assert isinstance(error, GraphCoreError)


def test_parse_error_messages():
    assert str(MissingHeaderError(1, "e 1 2")) == "Line 1: missing header: 'e 1 2'"
    assert str(EdgeCountMismatchError(1, "p edge 3 2", 2, 1)) == (
        "Line 1: header declares 2 edges, found 1: 'p edge 3 2'"
    )
    assert str(VertexOutOfRangeError(2, "e 1 3", 3, 2)) == "Line 2: vertex 3 out of range 1..2: 'e 1 3'"
