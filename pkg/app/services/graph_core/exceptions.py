"""Custom exceptions for graph construction and graph-file parsing."""


class GraphCoreError(Exception):
    """Base class for graph core errors."""


class InvalidGraphError(GraphCoreError):
    """Error raised when a graph violates a structural invariant."""

    def __init__(self, reason: str) -> None:
        """Initialize the error.

        Args:
            reason: Description of the violated invariant
        """
        self.reason = reason
        super().__init__(f"Invalid graph: {reason}")


class VertexRangeError(GraphCoreError):
    """Error raised when an operation receives a vertex outside 1..n."""

    def __init__(self, vertex: int, n: int) -> None:
        """Initialize the error.

        Args:
            vertex: Offending vertex id
            n: Vertex count of the graph
        """
        self.vertex = vertex
        self.n = n
        super().__init__(f"Vertex {vertex} out of range 1..{n}")


class InvalidParameterError(GraphCoreError):
    """Error raised when a derived-graph parameter is out of range."""

    def __init__(self, name: str, value: object, expected: str) -> None:
        """Initialize the error.

        Args:
            name: Parameter name
            value: Rejected value
            expected: Human-readable description of the accepted range
        """
        self.name = name
        self.value = value
        self.expected = expected
        super().__init__(f"Invalid {name}={value!r}: expected {expected}")


class GraphParseError(GraphCoreError):
    """Base class for graph-file parse errors; names the offending line."""

    def __init__(self, line_number: int, line: str, reason: str) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number in the input (0 when the input as a whole is at fault)
            line: Offending line content
            reason: Why the line was rejected
        """
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"Line {line_number}: {reason}: {line!r}")


class MalformedLineError(GraphParseError):
    """Error raised for a line that matches no production of the format."""

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(line_number, line, "malformed line")


class MissingHeaderError(GraphParseError):
    """Error raised when no header precedes the body, or none exists at all."""

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(line_number, line, "missing header")


class VertexOutOfRangeError(GraphParseError):
    """Error raised when a line references a vertex outside 1..n."""

    def __init__(self, line_number: int, line: str, vertex: int, n: int) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number
            line: Offending line content
            vertex: Offending vertex id
            n: Declared vertex count
        """
        self.vertex = vertex
        self.n = n
        super().__init__(line_number, line, f"vertex {vertex} out of range 1..{n}")


class SelfLoopError(GraphParseError):
    """Error raised for an edge joining a vertex to itself."""

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(line_number, line, "self-loop")


class DuplicateEdgeError(GraphParseError):
    """Error raised when an edge appears twice."""

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(line_number, line, "duplicate edge")


class EdgeCountMismatchError(GraphParseError):
    """Error raised when the header's edge count disagrees with the body."""

    def __init__(self, line_number: int, line: str, declared: int, found: int) -> None:
        """Initialize the error.

        Args:
            line_number: Line number of the header
            line: Header line content
            declared: Edge count stated in the header
            found: Number of edge lines actually read
        """
        self.declared = declared
        self.found = found
        super().__init__(line_number, line, f"header declares {declared} edges, found {found}")


class UnorderedEdgeError(GraphParseError):
    """Error raised for an edge line ``e u v`` with u > v."""

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(line_number, line, "edge endpoints must satisfy u < v")
