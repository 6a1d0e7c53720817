"""Custom exceptions for colouring procedures."""


class ColoringError(Exception):
    """Base class for colouring errors."""


class ParityError(ColoringError):
    """Error raised when a procedure receives p of the wrong parity."""

    def __init__(self, procedure: str, p: int, expected: str) -> None:
        """Initialize the error.

        Args:
            procedure: Name of the colouring procedure
            p: Rejected distance parameter
            expected: "odd" or "even"
        """
        self.procedure = procedure
        self.p = p
        self.expected = expected
        super().__init__(f"{procedure} needs an {expected} positive p, got {p}")


class UncoloredVertexError(ColoringError):
    """Error raised when a colouring misses a vertex of the graph."""

    def __init__(self, vertex: int) -> None:
        """Initialize the error.

        Args:
            vertex: First vertex without a colour
        """
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} has no colour")


class InvalidColoringError(ColoringError):
    """Error raised when colour ids or legends are inconsistent."""

    def __init__(self, reason: str) -> None:
        """Initialize the error.

        Args:
            reason: What is wrong
        """
        self.reason = reason
        super().__init__(f"Invalid colouring: {reason}")


class SignatureConflictError(ColoringError):
    """Error raised when a signature would read two values for one colour.

    Signals a defect in the auxiliary colouring, never bad input.
    """

    def __init__(self, vertex: int, colour: int, first: int, second: int) -> None:
        """Initialize the error.

        Args:
            vertex: Vertex whose signature was being built
            colour: Auxiliary colour seen twice
            first: First vertex carrying the colour
            second: Second vertex carrying the colour
        """
        self.vertex = vertex
        self.colour = colour
        self.first = first
        self.second = second
        super().__init__(
            f"Signature of vertex {vertex} is ill-defined: colour {colour} on both {first} and {second}"
        )


class ColoringParseError(ColoringError):
    """Error raised when a colouring file cannot be read."""

    def __init__(self, line_number: int, line: str) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number
            line: Offending line
        """
        self.line_number = line_number
        self.line = line
        super().__init__(f"Line {line_number}: malformed colouring line: {line!r}")
