"""Custom exceptions for linear orders and access sets."""


class OrderingError(Exception):
    """Base class for ordering errors."""


class InvalidOrderError(OrderingError):
    """Error raised when a sequence is not a permutation of 1..n."""

    def __init__(self, reason: str) -> None:
        """Initialize the error.

        Args:
            reason: What is wrong with the sequence
        """
        self.reason = reason
        super().__init__(f"Invalid linear order: {reason}")


class OrderSizeMismatchError(OrderingError):
    """Error raised when an order and a graph disagree on the vertex count."""

    def __init__(self, order_size: int, graph_size: int) -> None:
        """Initialize the error.

        Args:
            order_size: Number of vertices in the order
            graph_size: Number of vertices in the graph
        """
        self.order_size = order_size
        self.graph_size = graph_size
        super().__init__(f"Order has {order_size} vertices but the graph has {graph_size}")


class InvalidAccessKindError(OrderingError):
    """Error raised for an unsupported kind/radius combination."""

    def __init__(self, kind: str, radius: object) -> None:
        """Initialize the error.

        Args:
            kind: Access kind name
            radius: Rejected radius
        """
        self.kind = kind
        self.radius = radius
        super().__init__(f"Radius {radius!r} is not valid for access kind {kind}")


class OrderParseError(OrderingError):
    """Error raised when an ordering file cannot be read."""

    def __init__(self, line_number: int, line: str) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number
            line: Offending line
        """
        self.line_number = line_number
        self.line = line
        super().__init__(f"Line {line_number}: not a vertex id: {line!r}")
