"""Custom exceptions for decompositions and bound formulas."""


class DecompositionError(Exception):
    """Base class for decomposition errors."""


class InvalidPartitionError(DecompositionError):
    """Error raised when parts are empty, overlap or miss a vertex."""

    def __init__(self, reason: str) -> None:
        """Initialize the error.

        Args:
            reason: What is wrong with the partition
        """
        self.reason = reason
        super().__init__(f"Invalid decomposition: {reason}")


class DisconnectedPartError(DecompositionError):
    """Error raised when an operation needs connected parts and one is not."""

    def __init__(self, index: int) -> None:
        """Initialize the error.

        Args:
            index: 1-based index of the first disconnected part
        """
        self.index = index
        super().__init__(f"Part {index} does not induce a connected subgraph")


class InvalidProfileError(DecompositionError):
    """Error raised for a flatness profile that decreases or misses a radius."""

    def __init__(self, reason: str) -> None:
        """Initialize the error.

        Args:
            reason: What is wrong with the profile
        """
        self.reason = reason
        super().__init__(f"Invalid flatness profile: {reason}")


class BoundParameterError(DecompositionError):
    """Error raised when a bound formula receives out-of-range parameters."""

    def __init__(self, formula: str, name: str, value: object, expected: str) -> None:
        """Initialize the error.

        Args:
            formula: Formula name
            name: Parameter name
            value: Rejected value
            expected: Accepted range
        """
        self.formula = formula
        self.name = name
        self.value = value
        self.expected = expected
        super().__init__(f"{formula}: invalid {name}={value!r}, expected {expected}")


class DecompositionParseError(DecompositionError):
    """Error raised when a decomposition file cannot be read."""

    def __init__(self, line_number: int, line: str, reason: str) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number (0 for the file as a whole)
            line: Offending line
            reason: Why it was rejected
        """
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"Line {line_number}: {reason}: {line!r}")
