"""Custom exceptions for verification suites and reports."""


class VerificationError(Exception):
    """Base class for verification errors."""


class UnknownSuiteError(VerificationError):
    """Error raised when a suite name is not recognised."""

    def __init__(self, name: str, known: list) -> None:
        """Initialize the error.

        Args:
            name: Requested suite name
            known: Accepted suite names
        """
        self.name = name
        self.known = known
        super().__init__(f"Unknown suite {name!r}; expected one of {', '.join(known)}")


class InvalidSuiteSpecError(VerificationError):
    """Error raised for a non-positive budget or a negative seed."""

    def __init__(self, field: str, value: object) -> None:
        """Initialize the error.

        Args:
            field: Offending field
            value: Rejected value
        """
        self.field = field
        self.value = value
        super().__init__(f"Invalid suite {field}: {value!r}")


class ReportParseError(VerificationError):
    """Error raised when a JSON-lines report cannot be read back."""

    def __init__(self, line_number: int, line: str, reason: str) -> None:
        """Initialize the error.

        Args:
            line_number: 1-based line number
            line: Offending line
            reason: Why it was rejected
        """
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"Line {line_number}: {reason}: {line!r}")
