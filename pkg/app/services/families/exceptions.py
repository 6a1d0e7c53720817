"""Custom exceptions for graph family generators."""


class FamilyError(Exception):
    """Base class for family generator errors."""


class FamilyParameterError(FamilyError):
    """Error raised when a family parameter is out of range."""

    def __init__(self, family: str, name: str, value: object, expected: str) -> None:
        """Initialize the error.

        Args:
            family: Family name
            name: Parameter name
            value: Rejected value
            expected: Accepted range
        """
        self.family = family
        self.name = name
        self.value = value
        self.expected = expected
        super().__init__(f"{family}: invalid {name}={value!r}, expected {expected}")


class BundledDataError(FamilyError):
    """Error raised when the bundled G_4 data is missing or corrupt."""

    def __init__(self, resource: str, reason: str) -> None:
        """Initialize the error.

        Args:
            resource: Name of the bundled resource
            reason: Underlying failure
        """
        self.resource = resource
        self.reason = reason
        super().__init__(f"Bundled data '{resource}' unusable: {reason}")


class G4ValidationError(FamilyError):
    """Error raised when a G_4 candidate fails a structural check."""

    def __init__(self, failed: list) -> None:
        """Initialize the error.

        Args:
            failed: Names of the failed checks
        """
        self.failed = failed
        super().__init__(f"G_4 validation failed: {', '.join(failed)}")
