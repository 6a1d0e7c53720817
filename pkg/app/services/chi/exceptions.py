"""Custom exceptions for the chromatic and clique number oracles."""


class ChiError(Exception):
    """Base class for chi oracle errors."""


class InconsistentBoundError(ChiError):
    """Error raised when a supplied lower bound exceeds a found colouring."""

    def __init__(self, lower_bound: int, upper_bound: int, source: str) -> None:
        """Initialize the error.

        Args:
            lower_bound: Claimed lower bound
            upper_bound: Size of a proper colouring that was found
            source: Provenance of the claimed bound
        """
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.source = source
        super().__init__(
            f"Lower bound {lower_bound} from {source} exceeds a proper {upper_bound}-colouring"
        )
