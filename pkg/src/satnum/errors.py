"""Exception hierarchy shared across the package."""


class SatnumError(Exception):
    """Base class for all satnum errors."""


class GraphError(SatnumError, ValueError):
    """Invalid graph construction or structural operation."""


class FamilyError(SatnumError, ValueError):
    """Family parameters violate a generator invariant."""


class ParseError(SatnumError, ValueError):
    """Malformed family expression or edge-list text.

    ``offset`` is the 1-based byte offset of the first offending character
    (or of end-of-input for truncated text).
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class DomainError(SatnumError, ValueError):
    """Formula argument outside the formula's stated domain."""


class UnsupportedParameterError(SatnumError, ValueError):
    """Parameter combination not covered by any published case row."""


class ResourceLimitError(SatnumError, RuntimeError):
    """Instance exceeds a configured solver cap."""
