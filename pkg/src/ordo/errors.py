"""Exception hierarchy."""


class OrdoError(Exception):
    """Base class for all library errors."""


class BallotParseError(OrdoError):
    """A ballot file could not be parsed or failed validation."""

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GuardError(OrdoError):
    """An exhaustive search was refused because the universe is too large."""


class AgendaError(OrdoError, ValueError):
    """A ranked-pairs agenda is not a strength-descending order of all pairs."""


class ConsistencyError(OrdoError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
