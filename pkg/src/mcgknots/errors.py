"""Exception hierarchy shared by the package and mapped to CLI exit codes."""


class MCGError(Exception):
    """Base class for all errors raised by mcgknots."""


class WordSyntaxError(MCGError, ValueError):
    """A token string could not be parsed.

    ``position`` is the 1-based index of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (token {position})")
        self.position = position


class DomainError(MCGError, ValueError):
    """Arguments violate the documented preconditions of an operation."""


class NotPureError(DomainError):
    """The word contains the puncture-swapping rotation rho."""

    def __init__(self, message="not a pure mapping class"):
        super().__init__(message)


class NotInKernelError(DomainError):
    def __init__(self, message="not in kernel"):
        super().__init__(message)


class VerificationError(MCGError, RuntimeError):
    """An internal consistency check failed; indicates a bug, never bad input."""
