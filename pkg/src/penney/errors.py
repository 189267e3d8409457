"""Exception types shared across the package."""


class PenneyError(ValueError):
    """Base class for user-facing errors raised by this package."""


class WordError(PenneyError):
    """A string cannot be parsed as a valid H/T word."""


class LengthMismatchError(PenneyError):
    """An operation over two words requires equal lengths."""


class UnknownVariantError(PenneyError):
    """The requested game variant does not exist."""


class TableSizeError(PenneyError):
    """A whole-table computation was requested for an unsupported length."""


class DomainError(PenneyError):
    """A precondition on an operation's inputs was violated."""


class ChainError(RuntimeError):
    """An absorbing chain violated a structural invariant (internal)."""
