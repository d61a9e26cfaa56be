"""Exception types shared across the package."""


class MixedSumError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MixedSumError, ValueError):
    """Malformed ring, monomial or ideal text.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class RingMismatch(MixedSumError, ValueError):
    pass


class PreconditionError(MixedSumError, ValueError):
    """An operation was called outside its documented domain."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class CapExceeded(MixedSumError):
    """A configured resource cap would be exceeded."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
