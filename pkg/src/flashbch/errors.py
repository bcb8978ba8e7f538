"""Exception hierarchy shared by every module of the package."""


class BCHError(Exception):
    """Base class for all errors raised by flashbch."""


class BadDegree(BCHError, ValueError):
    pass


class NonPrimitivePolynomial(BCHError, ValueError):
    pass


class FieldMismatch(BCHError, ValueError):
    pass


class DivisionByZero(BCHError, ZeroDivisionError):
    pass


class InvalidT(BCHError, ValueError):
    pass


class MessageTooLong(BCHError, ValueError):
    pass


class LengthMismatch(BCHError, ValueError):
    pass


class InvalidParallelism(BCHError, ValueError):
    pass


class PositionOutOfRange(BCHError, IndexError):
    pass


class DegreeMismatch(BCHError):
    """Chien search found a root count different from the locator degree."""

    def __init__(self, expected, positions):
        self.expected = expected
        self.positions = tuple(positions)
        super().__init__(
            f"locator degree {expected} but {len(self.positions)} roots found")


class GroupMismatch(BCHError, ValueError):
    pass


class WidthMismatch(BCHError, ValueError):
    pass


class ConfigError(BCHError, ValueError):
    pass


class TruncatedInput(BCHError, ValueError):
    def __init__(self, block_index, message=None):
        self.block_index = block_index
        super().__init__(message or f"truncated codeword stream at block {block_index}")
