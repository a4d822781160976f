"""Exceptions raised by the betti package."""


class BettiError(Exception):
    """Base class for all domain errors."""


class ParseError(BettiError):
    """Malformed diagram text; carries the offending line number."""

    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class NonDivisibleError(BettiError):
    """Laurent division left a non-zero remainder."""


class CodimMismatchError(BettiError):
    """Operands have different codimension."""


class MissingColumnError(BettiError):
    """A homological degree has no non-zero entries."""

    def __init__(self, column):
        super().__init__(f"no entries in homological degree {column}")
        self.column = column


class NegativeEntryError(BettiError):
    """A cancellation would drive an entry below zero."""


class ZeroRowError(BettiError):
    """Normalization is undefined when the generator row sums to zero."""


class NotIncreasingError(BettiError):
    """Degree sequence is not strictly increasing."""


class LengthMismatchError(BettiError):
    """Degree sequences have different lengths."""


class PosetTooLargeError(BettiError):
    """Poset enumeration exceeded the element cap."""


class InvalidInputError(BettiError):
    """Operation precondition violated."""


class NotInConeError(BettiError):
    """Greedy peeling jammed before exhausting the diagram.

    Attributes:
        partial: the terms peeled off before the jam.
        remainder: the stuck remainder diagram (the witness).
    """

    def __init__(self, partial, remainder):
        super().__init__("diagram is not a non-negative chain combination of pure diagrams")
        self.partial = partial
        self.remainder = remainder


class ShiftsNotIncreasingError(BettiError):
    """Minimal or maximal shifts are not strictly increasing."""


class ColumnNotConcentratedError(BettiError):
    """Reduction needs all entries of one column at a single degree."""


class DegreeCollisionError(BettiError):
    """Inverse reduction target already has entries at the pivot degree."""


class NotDominatedError(BettiError):
    """Second degree sequence must exceed the first in every position."""


class NotContainedError(BettiError):
    """The denominator ideal is not contained in the numerator ideal."""


class InvalidSocleError(BettiError):
    """Socle degree and generator degrees are not consistent."""


class NotInSpanError(BettiError):
    """Diagram is outside the span of the chosen chain.

    Attributes:
        residual: non-zero diagram left after the best exact fit.
    """

    def __init__(self, residual):
        super().__init__("diagram is outside the span of the chain")
        self.residual = residual


__all__ = [
    "BettiError",
    "ParseError",
    "NonDivisibleError",
    "CodimMismatchError",
    "MissingColumnError",
    "NegativeEntryError",
    "ZeroRowError",
    "NotIncreasingError",
    "LengthMismatchError",
    "PosetTooLargeError",
    "InvalidInputError",
    "NotInConeError",
    "ShiftsNotIncreasingError",
    "ColumnNotConcentratedError",
    "DegreeCollisionError",
    "NotDominatedError",
    "NotContainedError",
    "InvalidSocleError",
    "NotInSpanError",
]
