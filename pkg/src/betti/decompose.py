"""Greedy expansion of a diagram into pure diagrams, and multiplicity bounds.

The expansion peels pure diagrams off the minimal shifts of the remainder:
at each step the type is forced to be the minimal-shift sequence and the
coefficient is the largest rational keeping all entries non-negative. When
the diagram is a non-negative combination along a chain this recovers the
combination exactly; when the minimal shifts stop being strictly
increasing (or a column empties, or a forced coefficient fails to be
positive) the peeling jams and the stuck remainder is reported as a
witness. A jam is reported neutrally: it does not certify that no other
non-negative expansion exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial, prod

from .diagram import BettiDiagram, strictly_increasing
from .errors import (
    InvalidInputError,
    MissingColumnError,
    NotInConeError,
    ShiftsNotIncreasingError,
)
from .pure import Comparison, Degrees, compare, pure_diagram


@dataclass(frozen=True)
class PureDecomposition:
    """Ordered list of (coefficient, degree sequence) terms."""

    terms: tuple[tuple[Fraction, Degrees], ...]

    def __post_init__(self):
        fixed = tuple(
            (Fraction(c), tuple(int(x) for x in d)) for c, d in self.terms
        )
        object.__setattr__(self, "terms", fixed)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient_sum(self) -> Fraction:
        return sum((c for c, _ in self.terms), Fraction(0))

    def is_chain(self) -> bool:
        """True when consecutive types strictly increase componentwise."""
        return all(
            compare(a, b) is Comparison.LESS
            for (_, a), (_, b) in zip(self.terms, self.terms[1:])
        )

    def recombine(self, codim: int | None = None) -> BettiDiagram:
        return recombine(self, codim)


def recombine(decomposition, codim: int | None = None) -> BettiDiagram:
    """Sum coefficient * pure_diagram(type) over the terms.

    An empty decomposition gives the zero diagram (codim 0 unless given).
    """
    terms = list(decomposition)
    if codim is None:
        codim = len(terms[0][1]) - 1 if terms else 0
    total = BettiDiagram.zero(codim)
    for coefficient, degrees in terms:
        total = total + Fraction(coefficient) * pure_diagram(degrees)
    return total


def greedy_decompose(diagram: BettiDiagram) -> PureDecomposition:
    """Expand a valid non-zero diagram into pure diagrams along a chain.

    Each step zeroes at least one entry, so the loop terminates. Raises
    NotInConeError carrying the partial expansion and the stuck remainder
    when peeling jams, and InvalidInputError when the input fails the
    power-sum equations or is zero.
    """
    if not diagram.is_valid():
        raise InvalidInputError("diagram fails the power-sum equations")
    if not diagram:
        raise InvalidInputError("cannot decompose the zero diagram")

    remainder = diagram
    terms: list[tuple[Fraction, Degrees]] = []

    def jam():
        return NotInConeError(PureDecomposition(tuple(terms)), remainder)

    while remainder:
        try:
            shifts = remainder.min_shifts()
        except MissingColumnError:
            raise jam() from None
        if not strictly_increasing(shifts):
            raise jam()
        pi = pure_diagram(shifts)
        coefficient = min(
            remainder[i, shifts[i]] / pi[i, shifts[i]] for i in range(len(shifts))
        )
        if coefficient <= 0:
            raise jam()
        terms.append((coefficient, shifts))
        remainder = remainder - coefficient * pi
    return PureDecomposition(tuple(terms))


class BoundsVerdict(Enum):
    STRICTLY_INSIDE = "strictly-inside"
    EQUAL_LOWER = "equal-lower"
    EQUAL_UPPER = "equal-upper"
    EQUAL_BOTH = "equal-both"
    VIOLATED_LOWER = "violated-lower"
    VIOLATED_UPPER = "violated-upper"


@dataclass(frozen=True)
class BoundsReport:
    """Multiplicity of a normalized diagram against its shift products.

    The products are translated per side so the column-0 shift is zero.
    ``extended`` flags inputs whose column 0 spans several degrees, where
    the two sides are translated by different amounts.
    """

    lower: Fraction
    upper: Fraction
    scaled_multiplicity: Fraction
    verdict: BoundsVerdict
    is_pure: bool
    extended: bool


def check_bounds(diagram: BettiDiagram) -> BoundsReport:
    """Compare p! * e(D) / beta_0 with the minimal and maximal shift products."""
    if not diagram.is_valid():
        raise InvalidInputError("diagram fails the power-sum equations")
    low = diagram.min_shifts()
    high = diagram.max_shifts()
    if not strictly_increasing(low) or not strictly_increasing(high):
        raise ShiftsNotIncreasingError(
            f"shifts min={low} max={high} are not strictly increasing"
        )
    p = diagram.codim
    scaled = factorial(p) * diagram.multiplicity() / diagram.beta_zero()
    lower = Fraction(prod(low[i] - low[0] for i in range(1, p + 1)))
    upper = Fraction(prod(high[i] - high[0] for i in range(1, p + 1)))

    if scaled < lower:
        verdict = BoundsVerdict.VIOLATED_LOWER
    elif scaled > upper:
        verdict = BoundsVerdict.VIOLATED_UPPER
    elif scaled == lower == upper:
        verdict = BoundsVerdict.EQUAL_BOTH
    elif scaled == lower:
        verdict = BoundsVerdict.EQUAL_LOWER
    elif scaled == upper:
        verdict = BoundsVerdict.EQUAL_UPPER
    else:
        verdict = BoundsVerdict.STRICTLY_INSIDE

    return BoundsReport(
        lower=lower,
        upper=upper,
        scaled_multiplicity=scaled,
        verdict=verdict,
        is_pure=low == high,
        extended=low[0] != high[0],
    )


def is_quasipure(diagram: BettiDiagram) -> bool:
    """Each column's maximal shift at most the next column's minimal shift."""
    low = diagram.min_shifts()
    high = diagram.max_shifts()
    return all(high[i - 1] <= low[i] for i in range(1, diagram.codim + 1))


def is_strictly_quasipure(diagram: BettiDiagram) -> bool:
    low = diagram.min_shifts()
    high = diagram.max_shifts()
    return all(high[i - 1] < low[i] for i in range(1, diagram.codim + 1))
