"""Faces of the chain complex on the pure-diagram poset.

Maximal chains are bases of the diagram space, so every face (a chain)
spans a simplex there. A codimension-one face, obtained by dropping one
element from a maximal chain, lies on the boundary exactly when the
dropped element is the only one extending the remaining chain; the three
syntactic tests below decide this from the dropped element's neighbors.
For an endpoint or a one-position gap the face also pins down a halfspace
given by a single diagram entry being non-negative; the staircase case
carries no entry-position halfspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .diagram import BettiDiagram, ShiftBounds
from .errors import CodimMismatchError, InvalidInputError, NotInSpanError
from .pure import (
    Comparison,
    Degrees,
    compare,
    enumerate_poset,
    maximal_chains,
    pure_diagram,
    space_dimension,
)


@dataclass(frozen=True)
class Face:
    """A chain of degree sequences, strictly increasing componentwise."""

    chain: tuple[Degrees, ...]

    def __post_init__(self):
        fixed = tuple(tuple(int(x) for x in d) for d in self.chain)
        object.__setattr__(self, "chain", fixed)
        if not fixed:
            raise InvalidInputError("a face needs at least one element")
        for a, b in zip(fixed, fixed[1:]):
            if compare(a, b) is not Comparison.LESS:
                raise InvalidInputError(f"{a} and {b} do not form a chain")

    def __len__(self):
        return len(self.chain)


def facets(bounds: ShiftBounds) -> list[Face]:
    """The maximal chains of the poset between the bounds, as faces."""
    view = enumerate_poset(bounds)
    return [Face(chain) for chain in maximal_chains(view)]


class BoundaryCase(Enum):
    ENDPOINT_REMOVED = "endpoint-removed"
    ONE_POSITION_GAP = "one-position-gap"
    ADJACENT_STAIRCASE = "adjacent-staircase"
    INTERIOR = "interior"


@dataclass(frozen=True)
class BoundaryVerdict:
    on_boundary: bool
    case: BoundaryCase
    halfspace: tuple[int, int] | None


def _step_position(lower: Degrees, upper: Degrees) -> int:
    for k, (a, b) in enumerate(zip(lower, upper)):
        if a != b:
            return k
    raise InvalidInputError("consecutive chain elements are equal")


def classify_boundary(
    face: Face, removed_index: int, bounds: ShiftBounds
) -> BoundaryVerdict:
    """Decide whether dropping one element of a maximal chain hits the boundary.

    Boundary cases: a) an endpoint was removed; b) the neighbors of the
    removed element differ in a single position; c) they differ in two
    adjacent positions k, k+1 whose values were already consecutive. For
    a) and b) the halfspace is the (column, degree) entry unique to the
    removed element within the chain.
    """
    chain = face.chain
    q = len(chain)
    if q != space_dimension(bounds) or chain[0] != bounds.low or chain[-1] != bounds.high:
        raise InvalidInputError("face must be a maximal chain of the bounds")
    if not 0 <= removed_index < q:
        raise IndexError(f"removed index {removed_index} outside 0..{q - 1}")

    removed = chain[removed_index]
    if q == 1:
        return BoundaryVerdict(True, BoundaryCase.ENDPOINT_REMOVED, (0, removed[0]))
    if removed_index == 0:
        k = _step_position(chain[0], chain[1])
        return BoundaryVerdict(True, BoundaryCase.ENDPOINT_REMOVED, (k, removed[k]))
    if removed_index == q - 1:
        k = _step_position(chain[-2], chain[-1])
        return BoundaryVerdict(True, BoundaryCase.ENDPOINT_REMOVED, (k, removed[k]))

    below = chain[removed_index - 1]
    above = chain[removed_index + 1]
    diff = [k for k in range(len(below)) if below[k] != above[k]]
    if len(diff) == 1:
        k = diff[0]
        return BoundaryVerdict(True, BoundaryCase.ONE_POSITION_GAP, (k, removed[k]))
    k, l = diff
    if l == k + 1 and below[k + 1] == below[k] + 1:
        return BoundaryVerdict(True, BoundaryCase.ADJACENT_STAIRCASE, None)
    return BoundaryVerdict(False, BoundaryCase.INTERIOR, None)


def _solve_exact(columns, target):
    """Solve sum_m x_m * columns[m] == target over the rationals.

    Vectors are diagrams; rows are indexed by the union of supports.
    Returns (solution, residual) where residual is the exact leftover
    diagram after subtracting the candidate combination.
    """
    keys = sorted({k for col in columns for k in col.support()} | set(target.support()))
    rows = [[col[key] for col in columns] + [target[key]] for key in keys]
    m = len(columns)
    pivot_row = 0
    pivot_cols = []
    for col in range(m):
        pick = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col]), None
        )
        if pick is None:
            continue
        rows[pivot_row], rows[pick] = rows[pick], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
    solution = [Fraction(0)] * m
    for row, col in enumerate(pivot_cols):
        solution[col] = rows[row][m]
    combo = BettiDiagram.zero(target.codim)
    for x, col in zip(solution, columns):
        combo = combo + x * col
    return solution, target - combo


def chain_coordinates(diagram: BettiDiagram, face: Face) -> list[Fraction]:
    """Exact coordinates of a diagram in the basis given by a maximal chain.

    Raises NotInSpanError carrying the non-zero residual when the diagram
    lies outside the span. The diagram sits in the closed simplex of the
    chain exactly when every coordinate is non-negative.
    """
    columns = [pure_diagram(d) for d in face.chain]
    if any(col.codim != diagram.codim for col in columns):
        raise CodimMismatchError("diagram and chain have different codimension")
    solution, residual = _solve_exact(columns, diagram)
    if residual:
        raise NotInSpanError(residual)
    return solution
