"""Codimension-changing maps between diagram spaces.

``phi`` collapses a column whose entries sit at a single degree (the
pivot): entries below the column keep their position, entries above shift
down one column, and everything is rescaled by the signed gap to the
pivot. On the alternating polynomials this is exactly

    S_phi(D)(t) = pivot * S_D(t) - t * dS_D/dt,

so validity drops by exactly one codimension. ``phi_inverse`` undoes the
map, recovering the collapsed column entry from the m = 0 power-sum
equation, which is the unique consistent completion.

``step_up_combine`` pairs two pure diagrams of equal length into one
diagram of codimension one higher, matching multiplicities so the result
stays valid; ``step_up_expand`` produces its non-negative expansion into
pure diagrams by recursing through ``phi`` on the last column.
"""

from __future__ import annotations

from fractions import Fraction

from .decompose import PureDecomposition
from .diagram import BettiDiagram
from .errors import (
    ColumnNotConcentratedError,
    DegreeCollisionError,
    InvalidInputError,
    NotDominatedError,
)
from .pure import Degrees, degree_sequence, pure_diagram, pure_multiplicity


def _column_degrees(diagram: BettiDiagram, k: int) -> set[int]:
    return {j for (i, j) in diagram.support() if i == k}


def phi(diagram: BettiDiagram, k: int, pivot: int | None = None) -> BettiDiagram:
    """Collapse column k (concentrated at one degree) into codim - 1.

    The pivot is read off the column; it must be supplied only when the
    column is empty and the diagram is non-zero.
    """
    p = diagram.codim
    if p < 1:
        raise InvalidInputError("cannot reduce a codimension-0 diagram")
    if not 0 <= k <= p:
        raise InvalidInputError(f"column {k} outside 0..{p}")
    degrees = _column_degrees(diagram, k)
    if len(degrees) > 1:
        raise ColumnNotConcentratedError(
            f"column {k} has entries at degrees {sorted(degrees)}"
        )
    if degrees:
        found = degrees.pop()
        if pivot is not None and pivot != found:
            raise ColumnNotConcentratedError(
                f"column {k} sits at degree {found}, not {pivot}"
            )
        pivot = found
    elif pivot is None:
        if diagram:
            raise ColumnNotConcentratedError(
                f"column {k} is empty; pivot cannot be inferred"
            )
        return BettiDiagram.zero(p - 1)

    entries: dict[tuple[int, int], Fraction] = {}
    for (i, j), v in diagram.items():
        if i == k:
            continue
        if i < k:
            entries[i, j] = (pivot - j) * v
        else:
            entries[i - 1, j] = (j - pivot) * v
    return BettiDiagram(p - 1, entries)


def phi_inverse(diagram: BettiDiagram, k: int, pivot: int) -> BettiDiagram:
    """Insert a column at position k concentrated at the pivot degree.

    Entries are divided by the signed gap to the pivot, and the single
    column-k entry is forced by the m = 0 alternating-sum equation.
    """
    q = diagram.codim
    if not 0 <= k <= q + 1:
        raise InvalidInputError(f"column {k} outside 0..{q + 1}")
    if pivot in {j for (_, j) in diagram.support()}:
        raise DegreeCollisionError(f"target already has entries at degree {pivot}")

    entries: dict[tuple[int, int], Fraction] = {}
    alternating = Fraction(0)
    for (i, j), v in diagram.items():
        if i < k:
            target, value = (i, j), v / (pivot - j)
        else:
            target, value = (i + 1, j), v / (j - pivot)
        entries[target] = value
        alternating += -value if target[0] % 2 else value
    forced = -alternating if k % 2 == 0 else alternating
    entries[k, pivot] = forced
    return BettiDiagram(q + 1, entries)


def step_up_combine(d, d_prime) -> BettiDiagram:
    """Stack pi(d_prime) one column to the right of pi(d), weighted so the
    two halves share one multiplicity; the result is valid of codim + 1.
    """
    d = degree_sequence(d)
    d_prime = degree_sequence(d_prime)
    if len(d) != len(d_prime):
        raise NotDominatedError("sequences must have equal length")
    if any(a >= b for a, b in zip(d, d_prime)):
        raise NotDominatedError(f"{d_prime} must dominate {d} strictly")
    ratio = pure_multiplicity(d) / pure_multiplicity(d_prime)
    entries: dict[tuple[int, int], Fraction] = {}
    for (i, j), v in pure_diagram(d).items():
        entries[i, j] = entries.get((i, j), Fraction(0)) + v
    for (i, j), v in pure_diagram(d_prime).items():
        entries[i + 1, j] = entries.get((i + 1, j), Fraction(0)) + ratio * v
    return BettiDiagram(len(d), entries)


def _expand_from_zero(d: Degrees, d_prime: Degrees) -> dict[Degrees, Fraction]:
    # Requires d[0] == 0 so the multiplicity ratio of the truncations is
    # d_p / p; single-length sequences combine to exactly one pure diagram.
    if len(d) == 1:
        return {(d[0], d_prime[0]): Fraction(1)}
    sub = _expand_from_zero(d[:-1], d_prime[:-1])
    last, last_prime = d[-1], d_prime[-1]
    out: dict[Degrees, Fraction] = {}
    for kind, c in sub.items():
        grown = kind + (last_prime,)
        out[grown] = out.get(grown, Fraction(0)) + c * Fraction(last, last_prime)
    top = d + (last_prime,)
    out[top] = out.get(top, Fraction(0)) + Fraction(last_prime - last, last_prime)
    return {kind: c for kind, c in out.items() if c}


def step_up_expand(d, d_prime) -> PureDecomposition:
    """Non-negative expansion of step_up_combine(d, d_prime) into pure diagrams.

    Degrees are translated so d_0 = 0 before recursing and translated back
    afterwards (pure diagram entries depend only on degree differences).
    Terms come out sorted lexicographically with equal types merged; they
    need not form a chain in general.
    """
    d = degree_sequence(d)
    d_prime = degree_sequence(d_prime)
    if len(d) != len(d_prime):
        raise NotDominatedError("sequences must have equal length")
    if any(a >= b for a, b in zip(d, d_prime)):
        raise NotDominatedError(f"{d_prime} must dominate {d} strictly")
    base = d[0]
    shifted = _expand_from_zero(
        tuple(x - base for x in d), tuple(x - base for x in d_prime)
    )
    terms = sorted(
        (tuple(x + base for x in kind), c) for kind, c in shifted.items()
    )
    return PureDecomposition(tuple((c, kind) for kind, c in terms))
