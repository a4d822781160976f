"""Pure diagrams and the poset of strictly increasing degree sequences.

A degree sequence d = (d_0, ..., d_p) determines the unique (up to scale)
valid diagram supported at one degree per column. With the generator entry
normalized to 1, the remaining entries are

    pi(d)_{i, d_i} = prod_{k != 0, i} (d_k - d_0) / (d_k - d_i)   for i >= 1,

which is always positive. Sequences are ordered componentwise; the poset
between two bounds is graded, with covers adding 1 in a single position.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .diagram import BettiDiagram, ShiftBounds, strictly_increasing
from .errors import LengthMismatchError, NotIncreasingError, PosetTooLargeError

Degrees = tuple[int, ...]

POSET_ELEMENT_CAP = 1_000_000


def degree_sequence(values) -> Degrees:
    """Coerce to a strictly increasing integer tuple or raise."""
    d = tuple(int(x) for x in values)
    if not d:
        raise NotIncreasingError("degree sequence must be non-empty")
    if not strictly_increasing(d):
        raise NotIncreasingError(f"degree sequence {d} is not strictly increasing")
    return d


def parse_degrees(text: str) -> Degrees:
    """Parse the comma-separated form, e.g. '0,2,5'."""
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise NotIncreasingError(f"cannot parse degree sequence {text!r}") from exc
    return degree_sequence(values)


def format_degrees(d) -> str:
    return ",".join(str(x) for x in d)


def pure_diagram(d) -> BettiDiagram:
    """The pure diagram of type d, normalized so the generator entry is 1."""
    d = degree_sequence(d)
    p = len(d) - 1
    entries: dict[tuple[int, int], Fraction] = {(0, d[0]): Fraction(1)}
    for i in range(1, p + 1):
        value = Fraction(1)
        for k in range(1, p + 1):
            if k == i:
                continue
            value *= Fraction(d[k] - d[0], d[k] - d[i])
        if i % 2 == 0:
            value = -value
        entries[i, d[i]] = value
    return BettiDiagram(p, entries)


def pure_multiplicity(d) -> Fraction:
    """Multiplicity of the pure diagram: prod (d_i - d_0) / p!."""
    d = degree_sequence(d)
    p = len(d) - 1
    product = 1
    for i in range(1, p + 1):
        product *= d[i] - d[0]
    return Fraction(product, factorial(p))


class Comparison(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare(d, e) -> Comparison:
    """Componentwise order verdict for two equal-length sequences."""
    d = tuple(d)
    e = tuple(e)
    if len(d) != len(e):
        raise LengthMismatchError(f"lengths differ: {len(d)} != {len(e)}")
    below = any(a < b for a, b in zip(d, e))
    above = any(a > b for a, b in zip(d, e))
    if below and above:
        return Comparison.INCOMPARABLE
    if below:
        return Comparison.LESS
    if above:
        return Comparison.GREATER
    return Comparison.EQUAL


@dataclass(frozen=True)
class PosetView:
    """All strictly increasing sequences between two bounds, lex ordered."""

    bounds: ShiftBounds
    elements: tuple[Degrees, ...]


def enumerate_poset(bounds: ShiftBounds, cap: int = POSET_ELEMENT_CAP) -> PosetView:
    """Materialize the poset of sequences d with low <= d <= high.

    Deterministic lexicographic order. Raises PosetTooLargeError beyond
    ``cap`` elements; this is a desk-scale tool and does not stream.
    """
    low, high = bounds.low, bounds.high
    n = len(low)
    out: list[Degrees] = []

    def descend(prefix: list[int], i: int):
        if i == n:
            if len(out) >= cap:
                raise PosetTooLargeError(f"poset exceeds {cap} elements")
            out.append(tuple(prefix))
            return
        start = max(low[i], prefix[-1] + 1) if prefix else low[i]
        for v in range(start, high[i] + 1):
            prefix.append(v)
            descend(prefix, i + 1)
            prefix.pop()

    descend([], 0)
    return PosetView(bounds=bounds, elements=tuple(out))


def space_dimension(bounds: ShiftBounds) -> int:
    """Dimension of the diagram space over the bounds: 1 + sum of widths."""
    return 1 + sum(h - l for l, h in zip(bounds.low, bounds.high))


def _cover_successors(d: Degrees, high: Degrees) -> list[Degrees]:
    out = []
    for k in range(len(d)):
        v = d[k] + 1
        if v > high[k]:
            continue
        if k + 1 < len(d) and v >= d[k + 1]:
            continue
        out.append(d[:k] + (v,) + d[k + 1 :])
    out.sort()
    return out


def maximal_chains(view: PosetView) -> list[tuple[Degrees, ...]]:
    """All maximal chains from the bottom to the top of the poset.

    Every consecutive pair differs by +1 in exactly one position, so every
    chain has length space_dimension(bounds). Chains come out sorted
    lexicographically as tuples of sequences.
    """
    low, high = view.bounds.low, view.bounds.high
    chains: list[tuple[Degrees, ...]] = []

    def walk(chain: list[Degrees]):
        succ = _cover_successors(chain[-1], high)
        if not succ:
            assert chain[-1] == high
            chains.append(tuple(chain))
            return
        for nxt in succ:
            chain.append(nxt)
            walk(chain)
            chain.pop()

    walk([low])
    return chains
