"""Betti diagrams: sparse tables of exact rational entries beta_{i,j}.

A diagram of codimension p stores entries keyed by (homological degree i,
internal degree j) with 0 <= i <= p. Entries equal to zero are dropped, so
structural equality is semantic equality. Diagrams are immutable and every
operation returns a new value, which keeps all of this safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    CodimMismatchError,
    LengthMismatchError,
    MissingColumnError,
    NegativeEntryError,
    NotIncreasingError,
    ZeroRowError,
)
from .laurent import Laurent

_ZERO = Fraction(0)


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(value)


class BettiDiagram:
    """Sparse grid of rational Betti numbers with a declared codimension."""

    __slots__ = ("_codim", "_entries")

    def __init__(self, codim: int, entries=()):
        codim = int(codim)
        if codim < 0:
            raise ValueError("codimension must be non-negative")
        items = entries.items() if hasattr(entries, "items") else entries
        data: dict[tuple[int, int], Fraction] = {}
        for key, value in items:
            i, j = int(key[0]), int(key[1])
            if not 0 <= i <= codim:
                raise ValueError(f"homological degree {i} outside 0..{codim}")
            v = _coerce(value)
            data[i, j] = data.get((i, j), _ZERO) + v
        self._codim = codim
        self._entries = {k: v for k, v in data.items() if v}

    @classmethod
    def zero(cls, codim: int) -> "BettiDiagram":
        return cls(codim)

    @property
    def codim(self) -> int:
        return self._codim

    def __getitem__(self, key) -> Fraction:
        return self._entries.get((key[0], key[1]), _ZERO)

    def items(self):
        """Entries as ((i, j), value) pairs sorted by position."""
        return sorted(self._entries.items())

    def support(self):
        return sorted(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._codim == other._codim and self._entries == other._entries

    def __hash__(self):
        return hash((self._codim, frozenset(self._entries.items())))

    def __repr__(self):
        return f"BettiDiagram({self._codim}, {dict(self.items())!r})"

    # ------------------------------------------------------------------
    # linear structure

    def __add__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        if self._codim != other._codim:
            raise CodimMismatchError(
                f"codimension mismatch: {self._codim} != {other._codim}"
            )
        merged = dict(self._entries)
        for key, value in other._entries.items():
            merged[key] = merged.get(key, _ZERO) + value
        return BettiDiagram(self._codim, merged)

    def __sub__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BettiDiagram(self._codim, ((k, -v) for k, v in self._entries.items()))

    def __mul__(self, scalar):
        c = _coerce(scalar)
        return BettiDiagram(self._codim, ((k, c * v) for k, v in self._entries.items()))

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    # validity against the alternating power-sum equations

    def violations(self):
        """Residuals of the failing equations sum (-1)^i j^m beta_{i,j} = 0.

        Returns a list of (m, residual) for each m in 0..codim-1 whose sum
        is non-zero; an empty list means the diagram is valid.
        """
        out = []
        for m in range(self._codim):
            total = _ZERO
            for (i, j), v in self._entries.items():
                term = v * j**m
                total += -term if i % 2 else term
            if total:
                out.append((m, total))
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def s_polynomial(self) -> Laurent:
        """The alternating generating polynomial sum (-1)^i beta_{i,j} t^j."""
        return Laurent(
            (j, -v if i % 2 else v) for (i, j), v in self._entries.items()
        )

    def h_vector(self) -> Laurent:
        """Exact quotient of the alternating polynomial by (1-t)^codim."""
        return self.s_polynomial().divide_one_minus_t(self._codim)

    def multiplicity(self) -> Fraction:
        """h-vector evaluated at 1."""
        return self.h_vector()(1)

    # ------------------------------------------------------------------
    # shifts

    def _shifts(self, picker):
        cols: dict[int, list[int]] = {}
        for i, j in self._entries:
            cols.setdefault(i, []).append(j)
        out = []
        for i in range(self._codim + 1):
            if i not in cols:
                raise MissingColumnError(i)
            out.append(picker(cols[i]))
        return tuple(out)

    def min_shifts(self) -> tuple[int, ...]:
        """Per-column smallest degree with a non-zero entry.

        Not guaranteed strictly increasing; callers check.
        """
        return self._shifts(min)

    def max_shifts(self) -> tuple[int, ...]:
        """Per-column largest degree with a non-zero entry."""
        return self._shifts(max)

    # ------------------------------------------------------------------
    # normalization and cancellation

    def beta_zero(self) -> Fraction:
        """Sum of the generator row, beta_0 = sum_j beta_{0,j}."""
        return sum(
            (v for (i, _), v in self._entries.items() if i == 0), _ZERO
        )

    def normalize(self) -> "BettiDiagram":
        """Divide by beta_0 so the generator row sums to one."""
        b0 = self.beta_zero()
        if not b0:
            raise ZeroRowError("beta_0 is zero; cannot normalize")
        return self * (1 / b0)

    def integer_rescale(self):
        """Smallest positive integer s with s*D integral, plus s*D.

        Returns (s*D, s).
        """
        s = lcm(1, *(v.denominator for v in self._entries.values()))
        return self * s, s

    def apply_cancellation(self, k: int, l: int, b) -> "BettiDiagram":
        """Subtract b from the entries at (k, l) and (k+1, l).

        Leaves the alternating polynomial unchanged. Requires b >= 0 and
        both entries at least b.
        """
        b = _coerce(b)
        if b < 0:
            raise NegativeEntryError("cancellation amount must be non-negative")
        if b == 0:
            return self
        if self[k, l] < b or self[k + 1, l] < b:
            raise NegativeEntryError(
                f"cancellation of {b} at ({k},{l}) would leave a negative entry"
            )
        return self + BettiDiagram(self._codim, {(k, l): -b, (k + 1, l): -b})


def strictly_increasing(values) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class ShiftBounds:
    """A componentwise window [low, high] of strictly increasing shifts."""

    low: tuple[int, ...]
    high: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(int(x) for x in self.low))
        object.__setattr__(self, "high", tuple(int(x) for x in self.high))
        if len(self.low) != len(self.high):
            raise LengthMismatchError("bounds must have equal length")
        if not self.low:
            raise NotIncreasingError("bounds must be non-empty")
        if not strictly_increasing(self.low) or not strictly_increasing(self.high):
            raise NotIncreasingError("bounds must be strictly increasing")
        if any(a > b for a, b in zip(self.low, self.high)):
            raise ValueError("low bound exceeds high bound")

    @property
    def codim(self) -> int:
        return len(self.low) - 1
