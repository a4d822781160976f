"""Sparse Laurent polynomials with exact rational coefficients.

Zero coefficients are never stored, so two polynomials are equal exactly
when their term maps agree. All arithmetic is over fractions.Fraction;
floats are rejected outright.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonDivisibleError

_ZERO = Fraction(0)


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


class Laurent:
    """Immutable Laurent polynomial  sum_n c_n * t^n  with rational c_n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        data: dict[int, Fraction] = {}
        for n, c in items:
            n = int(n)
            c = _coerce(c)
            data[n] = data.get(n, _ZERO) + c
        self._coeffs = {n: c for n, c in data.items() if c}

    @classmethod
    def term(cls, coefficient, exponent: int = 0) -> "Laurent":
        return cls([(exponent, coefficient)])

    def coefficient(self, n: int) -> Fraction:
        return self._coeffs.get(n, _ZERO)

    __getitem__ = coefficient

    def items(self):
        """Terms as (exponent, coefficient) pairs, ascending exponent."""
        return sorted(self._coeffs.items())

    def support(self):
        return sorted(self._coeffs)

    def valuation(self):
        """Smallest exponent with non-zero coefficient, or None if zero."""
        return min(self._coeffs) if self._coeffs else None

    def degree(self):
        """Largest exponent with non-zero coefficient, or None if zero."""
        return max(self._coeffs) if self._coeffs else None

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self):
        return Laurent((n, -c) for n, c in self._coeffs.items())

    def __add__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        merged = dict(self._coeffs)
        for n, c in other._coeffs.items():
            merged[n] = merged.get(n, _ZERO) + c
        return Laurent(merged)

    def __sub__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Laurent):
            out: dict[int, Fraction] = {}
            for n, c in self._coeffs.items():
                for m, d in other._coeffs.items():
                    out[n + m] = out.get(n + m, _ZERO) + c * d
            return Laurent(out)
        c = _coerce(other)
        return Laurent((n, c * v) for n, v in self._coeffs.items())

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        """Multiply by t^k."""
        return Laurent((n + k, c) for n, c in self._coeffs.items())

    def derivative(self) -> "Laurent":
        """Formal derivative d/dt."""
        return Laurent((n - 1, n * c) for n, c in self._coeffs.items())

    def __call__(self, value) -> Fraction:
        """Evaluate at an exact rational point (non-zero if exponents < 0)."""
        point = _coerce(value)
        return sum((c * point**n for n, c in self._coeffs.items()), _ZERO)

    def divide_one_minus_t(self, power: int = 1) -> "Laurent":
        """Exact quotient by (1 - t)**power; raises NonDivisibleError otherwise.

        Ascending coefficients of the quotient are the running prefix sums
        of the dividend, and the final prefix sum is the remainder.
        """
        coeffs = dict(self._coeffs)
        for _ in range(power):
            if not coeffs:
                continue
            lo = min(coeffs)
            hi = max(coeffs)
            quotient: dict[int, Fraction] = {}
            running = _ZERO
            for n in range(lo, hi):
                running += coeffs.get(n, _ZERO)
                if running:
                    quotient[n] = running
            if running + coeffs.get(hi, _ZERO):
                raise NonDivisibleError("polynomial is not divisible by (1 - t)")
            coeffs = quotient
        return Laurent(coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for n, c in self.items():
            if n == 0:
                body = str(c)
            else:
                mag = "t" if n == 1 else f"t^{n}"
                body = mag if c == 1 else f"-{mag}" if c == -1 else f"{c}*{mag}"
            if parts and not body.startswith("-"):
                parts.append(f"+ {body}")
            elif parts:
                parts.append(f"- {body[1:]}")
            else:
                parts.append(body)
        return " ".join(parts)

    def __repr__(self):
        return f"Laurent({dict(self.items())!r})"
