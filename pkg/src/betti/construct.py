"""Builders for classical families of diagrams.

Covers Koszul complete intersections, powers of the maximal ideal, the
two-variable monomial quotient realizing any codimension-2 pure type
(with a Hilbert-function oracle certifying it at the h-vector level), and
the numerically self-dual codimension-3 resolutions determined by a socle
degree and an odd list of generator degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decompose import PureDecomposition, greedy_decompose
from .diagram import BettiDiagram
from .errors import InvalidInputError, InvalidSocleError, NotContainedError
from .pure import Degrees, degree_sequence, pure_diagram
from .reductions import phi, step_up_expand


def koszul_diagram(degrees) -> BettiDiagram:
    """Betti diagram of a complete intersection of the given form degrees.

    Built one form at a time: adjoining a form of degree d adds a copy of
    the current diagram shifted by (1, d). Entry (i, j) counts the
    i-element subsets of the degrees summing to j; the multiplicity is the
    product of the degrees.
    """
    degrees = [int(x) for x in degrees]
    if not degrees:
        raise InvalidInputError("need at least one form degree")
    if any(x <= 0 for x in degrees):
        raise InvalidInputError("form degrees must be positive")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for d in degrees:
        grown = dict(entries)
        for (i, j), v in entries.items():
            key = (i + 1, j + d)
            grown[key] = grown.get(key, 0) + v
        entries = grown
    return BettiDiagram(len(degrees), entries)


def power_ideal_diagram(g: int, j: int, p: int) -> BettiDiagram:
    """Diagram of a power of the maximal ideal placed in generator degree g.

    Equals the pure diagram of type (g, j+1, j+2, ..., j+p); needs j >= g.
    """
    if j < g:
        raise InvalidInputError(f"need j >= g, got j={j} < g={g}")
    if p < 1:
        raise InvalidInputError("codimension must be at least 1")
    return pure_diagram((g,) + tuple(j + i for i in range(1, p + 1)))


Monomial = tuple[int, int]


@dataclass(frozen=True)
class MonomialModuleSpec:
    """Two-variable monomial data for the quotient module I/J.

    ``gens_i`` and ``gens_j`` are (x-exponent, y-exponent) generator lists,
    ``twist`` the degree shift applied to the quotient, and ``claimed`` the
    (integer scale, pure type) the module is asserted to realize.
    """

    gens_i: tuple[Monomial, ...]
    gens_j: tuple[Monomial, ...]
    twist: int
    claimed_scale: int
    claimed_type: Degrees


def codim2_pure_construction(d) -> MonomialModuleSpec:
    """Monomial quotient whose diagram is (d_2 - d_1) times pi(d), length-3 d.

    With s = d_1 - d_0 and w = d_2 - d_1 the generator exponents are
    a = s*(w-1) for the numerator staircase and b = s*w for the denominator
    staircase; the quotient is twisted by a - d_0. For w = 1 the numerator
    ideal degenerates to the whole ring, which is accepted.
    """
    d = degree_sequence(d)
    if len(d) != 3:
        raise InvalidInputError("construction needs a length-3 degree sequence")
    s = d[1] - d[0]
    w = d[2] - d[1]
    a = s * (w - 1)
    b = s * w
    gens_i = tuple((a - i * s, i * s) for i in range(w))
    gens_j = tuple((b - i * w, i * w) for i in range(s + 1))
    return MonomialModuleSpec(
        gens_i=gens_i,
        gens_j=gens_j,
        twist=a - d[0],
        claimed_scale=w,
        claimed_type=d,
    )


def _in_ideal(u: int, v: int, gens) -> bool:
    return any(u >= a and v >= b for a, b in gens)


def hilbert_function(spec: MonomialModuleSpec, low: int, high: int) -> list[int]:
    """Count monomials of I not in J, degree by degree, after the twist.

    Entry t of the result counts monomials x^u y^v with u + v = t + twist
    lying in the numerator ideal but not the denominator ideal. Requires
    J contained in I.
    """
    for gen in spec.gens_j:
        if not _in_ideal(gen[0], gen[1], spec.gens_i):
            raise NotContainedError(f"generator x^{gen[0]} y^{gen[1]} of J is not in I")
    counts = []
    for t in range(low, high + 1):
        total = t + spec.twist
        n = 0
        for u in range(max(total, 0) + 1):
            v = total - u
            if v < 0:
                continue
            if _in_ideal(u, v, spec.gens_i) and not _in_ideal(u, v, spec.gens_j):
                n += 1
        counts.append(n)
    return counts


@dataclass(frozen=True)
class GorensteinData:
    """Socle degree f and sorted odd-length generator degrees a_1..a_{2k+1}.

    Validity needs k >= 1, positive degrees summing to k*f, and the gap
    condition (f - 2a_i) + (f - 2a_{2k+3-i}) > 0 for i = 2..k+1, which
    forces a_i < f - a_i on the first k+1 degrees.
    """

    socle_degree: int
    gen_degrees: tuple[int, ...]

    def __post_init__(self):
        f = int(self.socle_degree)
        degrees = tuple(sorted(int(x) for x in self.gen_degrees))
        object.__setattr__(self, "socle_degree", f)
        object.__setattr__(self, "gen_degrees", degrees)
        n = len(degrees)
        if n < 3 or n % 2 == 0:
            raise InvalidSocleError("need an odd number of generators, at least 3")
        if any(x <= 0 for x in degrees):
            raise InvalidSocleError("generator degrees must be positive")
        k = (n - 1) // 2
        if sum(degrees) != k * f:
            raise InvalidSocleError(
                f"generator degrees sum to {sum(degrees)}, expected k*f = {k * f}"
            )
        r = [f - 2 * a for a in degrees]
        for i in range(2, k + 2):
            if r[i - 1] + r[2 * k + 3 - i - 1] <= 0:
                raise InvalidSocleError(
                    f"gap condition fails at i={i}: degrees {degrees[i - 1]} and "
                    f"{degrees[2 * k + 2 - i]} overshoot the socle degree {f}"
                )

    @property
    def k(self) -> int:
        return (len(self.gen_degrees) - 1) // 2


def gorenstein3_diagram(data: GorensteinData) -> BettiDiagram:
    """Numerically self-dual codim-3 diagram with the given degrees.

    One generator in degree 0, first syzygies at the a_i, second syzygies
    at the dual degrees f - a_i, and the socle at degree f.
    """
    f = data.socle_degree
    entries: dict[tuple[int, int], int] = {(0, 0): 1, (3, f): 1}
    for a in data.gen_degrees:
        entries[1, a] = entries.get((1, a), 0) + 1
        entries[2, f - a] = entries.get((2, f - a), 0) + 1
    return BettiDiagram(3, entries)


def _codim2_part(data: GorensteinData) -> BettiDiagram:
    f = data.socle_degree
    k = data.k
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for a in data.gen_degrees[: k + 1]:
        entries[1, a] = entries.get((1, a), 0) + 1
    for a in data.gen_degrees[k + 1 :]:
        entries[2, f - a] = entries.get((2, f - a), 0) + 1
    return BettiDiagram(2, entries)


def gorenstein3_pairing(data: GorensteinData) -> PureDecomposition:
    """Socle-dual pairing certificate for gorenstein3_diagram(data).

    The first k+1 generators and the duals of the last k form a valid
    codimension-2 diagram; peel that greedily, then pair each term
    (0, a, c) with its socle-dual type (f - c, f - a, f) and expand the
    pair one codimension up. The aggregate recombines exactly with
    positive coefficients, which certifies the diagram is a non-negative
    combination of pure diagrams, but its terms can stray off a chain
    when the generator degrees are mixed.
    """
    f = data.socle_degree
    part = _codim2_part(data)
    aggregated: dict[Degrees, Fraction] = {}
    for coefficient, kind in greedy_decompose(part):
        partner = (f - kind[2], f - kind[1], f)
        for c, grown in step_up_expand(kind, partner):
            aggregated[grown] = aggregated.get(grown, Fraction(0)) + coefficient * c
    terms = sorted((kind, c) for kind, c in aggregated.items() if c)
    return PureDecomposition(tuple((c, kind) for kind, c in terms))


def gorenstein3_decompose(data: GorensteinData) -> PureDecomposition:
    """Chain expansion of gorenstein3_diagram(data) into pure diagrams.

    Starts from the socle-dual pairing certificate. When that aggregate
    is already a chain it is returned as is; otherwise the socle column
    (concentrated at degree f) is collapsed with phi, the codimension-2
    image is peeled greedily (its chain expansion exists and greedy
    recovers chain expansions exactly), and the chain is pulled back by
    appending the socle degree to every type.
    """
    pairing = gorenstein3_pairing(data)
    if pairing.is_chain():
        return pairing
    f = data.socle_degree
    diagram = gorenstein3_diagram(data)
    image = phi(diagram, 3)
    terms = []
    for c, kind in greedy_decompose(image):
        terms.append((c / (f - kind[0]), kind + (f,)))
    return PureDecomposition(tuple(terms))
