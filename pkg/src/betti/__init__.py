"""Exact-rational tools for graded Betti diagrams.

Construct and validate diagrams, expand them into non-negative chain
combinations of pure diagrams, move between codimensions, and build the
classical families (complete intersections, maximal-ideal powers,
two-variable pure modules, self-dual codimension-3 resolutions).
"""

from .construct import (
    GorensteinData,
    MonomialModuleSpec,
    codim2_pure_construction,
    gorenstein3_decompose,
    gorenstein3_diagram,
    gorenstein3_pairing,
    hilbert_function,
    koszul_diagram,
    power_ideal_diagram,
)
from .decompose import (
    BoundsReport,
    BoundsVerdict,
    PureDecomposition,
    check_bounds,
    greedy_decompose,
    is_quasipure,
    is_strictly_quasipure,
    recombine,
)
from .diagram import BettiDiagram, ShiftBounds, strictly_increasing
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .laurent import Laurent
from .order_complex import (
    BoundaryCase,
    BoundaryVerdict,
    Face,
    chain_coordinates,
    classify_boundary,
    facets,
)
from .pure import (
    Comparison,
    PosetView,
    compare,
    degree_sequence,
    enumerate_poset,
    format_degrees,
    maximal_chains,
    parse_degrees,
    pure_diagram,
    pure_multiplicity,
    space_dimension,
)
from .reductions import phi, phi_inverse, step_up_combine, step_up_expand

__all__ = [
    "BettiDiagram",
    "BoundaryCase",
    "BoundaryVerdict",
    "BoundsReport",
    "BoundsVerdict",
    "Comparison",
    "Face",
    "GorensteinData",
    "Laurent",
    "MonomialModuleSpec",
    "PosetView",
    "PureDecomposition",
    "ShiftBounds",
    "chain_coordinates",
    "check_bounds",
    "classify_boundary",
    "codim2_pure_construction",
    "compare",
    "degree_sequence",
    "enumerate_poset",
    "facets",
    "format_degrees",
    "gorenstein3_decompose",
    "gorenstein3_diagram",
    "gorenstein3_pairing",
    "greedy_decompose",
    "hilbert_function",
    "is_quasipure",
    "is_strictly_quasipure",
    "koszul_diagram",
    "maximal_chains",
    "parse_degrees",
    "phi",
    "phi_inverse",
    "power_ideal_diagram",
    "pure_diagram",
    "pure_multiplicity",
    "recombine",
    "space_dimension",
    "step_up_combine",
    "step_up_expand",
    "strictly_increasing",
] + list(_error_names)
