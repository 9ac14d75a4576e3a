"""Exact counting of perfect matchings of holey Aztec rectangles.

Subpackages: exact rational/integer helpers, sparse integer polynomials,
Schur polynomials, polynomial identities, nonintersecting path families with
the colour-exchange bijection, rectangle graphs with brute-force oracles,
closed-form evaluators, and a command-line front end.
"""

__version__ = "1.0.0"

from .aztec import (
    AztecRectangle,
    GeometryError,
    HoleyAztecGraph,
    OddVertexCountError,
    build_holey_graph,
    central_row,
    count_matchings,
    count_matchings_profile_dp,
    row_below,
)
from .exact import HypothesisError, IntegralityError
from .formulas import dispatch, half_row_count, mrr_count
from .paths import fulmek_forward, fulmek_forward_odd, fulmek_inverse

__all__ = [
    "AztecRectangle",
    "GeometryError",
    "HoleyAztecGraph",
    "HypothesisError",
    "IntegralityError",
    "OddVertexCountError",
    "build_holey_graph",
    "central_row",
    "count_matchings",
    "count_matchings_profile_dp",
    "dispatch",
    "fulmek_forward",
    "fulmek_forward_odd",
    "fulmek_inverse",
    "half_row_count",
    "mrr_count",
    "row_below",
]
