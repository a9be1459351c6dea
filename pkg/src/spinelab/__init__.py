"""Minimal spines on flat tori.

Closed-form classification of the trivalent geodesic spines of every flat
torus (counts, lengths, shortest-spine systole), an independent brute-force
oracle built on convex optimization, and the extremal-surface quantities of
hyperbolic surfaces of genus at least two.
"""

from .errors import (
    CapTooSmallError,
    DegenerateMinimumError,
    InvalidGenusError,
    NonPositiveSideError,
    NotHyperbolicError,
    SpinelabError,
)
from .halfplane import (
    HEXAGONAL_POINT,
    SQUARE_POINT,
    Reduction,
    TorusKind,
    UnimodularMatrix,
    classify_torus,
    moebius_apply,
    reduce_to_fundamental_domain,
    same_oriented_torus,
    same_unoriented_torus,
)
from .hexagon import (
    HexTriple,
    RegionKind,
    RegionMembership,
    disc_model_transform,
    edge_lengths_normalized,
    fermat_tripod,
    membership_oriented,
    membership_unoriented,
    normalize_oriented,
    normalize_unoriented,
    tilde_p,
)
from .hyperbolic import (
    HPoint,
    RegularPolygonData,
    convex_combination,
    convexity_gap,
    dist,
    extremal_spine_systole,
    geodesic_point,
    regular_polygon,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import (
    OracleClass,
    OracleReport,
    ThetaEmbedding,
    compare_with_analytic,
    enumerate_minimal_spines_oracle,
    is_spine_type,
    lattice_isometries,
    relax,
    stationarity_residual,
)
from .spines import (
    FiberResult,
    SpineClass,
    count_oriented,
    count_unoriented,
    fiber_oriented,
    fiber_unoriented,
    length_L,
    length_spectrum,
    minimal_spines,
    spine_systole,
    systole_field,
)

__version__ = "0.1.0"

__all__ = [
    "CapTooSmallError",
    "DegenerateMinimumError",
    "FiberResult",
    "HEXAGONAL_POINT",
    "HPoint",
    "HexTriple",
    "InvalidGenusError",
    "KERNEL_BACKEND",
    "NonPositiveSideError",
    "NotHyperbolicError",
    "OracleClass",
    "OracleReport",
    "Reduction",
    "RegionKind",
    "RegionMembership",
    "RegularPolygonData",
    "SQUARE_POINT",
    "SpineClass",
    "SpinelabError",
    "ThetaEmbedding",
    "TorusKind",
    "UnimodularMatrix",
    "classify_torus",
    "compare_with_analytic",
    "convex_combination",
    "convexity_gap",
    "count_oriented",
    "count_unoriented",
    "disc_model_transform",
    "dist",
    "edge_lengths_normalized",
    "enumerate_minimal_spines_oracle",
    "extremal_spine_systole",
    "fermat_tripod",
    "fiber_oriented",
    "fiber_unoriented",
    "geodesic_point",
    "is_spine_type",
    "lattice_isometries",
    "length_L",
    "length_spectrum",
    "membership_oriented",
    "membership_unoriented",
    "minimal_spines",
    "moebius_apply",
    "normalize_oriented",
    "normalize_unoriented",
    "reduce_to_fundamental_domain",
    "regular_polygon",
    "relax",
    "same_oriented_torus",
    "same_unoriented_torus",
    "spine_systole",
    "stationarity_residual",
    "systole_field",
    "tilde_p",
]
