"""Umbilical leaf families along geodesics and hypercycles in the
hyperbolic half-plane.

The package decides when a prescribed mean-curvature course along a
canonical transversal is realized by a pairwise disjoint family of
umbilic leaves, builds and audits those families, and renders them.
"""

from .errors import (
    DegenerateInputError,
    DomainError,
    GeometryError,
    InvalidRouteError,
    NotALeafError,
    RouteParseError,
)
from .halfplane import (
    INFINITY,
    HPoint,
    MobiusMap,
    Transversal,
    TransversalKind,
    ath,
    canonical_horocycle_isometry,
    canonical_isometry,
    hyperbolic_distance,
)
from .leaves import (
    CarrierContact,
    Circle,
    IdealEndpoints,
    Leaf,
    LeafKind,
    Line,
    angle_from_mean_curvature,
    carrier_contact,
    classify_leaf,
    disjoint_along_geodesic,
    disjoint_along_hypercycle,
    equidistant_offset,
    ideal_endpoints,
    intersects_upper_halfplane,
    leaf_orthogonal_to_geodesic,
    leaf_orthogonal_to_hypercycle,
    mean_curvature_from_angle,
)
from .validation import (
    Route,
    Verdict,
    Violation,
    Zones,
    detect_zones,
    lipschitz_profile,
    min_angle_rate,
    min_curvature_rate,
    profile_inverse,
    validate_c0,
    validate_c1,
    validate_horocycle,
)
from .foliation import (
    BUILTIN_FAMILIES,
    AgreementStats,
    DisjointnessReport,
    FoliationSlice,
    PairContact,
    attach_audit,
    builtin_route,
    extend_slice,
    perturbed_invalid_route,
    random_valid_route,
    run_disjointness_agreement,
    synthesize,
    verify_disjoint,
)
from .routes_io import (
    document_to_route,
    dumps_document,
    load_route,
    loads_route,
    route_to_document,
    validate_document,
)
from .render import RenderStyle, Viewport, render_svg

__version__ = "0.1.0"

__all__ = [
    "AgreementStats",
    "BUILTIN_FAMILIES",
    "CarrierContact",
    "Circle",
    "DegenerateInputError",
    "DisjointnessReport",
    "DomainError",
    "FoliationSlice",
    "GeometryError",
    "HPoint",
    "IdealEndpoints",
    "INFINITY",
    "InvalidRouteError",
    "Leaf",
    "LeafKind",
    "Line",
    "MobiusMap",
    "NotALeafError",
    "PairContact",
    "Route",
    "RouteParseError",
    "RenderStyle",
    "Transversal",
    "TransversalKind",
    "Verdict",
    "Viewport",
    "Violation",
    "Zones",
    "angle_from_mean_curvature",
    "ath",
    "attach_audit",
    "builtin_route",
    "canonical_horocycle_isometry",
    "canonical_isometry",
    "carrier_contact",
    "classify_leaf",
    "detect_zones",
    "disjoint_along_geodesic",
    "disjoint_along_hypercycle",
    "document_to_route",
    "dumps_document",
    "equidistant_offset",
    "extend_slice",
    "hyperbolic_distance",
    "ideal_endpoints",
    "intersects_upper_halfplane",
    "leaf_orthogonal_to_geodesic",
    "leaf_orthogonal_to_hypercycle",
    "lipschitz_profile",
    "load_route",
    "loads_route",
    "mean_curvature_from_angle",
    "min_angle_rate",
    "min_curvature_rate",
    "perturbed_invalid_route",
    "profile_inverse",
    "random_valid_route",
    "render_svg",
    "route_to_document",
    "run_disjointness_agreement",
    "synthesize",
    "validate_c0",
    "validate_c1",
    "validate_document",
    "validate_horocycle",
    "verify_disjoint",
]
