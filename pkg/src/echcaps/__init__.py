"""Exact ECH capacities of concave toric domains, embedding obstructions, ball packings.

All arithmetic is exact rational; the two capacity routes (weight expansion
and lattice-path maximization) are independent implementations that can be
cross-checked against each other.
"""

from .capacities import (
    CapacitySequence,
    ball_capacity,
    caps_ball,
    caps_closed,
    caps_disjoint_union,
    caps_domain,
    caps_ellipsoid,
    caps_from_weights,
    caps_profile,
    caps_zcyl,
    caps_zec_closed,
    gromov_width,
    truncate_tail,
)
from .domains import (
    Ball,
    ConcaveProfile,
    DomainExpr,
    Ellipsoid,
    Polygon,
    Scale,
    Union,
    ZCyl,
    ZEC,
    area,
    domain_to_text,
    inscribed_simplex_size,
    parse_domain,
    profile_contains_polygon,
    to_profile,
)
from .embeddings import (
    ObstructionResult,
    PackingPlan,
    inclusion_threshold,
    obstruction,
    obstruction_lambda,
    pack_balls,
    packing_threshold,
    verify_packing,
)
from .errors import (
    BaseCaseProfileError,
    ClosedFormError,
    EchcapsError,
    ExpansionLimitError,
    ObstructionError,
    ParameterError,
    ParseError,
    PathLimitError,
    UnboundedProfileError,
)
from .geometry import (
    AffineLatticeMap,
    Point2,
    Rational,
    Vec2,
    as_rational,
    convex_interiors_disjoint,
    cross,
    dot,
    format_rational,
    parse_rational,
    shear_add_x_to_y,
    shear_add_y_to_x,
)
from .lattice_paths import (
    DEFAULT_ENUMERATION_LIMIT,
    EMPTY_PATH,
    ConcaveIntegralPath,
    caps_from_paths,
    enumerate_paths,
    lattice_count,
    omega_length,
    support_point,
)
from .weights import (
    DEFAULT_MAX_STEPS,
    PlacedTriangle,
    WeightMultiset,
    decompose_step,
    triangle_decomposition,
    weight_expansion,
    weight_expansion_truncated,
)

__version__ = "0.1.0"
