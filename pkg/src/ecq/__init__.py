"""Exact arithmetic for elliptic curves over Q.

Curve models and invariants, the chord-and-tangent group law, naive heights
on Q / projective space / the curve, the descent procedure, bounded-height
point search, torsion computation, and crude 2-descent rank bounds. All
core arithmetic is exact (stdlib fractions); floats appear only as terminal
logarithms of exact height magnitudes.
"""

from .curves import (
    CompletedSquareCurve,
    GeneralCurve,
    Invariants,
    PointMap,
    ShortCurve,
    complete_square,
    compute_invariants,
    integral_short_model,
    is_on_curve,
    parse_curve,
    short_form,
)
from .descent import (
    ConstantEstimates,
    DescentChain,
    DescentProblem,
    descend,
    elliptic_problem,
    estimate_constants,
    generators,
    halve_point,
)
from .ec_heights import (
    DuplicationSystem,
    NaiveRepresentation,
    build_duplication_system,
    enumerate_points,
    g_map,
    hx,
    multiplication_defect,
    naive_form,
    parallelogram_defect,
    quotient_identity_check,
    sigma,
    x_double_via_FG,
    x_projective,
)
from .errors import (
    CommonZeroError,
    DenominatorVanishesError,
    EcqError,
    IdentityFailureError,
    ModelError,
    NonContractionError,
    NonIntegralModelError,
    ParseError,
    PointNotOnCurveError,
    RootsDoNotMatchError,
    SingularCurveError,
)
from .group import (
    INFINITY,
    Point,
    SlopeIntercept,
    add,
    chord,
    double,
    format_point,
    mul,
    negate,
    order_of_point,
    parse_point,
    two_torsion,
    x_double_formula,
)
from .heights import (
    HeightValue,
    Place,
    ProjectivePoint,
    RootHeightBounds,
    abs_value,
    enumerate_rationals,
    height_projective,
    height_rational,
    morphism_height_scan,
    root_height_bounds,
    verify_product_formula,
)
from .two_descent import (
    TORSION_ORDER_CAP,
    FullTwoTorsionModel,
    RankBounds,
    SquareClassPair,
    TorsionResult,
    candidate_classes,
    coset_representatives,
    delta_map,
    rank_bounds,
    support_primes,
    torsion_subgroup,
)

__version__ = "0.1.0"
