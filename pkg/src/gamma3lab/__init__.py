"""Desk-scale verification lab for third-logarithmic-coefficient bounds.

Three subclasses of close-to-convex functions, cut out by the generators
1-z, 1-z^2 and 1-z+z^2, admit closed |gamma_3| bounds obtained by
maximizing a bivariate objective over the feasibility region of Schwarz
coefficient moduli.  This package reproduces every step numerically:
truncated series arithmetic and the series logarithm, Schwarz-function
witnesses as Blaschke products, the coefficient maps and closed forms,
the constrained maximization with dense-grid certification, and a
randomized extremal search that brackets the proved bounds from below.
"""

from .config import DEFAULT_ORDER, TOL, Tolerances
from .series import (
    NotNormalized,
    TruncatedSeries,
    ZeroConstantTerm,
    antiderivative,
    derivative,
    exp_series,
    log_over_z,
    multiply,
    reciprocal,
)
from .schwarz import (
    BlaschkeProduct,
    SchwarzTriple,
    ZeroOutsideDisk,
    blaschke_value,
    carlson_check,
    is_feasible,
    sample_schwarz,
    taylor_of_blaschke,
    triple_of_blaschke,
)
from .families import (
    F1,
    F2,
    F3,
    FAMILIES,
    BadRadius,
    CoefficientTriple,
    Family,
    coefficients_from_schwarz,
    family_by_tag,
    gamma3_closed_form,
    gamma3_from_coefficients,
    gamma_sequence,
    identity_series,
    koebe_series,
    member_series,
    membership_residual,
    milin_functional,
)
from .objective import (
    OutsideRegion,
    RegionPoint,
    bound_from_value,
    gradient_xy,
    objective_gradient,
    objective_value,
    value_xy,
)
from .optimize import (
    EDGES,
    BoundReport,
    CertificationMismatch,
    UnknownEdge,
    edge_maximum,
    global_bound,
    hessian_xy,
    interior_critical_points,
    is_negative_definite,
)
from .search import (
    REMARK_VALUES,
    FamilyMismatch,
    GapReport,
    SearchResult,
    gap_report,
    search_lower_bound,
)

__version__ = "0.1.0"
