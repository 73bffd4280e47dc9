"""Exact arithmetic for gradings, lattices and Hilbert series of weighted
Grassmannians."""

__version__ = "0.1.0"

from .errors import (
    BadRange,
    BudgetExceeded,
    CrossCheckFailed,
    DimensionMismatch,
    EmptyGenerators,
    LimitDoesNotExist,
    MissingIndex,
    NonIntegralCoweight,
    NonInvertibleDenominator,
    NonPolynomialTail,
    NonPositiveDegree,
    NotPositive,
    TooLarge,
    UnsupportedType,
    WgrassError,
    WindowTooShort,
)
from .exact_linalg import (
    IntMatrix,
    LatticeBasis,
    RatMatrix,
    hnf,
    is_column_equivalent,
    lattice_intersect,
    snf,
    solve_integral,
)
from .grading import (
    DegreeTable,
    DualisingDegrees,
    GLParams,
    GradingParams,
    complement_basis,
    degrees,
    dualising_degrees,
    from_gl,
    gl_degree,
    is_positive,
    is_well_formed,
    param_basis,
    param_basis_ambient,
    singular_strata,
    to_gl,
    weyl_act,
)
from .hilbert import (
    HilbertResult,
    LaurentPoly,
    closed_series,
    expand,
    limit_z1,
    perm_exponent,
    recover_numerator,
    weyl_denominator,
    weyl_series,
)
from .pluecker import (
    PlueckerRelation,
    ideal_dimension_oracle,
    relation_degrees,
    relations,
    standard_monomial_count,
)
from .root_data import (
    CoweightVector,
    RepSpec,
    build_Lpsi,
    cartan_matrix,
    coweight_lattice,
    degrees_from_coweight,
    rep_weights,
)
