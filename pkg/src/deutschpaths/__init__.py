"""Exact enumeration of Deutsch paths.

Deutsch paths are nonnegative lattice paths built from unit up-steps and
down-steps of arbitrary size.  This package counts them (directly and in a
height-bounded strip), manipulates their generating functions in exact
rational arithmetic, verifies the determinant and LU factorization
identities of the associated linear systems, computes height/area
statistics with asymptotic comparisons, and realizes the size-preserving
bijection with Motzkin paths.
"""

from .algebra import (
    DivisionByZero,
    DivisorNotUnit,
    Poly,
    PoleAtOrigin,
    RatFn,
    Series,
    coeff_of_z,
    expand_in_v,
    expand_in_z,
    trinomial,
    trinomial_row,
    v_of_z,
)
from .bijection import (
    FirstReturnDecomposition,
    NotAPath,
    certify,
    decompose,
    from_motzkin,
    recompose,
    returns_count,
    to_motzkin,
)
from .formulas import (
    BadParams,
    CoefficientFormula,
    FormulaId,
    coeff_closed,
    coeff_open,
    coeff_reversed_formal,
    combinatorial_ids,
    formula,
    oracle_check,
)
from .matrices import (
    QvMatrix,
    SingularMatrix,
    adjudicate_det_product,
    build_matrix,
    cramer_solve,
    det_closed_form,
    det_product_candidate,
    determinant,
    determinant_at,
    lu_formulas,
    u_diagonal_product,
    verify_cramer,
    verify_det_recursion,
    verify_determinant,
    verify_lu,
)
from .paths import (
    BadStep,
    BoundExceeded,
    DeutschPath,
    InfiniteFamily,
    LatticePath,
    MotzkinPath,
    NegativeLevel,
    NonzeroEnd,
    PathFamilyQuery,
    ReversedDeutschPath,
    count_dp,
    enumerate_paths,
    reverse_path,
    total_area_dp,
    total_height_dp,
    validate_path,
)
from .reporting import CheckResult, MismatchFound, VerificationReport
from .selftest import run_selftest
from .stats import (
    LAWS,
    AsymptoticLaw,
    ComparisonRow,
    ZeroCount,
    area_total,
    asymptotic_report,
    avg_area,
    avg_elevation,
    avg_height,
    closed_count,
    height_total,
    open_count,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticLaw",
    "BadParams",
    "BadStep",
    "BoundExceeded",
    "CheckResult",
    "CoefficientFormula",
    "ComparisonRow",
    "DeutschPath",
    "DivisionByZero",
    "DivisorNotUnit",
    "FirstReturnDecomposition",
    "FormulaId",
    "InfiniteFamily",
    "LAWS",
    "LatticePath",
    "MismatchFound",
    "MotzkinPath",
    "NegativeLevel",
    "NonzeroEnd",
    "NotAPath",
    "PathFamilyQuery",
    "PoleAtOrigin",
    "Poly",
    "QvMatrix",
    "RatFn",
    "ReversedDeutschPath",
    "Series",
    "SingularMatrix",
    "VerificationReport",
    "ZeroCount",
    "adjudicate_det_product",
    "area_total",
    "asymptotic_report",
    "avg_area",
    "avg_elevation",
    "avg_height",
    "build_matrix",
    "certify",
    "closed_count",
    "coeff_closed",
    "coeff_of_z",
    "coeff_open",
    "coeff_reversed_formal",
    "combinatorial_ids",
    "count_dp",
    "cramer_solve",
    "decompose",
    "det_closed_form",
    "det_product_candidate",
    "determinant",
    "determinant_at",
    "enumerate_paths",
    "expand_in_v",
    "expand_in_z",
    "formula",
    "from_motzkin",
    "height_total",
    "lu_formulas",
    "open_count",
    "oracle_check",
    "recompose",
    "returns_count",
    "reverse_path",
    "run_selftest",
    "to_motzkin",
    "total_area_dp",
    "total_height_dp",
    "trinomial",
    "trinomial_row",
    "u_diagonal_product",
    "v_of_z",
    "validate_path",
    "verify_cramer",
    "verify_det_recursion",
    "verify_determinant",
    "verify_lu",
    "__version__",
]
