"""Characteristic polynomials and region counts of generalized threshold
arrangements x_i + x_j = -l, ..., k (1 <= i < j <= n)."""

from .engine import (
    CaseBreakdown,
    CharPolyResult,
    ExcessDistribution,
    SlicePlan,
    case_counts,
    case_counts_CT,
    case_counts_ST,
    characteristic_polynomial,
    count_I,
    excess_distribution,
    family_polynomial,
    regions,
    sample_points,
)
from .errors import (
    ArrangementError,
    BudgetExceeded,
    DuplicateAbscissa,
    HoldoutMismatch,
    IntegralityViolation,
    InvalidSamplePoint,
    NegativeRegionCount,
    SanityCheckFailed,
)
from .exact import (
    IntPolynomial,
    binomial,
    double_falling,
    falling,
    interpolate,
    poly_eval,
    stirling2,
)
from .model import (
    AdmissibleTupleCount,
    ArrangementSpec,
    Family,
    ReducedFamily,
    SumGraph,
    brute_count_tuples,
    count_tuples_via_independent_sets,
    enum_independent_sets,
    hyperplane_count,
    is_edge,
    reduce,
)
from .reference import (
    DiffReport,
    Verdict,
    adjudicate,
    chi_braid,
    chi_catalan,
    chi_seo_CT,
    chi_seo_ST,
    chi_shi,
    load_published_table,
)

__version__ = "0.1.0"
