"""Computable geometry of lp- and c0-direct sums of normed spaces:
norms, duals, support-functional sets and their diameters, smoothness,
Birkhoff-James orthogonality, semi-inner products, and pointwise
orthogonality symmetry, each formula cross-checkable against
definition-based brute-force oracles."""

from .components import (
    ComponentSpace,
    GEOMETRIC_TOL,
    Interval,
    SupportSet,
    euclidean,
    l1,
    linf,
    lr,
    polygon,
    polygon_family,
)
from .errors import (
    ConstructionError,
    DegenerateInputError,
    DimensionMismatchError,
    LpsumsError,
    NotEnumerableError,
    ValidationError,
)
from .oracles import OracleConfig, oracle_diameter, oracle_dual_norm, oracle_min_norm
from .orthogonality import (
    SipSelector,
    TriBool,
    bj_orthogonal,
    bj_orthogonal_oracle,
    falsify_symmetry,
    orthogonal_completion,
    p_sip_commuting,
    rank_one_orthogonality,
    sip,
    sip_value_interval,
    symmetric_point,
)
from .sums import (
    SmoothnessReport,
    SumFunctional,
    SumSpace,
    SumVector,
    apply_functional,
    dual_sum_space,
    functional_norm,
    is_support,
    norming_element,
    smoothness_report,
    sum_norm,
    sum_space,
    sum_vector,
    sum_functional,
    support_diameter,
    support_extreme_points,
    support_functionals,
    sum_max_support_diameter,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
