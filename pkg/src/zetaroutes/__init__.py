"""Classical zeta values by independent exact routes, with a numeric
analytic continuation to complex arguments that cross-validates them.

Exact half: arbitrary-precision rationals and pi-monomials, truncated
Laurent series, Bernoulli numbers two ways, Abel sums of the divergent
alternating series, and the functional equation verified with zero
tolerance at integer points.

Numeric half: complex Gamma, an Euler-Maclaurin zeta oracle, Hankel-contour
quadrature for zeta(s) at complex s, the inside-out residue sum, and the
partial-fraction cotangent identity.
"""

from .exact import BigRational, MixedPiPowers, PiValue, binomial, factorial
from .series import LaurentSeries, OutOfTrustedRange, ZeroSeries, exp_series
from .bernoulli import (
    BernoulliTable,
    bernoulli_via_recurrence,
    bernoulli_via_series,
    even_part_check,
    faulhaber_sum,
)
from .abel import (
    InternalInconsistency,
    RationalFunction,
    abel_numeric_estimate,
    abel_sum_exact,
    apply_euler_operator,
    em_alternating_value,
    operator_genfun_check,
    zeta_neg_via_abel,
)
from .zeta_exact import (
    ArgumentNotEvenPositive,
    ClassicalValue,
    PoleArgument,
    Route,
    finite_G_check,
    funceq_exact_check,
    odd_genfun_check,
    simple_funceq_check,
    sin_gamma_limit_exact,
    zeta_classical,
    zeta_even_positive,
    zeta_neg_via_G,
    zeta_neg_via_residue,
    zeta_nonpositive,
)
from .gammafn import PoleAtNonpositiveInteger, gamma_complex
from .numeric import (
    AtPole,
    ContourSpec,
    NearPole,
    NumericConfig,
    OnBranchCut,
    OutOfValidatedRange,
    QuadratureNotConverged,
    TooCloseToPositiveIntegerPole,
    cotangent_check,
    cotangent_tail_bound,
    funceq_residual,
    hankel_integrand,
    inverted_contour_bound,
    inverted_contour_check,
    zeta_em,
    zeta_hankel,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "PiValue",
    "MixedPiPowers",
    "binomial",
    "factorial",
    "LaurentSeries",
    "exp_series",
    "ZeroSeries",
    "OutOfTrustedRange",
    "BernoulliTable",
    "bernoulli_via_series",
    "bernoulli_via_recurrence",
    "even_part_check",
    "faulhaber_sum",
    "RationalFunction",
    "apply_euler_operator",
    "abel_sum_exact",
    "abel_numeric_estimate",
    "em_alternating_value",
    "operator_genfun_check",
    "zeta_neg_via_abel",
    "InternalInconsistency",
    "ClassicalValue",
    "Route",
    "zeta_nonpositive",
    "zeta_neg_via_residue",
    "zeta_neg_via_G",
    "zeta_even_positive",
    "zeta_classical",
    "sin_gamma_limit_exact",
    "finite_G_check",
    "odd_genfun_check",
    "simple_funceq_check",
    "funceq_exact_check",
    "ArgumentNotEvenPositive",
    "PoleArgument",
    "gamma_complex",
    "PoleAtNonpositiveInteger",
    "NumericConfig",
    "ContourSpec",
    "zeta_em",
    "zeta_hankel",
    "hankel_integrand",
    "inverted_contour_check",
    "inverted_contour_bound",
    "funceq_residual",
    "cotangent_check",
    "cotangent_tail_bound",
    "NearPole",
    "OutOfValidatedRange",
    "OnBranchCut",
    "AtPole",
    "TooCloseToPositiveIntegerPole",
    "QuadratureNotConverged",
    "__version__",
]
