"""
Exact computation of restricted partition functions with a bound on the
number of parts, i.e. the coefficients of Gaussian polynomials, by several
independent routes that can be checked against one another.
"""
from .exact import (
    IntPolynomial,
    NonExactDivision,
    NonUnitConstantTerm,
    PeriodicRational,
    poly_div_exact,
    poly_mul,
    series_inverse_trunc,
)
from .gaussian import (
    GaussianTable,
    OutOfTheoremRange,
    check_convolution_residual,
    corollary1_check,
    gaussian_by_division,
    gaussian_by_oracle,
    gaussian_by_recurrence,
    theorem1_violations,
    theorem2_piecewise,
)
from .partitions import (
    DenomTuple,
    PartitionList,
    count_consecutive,
    count_constrained,
    count_unconstrained,
    enumerate_partitions,
)
from .quasipoly import NonIntegralValue, QuasiPolynomial, UnsupportedOrder, builtin_w, evaluate
from .toeplitz import (
    ConvolutionSystem,
    PhiPolynomial,
    build_phi,
    eval_phi,
    phi_values,
    pnm_by_toeplitz,
    solve_closed_form,
    solve_forward,
)

__version__ = "0.1.0"


def clear_caches():
    """Drop memoized W tables, Phi values and builtin quasi-polynomials."""
    from . import partitions, quasipoly, toeplitz

    partitions._consecutive_cached.cache_clear()
    quasipoly.builtin_w.cache_clear()
    toeplitz._gaussian_rhs.cache_clear()
    toeplitz._gaussian_phi.cache_clear()
    toeplitz.build_phi.cache_clear()
