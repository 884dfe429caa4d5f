"""egyfrac: exact-arithmetic toolkit for unit-fraction experiments."""

from .errors import (
    DomainError,
    InconclusiveError,
    InfeasibleError,
    NumericalInstabilityError,
    RangeError,
    ResourceLimitError,
)
from .rational import (
    IntSet,
    Rational,
    as_intset,
    format_rational,
    fraction_sum,
    lcm_set,
    parse_rational,
    recip_sum,
)
from .sieve import (
    FactorTable,
    build_table,
    exact_prime_powers,
    factorize,
    is_prime_power,
    largest_prime,
    omega,
)
from .decomposition import (
    Decomposition,
    build_decomposition,
    gcd_ppower_recip_sum,
    ppowers_in_set,
    qsum_check,
    rec_sum_q,
    smooth_cofactor,
    subset_aq,
)
from .filters import (
    FilterSpec,
    has_divisor_pair,
    mertens_product,
    mertens_q_sum,
    omega_in_range,
    passes_smoothness,
    prime_powers_upto,
    sieve_survivors,
    two_prime_pair_set,
)
from .solver import (
    SolverConfig,
    SolverResult,
    SolverStatus,
    Strategy,
    combine_solutions,
    count_integral,
    count_subsets,
    find_subset,
    lambda_exact,
)
from .fourier import (
    ArcDiagnostics,
    IntervalReport,
    arc_classify,
    cosine_weight,
    fourier_count,
    interval_coverage,
    orthogonality_sum,
)
from .pruning import PruneTrace, prune_ppower, prune_to_window
from .pomerance import (
    PomeranceReport,
    lambda_lower_curve,
    pomerance_set,
    verify_report,
    verify_solution_free,
)

__version__ = "0.1.0"

__all__ = [
    "ArcDiagnostics",
    "Decomposition",
    "DomainError",
    "FactorTable",
    "FilterSpec",
    "InconclusiveError",
    "InfeasibleError",
    "IntervalReport",
    "IntSet",
    "NumericalInstabilityError",
    "PomeranceReport",
    "PruneTrace",
    "RangeError",
    "Rational",
    "ResourceLimitError",
    "SolverConfig",
    "SolverResult",
    "SolverStatus",
    "Strategy",
    "arc_classify",
    "as_intset",
    "build_decomposition",
    "build_table",
    "combine_solutions",
    "cosine_weight",
    "count_integral",
    "count_subsets",
    "exact_prime_powers",
    "factorize",
    "find_subset",
    "format_rational",
    "fourier_count",
    "fraction_sum",
    "gcd_ppower_recip_sum",
    "has_divisor_pair",
    "interval_coverage",
    "is_prime_power",
    "lambda_exact",
    "lambda_lower_curve",
    "largest_prime",
    "lcm_set",
    "mertens_product",
    "mertens_q_sum",
    "omega",
    "omega_in_range",
    "orthogonality_sum",
    "parse_rational",
    "passes_smoothness",
    "pomerance_set",
    "ppowers_in_set",
    "prime_powers_upto",
    "prune_ppower",
    "prune_to_window",
    "qsum_check",
    "rec_sum_q",
    "recip_sum",
    "sieve_survivors",
    "smooth_cofactor",
    "subset_aq",
    "two_prime_pair_set",
    "verify_report",
    "verify_solution_free",
]
