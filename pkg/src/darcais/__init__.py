"""darcais: exact d'Arcais numbers, divisor-sum convolutions, and a
numerical circle-method laboratory.

The library computes the triangle A(2,n,k) of coefficients of x^k z^n/n! in
((z;z)_oo)^{-x} exactly, evaluates the asymptotic models that govern its
columns and log-concavity ratios, and reproduces the major-arc landscape of
the underlying generating function F(t) = sum sigma_1(n)/n e^{-nt}.
"""

from .errors import ConvergenceError, DomainError, ResourceLimitError, VerificationError
from .numtheory import (
    EtaMultiplier,
    Factorization,
    FareyFraction,
    abundance_index,
    as_factorization,
    dedekind_sum,
    divisors,
    eta_multiplier,
    factorize,
    farey,
    gcd_ext,
    k0_residue,
    mobius,
    nth_primes,
    primes_up_to,
    primorial,
    ramanujan_sum,
    sigma,
    sigma_weighted,
    totient,
)
from .triangle import (
    ConvolutionSpec,
    DarcaisTriangle,
    LogConcavityRecord,
    abundance,
    alpha,
    alpha_bruteforce,
    alpha_float,
    besge_rhs,
    convolve,
    darcais_triangle,
    kfold_sigma_convolution,
    logconcavity_scan,
    partition_count,
    sigma_power_sieve,
    triangle_from_json,
    triangle_to_csv,
    triangle_to_json,
)
from .asymptotics import (
    ALPHA_EXACT_LIMIT,
    BIG_C_MAX_K,
    EULER_GAMMA,
    ZETA_POLE,
    AsymptoticReport,
    ZetaPole,
    ZetaValue,
    bernoulli,
    beta,
    big_C,
    big_C_exact,
    calculus_lower_bound,
    convergence_report,
    convolution_prediction,
    divisor_ratio,
    exact_to_float,
    logconcavity_ratio_liminf,
    primorial_liminf_trace,
    ramanujan_series_partial,
    ramanujan_tail_bound,
    residue_class_power_sum,
    rho,
    robin_diagnostic,
    zeta,
    zeta_even_exact,
    zeta_ratio_bound,
)
from .circle import (
    DEFAULT_CONFIG,
    DESK_OVERLAY_Q,
    DESK_T,
    DESK_THETA_COUNT,
    PAPER_CONFIG,
    PAPER_T,
    PAPER_THETA_COUNT,
    LandscapeSample,
    SaddleResult,
    SeriesConfig,
    series_tail_bound,
    F_complex,
    F_modular_defect,
    F_prime,
    F_real,
    ansatz_alpha,
    farey_overlay,
    gamma_arc_error_budget,
    gamma_arc_integral,
    landscape,
    major_arc_ratio,
    refined_peaks,
    saddle,
)

__version__ = "0.1.0"
