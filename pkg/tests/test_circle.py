"""Unit tests for the series F, its transform, saddle points, arcs, and
the landscape sampler.

Oracles: direct high-precision partial sums recomputed inline, the
closed forms 2 pi k^{k-1}/(e^k (k-1)!) and zeta(2), and structural
properties (symmetry, monotonicity, self-consistency of the transform).
"""

import cmath
import math

import pytest

from darcais import (
    DEFAULT_CONFIG,
    DESK_T,
    ConvergenceError,
    DomainError,
    F_complex,
    F_modular_defect,
    F_prime,
    F_real,
    ResourceLimitError,
    SeriesConfig,
    ansatz_alpha,
    beta,
    big_C,
    farey,
    farey_overlay,
    gamma_arc_error_budget,
    gamma_arc_integral,
    landscape,
    major_arc_ratio,
    refined_peaks,
    saddle,
    series_tail_bound,
    sigma,
    zeta,
)


def _F_reference(t: float, terms: int = 2500) -> float:
    # independent direct sum; at t >= 0.05 the tail beyond 2500 terms is
    # below e^-125, far under the 1e-12 comparisons here
    return math.fsum(
        float(sigma(1, n)) / n * math.exp(-n * t) for n in range(1, terms + 1)
    )


# ======================================================================
# series config and tail bounds
# ======================================================================


def test_series_tail_bound_monotone():
    bounds = [series_tail_bound(terms, 0.01) for terms in (1000, 5000, 20000)]
    assert bounds[0] > bounds[1] > bounds[2] > 0


def test_series_config_validation():
    cfg = SeriesConfig(terms=25000, t_floor=0.002)
    assert series_tail_bound(cfg.terms, cfg.t_floor) <= 1e-10
    with pytest.raises(DomainError):
        SeriesConfig(terms=100, t_floor=0.002)  # tail too fat at the floor


# ======================================================================
# F on the real axis and the modular transform
# ======================================================================


def test_F_real_matches_direct_sum():
    for t in (0.05, 0.3, 1.0, 4.0):
        assert abs(F_real(t) - _F_reference(t)) < 1e-12


def test_F_real_below_floor_uses_transform():
    # value at t below the floor must stay consistent with the identity
    t = 1e-4
    lhs = F_real(t)
    zeta2 = zeta(2).value
    rhs = (
        zeta2 / t
        + math.log(t) / 2
        - math.log(2 * math.pi) / 2
        - t / 24
        + F_real(4 * math.pi**2 / t)
    )
    assert abs(lhs / rhs - 1) < 1e-12


def test_F_pole_behavior():
    # t F(t) -> zeta(2) as t -> 0
    zeta2 = zeta(2).value
    rels = [abs(t * F_real(t) / zeta2 - 1) for t in (1e-2, 1e-3, 1e-4)]
    assert rels[0] > rels[1] > rels[2]
    assert rels[2] < 0.01


def test_F_modular_defect_small():
    for t in (0.05, 0.5, 2 * math.pi, 9.7):
        assert F_modular_defect(t) < 1e-10


def test_F_prime_modes_agree():
    for t in (0.01, 0.2, 1.5):
        direct = F_prime(t, mode="direct")
        transform = F_prime(t, mode="transform")
        auto = F_prime(t)
        assert abs(direct / transform - 1) < 1e-9
        assert auto == direct or auto == transform
    assert F_prime(1.0) < 0  # strictly decreasing series


def test_F_domain():
    with pytest.raises(DomainError):
        F_real(0.0)
    with pytest.raises(DomainError):
        F_prime(-1.0)


# ======================================================================
# F on the strip
# ======================================================================


def test_F_complex_at_zero_angle():
    for t in (0.01, 0.5):
        val = F_complex(t, 0.0)
        assert val.imag == 0.0
        # theta = 0 normalization equals the truncated series, which is
        # within the tail bound of the accelerated real value
        assert abs(val.real - F_real(t)) <= series_tail_bound(
            DEFAULT_CONFIG.terms, t
        ) + 1e-12


def test_F_complex_direct_sum_small_case():
    # convention: F(t - i theta) = sum sigma_1(n)/n e^{-nt} e^{+i n theta}
    t, theta = 0.03, 0.7
    cfg = DEFAULT_CONFIG
    direct = sum(
        float(sigma(1, n)) / n * cmath.exp(n * (-t + 1j * theta))
        for n in range(1, 4001)
    )
    # 4000 direct terms suffice at t = 0.03: remaining tail < 1e-40
    assert abs(F_complex(t, theta, cfg) - direct) < 1e-10


def test_F_complex_conjugate_symmetry():
    val_plus = F_complex(0.01, 0.4)
    val_minus = F_complex(0.01, -0.4)
    assert abs(val_plus - val_minus.conjugate()) < 1e-12


def test_F_complex_periodicity():
    base = F_complex(0.01, 0.3)
    shifted = F_complex(0.01, 0.3 + 2 * math.pi)
    assert abs(base - shifted) < 1e-12


# ======================================================================
# saddle points
# ======================================================================


def test_saddle_residual_and_scaling():
    result = saddle(100, 5)
    assert result.t > 0
    assert abs(result.residual) <= 1e-10
    # t n/k -> 1 in the k/n -> 0 regime (F ~ zeta(2)/t makes -F/F' ~ t)
    scaled = [saddle(n, 2).t * n / 2 for n in (100, 1000, 10000)]
    assert abs(scaled[-1] - 1) < 0.05
    assert abs(scaled[-1] - 1) < abs(scaled[0] - 1)


def test_saddle_monotone_in_k():
    t_small = saddle(200, 2).t
    t_large = saddle(200, 150).t
    assert t_small < t_large


def test_saddle_domain():
    with pytest.raises(DomainError):
        saddle(10, 0)
    with pytest.raises(DomainError):
        saddle(10, 11)


# ======================================================================
# arcs
# ======================================================================


def test_major_arc_ratio_at_cusp():
    for (p, q, tol) in [(1, 2, 0.02), (1, 3, 0.05), (2, 3, 0.05)]:
        measured, predicted = major_arc_ratio(p, q, 1e-3, 0.0)
        assert abs(predicted - 1 / q**2) < 1e-15
        assert abs(measured / predicted - 1) < tol, (p, q)


def test_major_arc_ratio_with_angle():
    measured, predicted = major_arc_ratio(1, 2, 5e-4, 1.0)
    assert abs(predicted - 1 / (4 * (1 - 1j))) < 1e-15
    assert abs(measured / predicted - 1) < 0.05


def test_major_arc_domain():
    with pytest.raises(DomainError):
        major_arc_ratio(2, 4, 1e-3, 0.0)  # not coprime
    with pytest.raises(DomainError):
        major_arc_ratio(1, 2, 0.5, 0.0)  # t too large


def test_gamma_arc_integral():
    num, closed = gamma_arc_integral(2)
    assert abs(closed - 4 * math.pi / math.e**2) < 1e-14
    assert abs(num - closed) < gamma_arc_error_budget(2, 20000.0, 0.02)
    for k in (3, 5):
        num, closed = gamma_arc_integral(k)
        expected = 2 * math.pi * k ** (k - 1) / (math.e**k * math.factorial(k - 1))
        assert abs(closed - expected) < 1e-14
        assert abs(num - closed) < gamma_arc_error_budget(k, 20000.0, 0.02)


# ======================================================================
# landscape
# ======================================================================


def test_landscape_matches_direct_evaluation():
    t, M = 0.01, 16
    samples = landscape(t, M)
    assert len(samples) == M
    terms = DEFAULT_CONFIG.terms
    direct_F0 = math.fsum(
        float(sigma(1, n)) / n * math.exp(-n * t) for n in range(1, terms + 1)
    )
    for j in (1, 7, 16):
        theta = j * math.pi / M
        direct = sum(
            float(sigma(1, n)) / n * cmath.exp(n * (-t + 1j * theta))
            for n in range(1, terms + 1)
        )
        sample = samples[j - 1]
        assert abs(sample.theta - theta) < 1e-15
        expected_log = 2 * math.log(abs(direct) / direct_F0)
        assert abs(sample.log_norm_sq - expected_log) < 1e-9
        expected_cos = (direct / abs(direct)).real
        assert abs(sample.cos_phi - expected_cos) < 1e-9


def test_landscape_normalization_at_origin():
    # when the first grid angle is far inside the width of the t-pole
    # (theta_1 << t) the ratio is near 1: log_norm_sq ~ 0, cos_phi ~ 1
    samples = landscape(1.0, 2000)
    first = samples[0]
    assert abs(first.log_norm_sq) < 1e-2
    assert first.cos_phi > 0.999


def test_landscape_caps():
    with pytest.raises(ResourceLimitError):
        landscape(0.01, 10**7 + 1)
    with pytest.raises(DomainError):
        landscape(-1.0, 10)


def test_refined_peaks_are_strict_local_maxima():
    samples = landscape(1 / 500, 5000)
    refined = refined_peaks(samples)
    assert len(refined) == len(samples)
    count = 0
    for i, flag in enumerate(refined):
        if not flag:
            continue
        count += 1
        assert samples[i].is_peak
        lo, hi = max(0, i - 3), min(len(samples), i + 4)
        for j in range(lo, hi):
            if j != i:
                assert samples[j].log_norm_sq < samples[i].log_norm_sq
    assert count >= 5  # the cusps at 1/2, 1/3, 2/3, ... must show up


def test_farey_overlay():
    overlay = farey_overlay(10)
    assert len(overlay) == len(farey(10, include_endpoints=True))
    for f, height in overlay:
        assert height == -4 * math.log(f.q)
    assert overlay[0][1] == 0.0  # q = 1 cusp


# ======================================================================
# ansatz
# ======================================================================


def test_ansatz_alpha_tends_to_beta_model():
    # at n = 1 the series telescopes: ansatz -> big_C(k) = beta(1, k)
    val = ansatz_alpha(1, 3, 4000)
    assert abs(val / big_C(3) - 1) < 1e-10
    # generic n: ansatz approaches beta(n,k) as Q grows
    near = abs(ansatz_alpha(36, 2, 4000) / beta(36, 2) - 1)
    far = abs(ansatz_alpha(36, 2, 40) / beta(36, 2) - 1)
    assert near < 1e-5
    assert near < far


def test_ansatz_alpha_domain():
    with pytest.raises(DomainError):
        ansatz_alpha(10, 1, 100)  # k >= 2 required
    with pytest.raises(DomainError):
        ansatz_alpha(0, 2, 100)
