"""Numerical circle-method laboratory for F(t) = sum sigma_1(n)/n e^{-nt}.

F is the logarithm of the partition generating function on the circle of
radius e^{-t}: exp(x F(t)) generates the triangle columns, and the Cauchy
integral for alpha(n,k) concentrates on major arcs around Farey fractions
theta ~ 2 pi p/q. This module evaluates

  * F on the positive axis, directly or through the eta modular transform
        F(t) = zeta(2)/t + ln(t)/2 - ln(2 pi)/2 - t/24 + F(4 pi^2/t),
  * F' both ways (they must agree where the regimes overlap),
  * the saddle point -F(t)/F'(t) = k/n,
  * the major-arc model F(t(1-i Theta) + 2 pi i p/q)/F(t) ~ 1/(q^2(1-i Theta)),
  * the arc integral int e^{-ik Theta}(1-i Theta)^{-k} dTheta
        = 2 pi k^{k-1}/(e^k Gamma(k)),
  * the landscape ln(|F(t-i theta)|^2/F(t)^2) over a uniform theta grid with
    cos(phi) peak flags, plus the Farey overlay (p/q, -4 ln q),
  * the truncated Ramanujan-sum ansatz for alpha(n,k).

Everything is deterministic: fixed grids, no randomness, single-threaded
numpy whose evaluation order does not depend on scheduling.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gamma, log, pi

import numpy as np

from .errors import ConvergenceError, DomainError, ResourceLimitError
from .numtheory import FareyFraction, farey
from .asymptotics import zeta, ramanujan_series_partial
from .triangle import sigma_power_sieve

__all__ = [
    "SeriesConfig",
    "LandscapeSample",
    "SaddleResult",
    "DEFAULT_CONFIG",
    "PAPER_CONFIG",
    "DESK_T",
    "DESK_THETA_COUNT",
    "DESK_OVERLAY_Q",
    "PAPER_T",
    "PAPER_THETA_COUNT",
    "series_tail_bound",
    "F_real",
    "F_prime",
    "F_modular_defect",
    "F_complex",
    "saddle",
    "major_arc_ratio",
    "gamma_arc_integral",
    "gamma_arc_error_budget",
    "landscape",
    "refined_peaks",
    "farey_overlay",
    "ansatz_alpha",
]

MAX_THETA_COUNT = 10**7
SADDLE_T_CAP = 60.0  # -F/F' is within 1e-10 of its limit 1 long before this


def series_tail_bound(terms: int, t: float) -> float:
    """Rigorous bound on sum_{n>terms} sigma_{-1}(n) e^{-nt}.

    Uses sigma_{-1}(n) <= 1 + ln n and ln n <= ln(N+1) + (n-N-1)/(N+1):

        tail <= e^{-(N+1)t} [ (1+ln(N+1))/(1-e^{-t})
                              + e^{-t}/((N+1)(1-e^{-t})^2) ].
    """
    if terms < 1 or t <= 0:
        raise DomainError("series_tail_bound requires terms >= 1 and t > 0")
    N1 = terms + 1
    x = math.exp(-t)
    if x >= 1.0:
        return math.inf
    head = math.exp(-N1 * t)
    return head * ((1 + log(N1)) / (1 - x) + x / (N1 * (1 - x) ** 2))


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation of the n-sum and the direct-mode floor for F_real.

    Below t_floor, F_real switches to the modular transform; the invariant
    checked here is that the direct truncation error at t_floor is <= 1e-10,
    so direct mode is accurate everywhere it is used.
    """

    terms: int = 25_000
    t_floor: float = 0.002

    def __post_init__(self) -> None:
        if self.terms < 1:
            raise DomainError("SeriesConfig.terms must be >= 1")
        if self.t_floor <= 0:
            raise DomainError("SeriesConfig.t_floor must be positive")
        bound = series_tail_bound(self.terms, self.t_floor)
        if bound > 1e-10:
            raise DomainError(
                f"direct-mode tail {bound:.3e} at t_floor exceeds 1e-10; "
                "raise terms or t_floor"
            )


DEFAULT_CONFIG = SeriesConfig()

# Figure recipe: t = 1/50000 with 250000 terms (n*t cut at 5); the desk-scale
# default keeps the same cut at t = 1/5000 with a tenth of the terms.
DESK_T = 1.0 / 5_000
DESK_THETA_COUNT = 200_000
DESK_OVERLAY_Q = 250
PAPER_T = 1.0 / 50_000
PAPER_TERMS = 250_000
PAPER_THETA_COUNT = 2_000_000
PAPER_CONFIG = SeriesConfig(terms=PAPER_TERMS, t_floor=0.002)


# ======================================================================
# series weights
# ======================================================================

_weight_cache: dict[int, np.ndarray] = {}


def _weights(terms: int) -> np.ndarray:
    """w[i] = sigma_1(i+1)/(i+1) = sigma_{-1}(i+1) for i = 0..terms-1."""
    w = _weight_cache.get(terms)
    if w is None:
        sig = sigma_power_sieve(1, terms)
        n = np.arange(1, terms + 1, dtype=np.float64)
        w = np.asarray(sig[1 : terms + 1], dtype=np.float64) / n
        _weight_cache[terms] = w
    return w


def _sigma1_weights(terms: int) -> np.ndarray:
    sig = sigma_power_sieve(1, terms)
    return np.asarray(sig[1 : terms + 1], dtype=np.float64)


def _direct_terms_for(t: float) -> int:
    """Enough terms that the direct tail is far below 1e-10 at this t."""
    return max(64, int(60.0 / t) + 1)


def _F_direct(t: float, terms: int) -> float:
    n = np.arange(1, terms + 1, dtype=np.float64)
    return float(np.dot(_weights(terms), np.exp(-t * n)))


def _F_prime_direct(t: float, terms: int) -> float:
    n = np.arange(1, terms + 1, dtype=np.float64)
    return -float(np.dot(_sigma1_weights(terms), np.exp(-t * n)))


# ======================================================================
# F on the positive axis
# ======================================================================


def F_real(t: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """F(t) = sum sigma_1(n)/n e^{-nt}, absolute error <= 1e-9.

    Direct truncated series for t >= cfg.t_floor; below that the modular
    transform maps to the large argument 4 pi^2/t where the series needs a
    handful of terms."""
    if t <= 0:
        raise DomainError("F_real requires t > 0")
    if t >= cfg.t_floor:
        return _F_direct(t, min(cfg.terms, _direct_terms_for(t)))
    big = 4 * pi * pi / t
    head = zeta(2).value / t + log(t) / 2 - log(2 * pi) / 2 - t / 24
    return head + _F_direct(big, _direct_terms_for(big))


def F_prime(t: float, cfg: SeriesConfig = DEFAULT_CONFIG, mode: str = "auto") -> float:
    """F'(t) = -sum sigma_1(n) e^{-nt}.

    mode "direct" differentiates the series term by term; mode "transform"
    differentiates the modular identity:

        F'(t) = -zeta(2)/t^2 + 1/(2t) - 1/24 - (4 pi^2/t^2) F'(4 pi^2/t).

    mode "auto" picks direct for t >= cfg.t_floor. The two must agree to
    1e-7 relative wherever both are accurate."""
    if t <= 0:
        raise DomainError("F_prime requires t > 0")
    if mode not in ("auto", "direct", "transform"):
        raise DomainError(f"unknown F_prime mode {mode!r}")
    if mode == "auto":
        mode = "direct" if t >= cfg.t_floor else "transform"
    if mode == "direct":
        if t < cfg.t_floor:
            raise DomainError("direct mode is only accurate for t >= t_floor")
        return _F_prime_direct(t, min(cfg.terms, _direct_terms_for(t)))
    big = 4 * pi * pi / t
    inner = _F_prime_direct(big, _direct_terms_for(big))
    return -zeta(2).value / (t * t) + 1 / (2 * t) - 1.0 / 24 - (big / t) * inner


def F_modular_defect(t: float) -> float:
    """|F(t) - (zeta(2)/t + ln(t)/2 - ln(2 pi)/2 - t/24 + F(4 pi^2/t))|,
    each side summed directly with its own adequate truncation.

    Must stay <= 1e-8 across t in [0.05, 10]."""
    if t <= 0:
        raise DomainError("F_modular_defect requires t > 0")
    lhs = _F_direct(t, _direct_terms_for(t))
    big = 4 * pi * pi / t
    rhs = (
        zeta(2).value / t
        + log(t) / 2
        - log(2 * pi) / 2
        - t / 24
        + _F_direct(big, _direct_terms_for(big))
    )
    return abs(lhs - rhs)


# ======================================================================
# F off the axis
# ======================================================================


def F_complex(t: float, theta: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Truncated sum sigma_1(n)/n e^{-n(t - i theta)}.

    The series is 2 pi periodic in theta, which is reduced into (-pi, pi];
    at theta = 0 the imaginary part is exactly zero. Truncation follows
    cfg.terms (the landscape recipe), so accuracy at small t matches the
    recipe's n*t cut rather than F_real's 1e-9 contract."""
    if t <= 0:
        raise DomainError("F_complex requires t > 0")
    theta = math.remainder(theta, 2 * pi)  # into [-pi, pi], -pi only at exact -pi
    if theta == -pi:
        theta = pi
    n = np.arange(1, cfg.terms + 1, dtype=np.float64)
    return complex(np.dot(_weights(cfg.terms), np.exp((-t + 1j * theta) * n)))


# ======================================================================
# saddle point
# ======================================================================


@dataclass(frozen=True)
class SaddleResult:
    """Solution of -F(t)/F'(t) = k/n with its achieved residual."""

    n: int
    k: int
    t: float
    residual: float

    def __post_init__(self) -> None:
        if self.residual > 1e-10:
            raise AssertionError("saddle residual exceeds 1e-10")


def saddle(n: int, k: int, cfg: SeriesConfig = DEFAULT_CONFIG) -> SaddleResult:
    """Solve g(t) = -F(t)/F'(t) - k/n = 0 by bracketed bisection plus a
    secant polish; t_{n,k} ~ k/n as n grows with k fixed.

    g is increasing with range (0, 1), so k = n has no finite root; the
    bracket then runs into the cap where |g| <= 1e-10 already holds and
    that endpoint is accepted. Raises a convergence error if 200 iterations
    cannot reach residual <= 1e-10."""
    if not 1 <= k <= n:
        raise DomainError("saddle requires 1 <= k <= n")
    target = k / n

    def g(t: float) -> float:
        return -F_real(t, cfg) / F_prime(t, cfg) - target

    budget = 200
    lo = hi = target
    glo = ghi = g(target)
    while glo > 0 and budget > 0:
        lo /= 2
        glo = g(lo)
        budget -= 1
    while ghi < 0 and hi < SADDLE_T_CAP and budget > 0:
        hi = min(hi * 2, SADDLE_T_CAP)
        ghi = g(hi)
        budget -= 1
    if ghi < 0:
        # no sign change up to the cap: the k ~ n asymptote
        if abs(ghi) <= 1e-10:
            return SaddleResult(n, k, hi, abs(ghi))
        raise ConvergenceError(f"no bracket for saddle(n={n}, k={k})")
    while budget > 0:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        if gm == 0.0:
            lo = hi = mid
            break
        if gm < 0:
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
        budget -= 1
    # secant polish inside the bracket
    t_best = 0.5 * (lo + hi)
    if glo != ghi and hi > lo:
        t_sec = lo - glo * (hi - lo) / (ghi - glo)
        if lo <= t_sec <= hi:
            t_best = t_sec
    residual = abs(g(t_best))
    alt = abs(g(0.5 * (lo + hi)))
    if alt < residual:
        t_best, residual = 0.5 * (lo + hi), alt
    if residual > 1e-10:
        raise ConvergenceError(
            f"saddle(n={n}, k={k}) residual {residual:.3e} after bisection"
        )
    return SaddleResult(n, k, t_best, residual)


# ======================================================================
# major arcs
# ======================================================================


def major_arc_ratio(
    p: int, q: int, t: float, Theta: float, cfg: SeriesConfig = DEFAULT_CONFIG
) -> tuple[complex, complex]:
    """Measured vs predicted major-arc ratio at the cusp p/q:

        measured  = F(t(1 - i Theta) + 2 pi i p/q) / F(t)
        predicted = 1/(q^2 (1 - i Theta)).

    The measured value evaluates F_complex at theta = 2 pi p/q + t Theta
    and normalizes by the same truncated series at theta = 0."""
    if q < 1 or p < 0 or math.gcd(p, q) != 1:
        raise DomainError("major_arc_ratio requires coprime p, q with q >= 1")
    if not 0 < t <= 1e-3:
        raise DomainError("major_arc_ratio requires 0 < t <= 1e-3")
    if abs(Theta) > 50:
        raise DomainError("major_arc_ratio requires |Theta| <= 50")
    theta = 2 * pi * p / q + t * Theta
    measured = F_complex(t, theta, cfg) / F_complex(t, 0.0, cfg)
    predicted = 1 / (q * q * (1 - 1j * Theta))
    return measured, predicted


def gamma_arc_error_budget(k: int, window: float, step: float) -> float:
    """Analytic error budget for gamma_arc_integral: truncation of the two
    tails, 2 window^{1-k}/(k-1), plus the trapezoid bound (h^2/12) int|f''|
    with int|f''| <= 2k + 2(k+1) + 2k^2/(k-1)."""
    if k < 2:
        raise DomainError("gamma_arc_error_budget requires k >= 2")
    tail = 2 * window ** (1 - k) / (k - 1)
    curvature = 2 * k + 2 * (k + 1) + 2 * k * k / (k - 1)
    return tail + step * step / 12 * curvature


def gamma_arc_integral(
    k: int, window: float = 20_000.0, step: float = 0.02
) -> tuple[float, float]:
    """Trapezoid value of int_{-window}^{window} Re[e^{-ik Theta}
    (1 - i Theta)^{-k}] dTheta against the closed form 2 pi k^{k-1}/(e^k (k-1)!).

    The imaginary part cancels by conjugate symmetry. k = 1 is rejected:
    the integral is only conditionally defined there."""
    if k < 2:
        raise DomainError("gamma_arc_integral requires k >= 2")
    if window <= 0 or step <= 0 or step > window:
        raise DomainError("gamma_arc_integral requires 0 < step <= window")
    N = int(math.ceil(window / step))
    grid = np.arange(-N, N + 1, dtype=np.float64) * step
    f = np.exp(-1j * k * grid) * (1 - 1j * grid) ** (-k)
    numeric = float(np.trapezoid(f.real, dx=step))
    closed = 2 * pi * k ** (k - 1) / (math.exp(k) * math.factorial(k - 1))
    return numeric, closed


# ======================================================================
# the landscape and its Farey overlay
# ======================================================================


@dataclass(frozen=True)
class LandscapeSample:
    """One theta-grid point of the Figure landscape.

    log_norm_sq = ln(|F(t - i theta)|^2 / F(t)^2), cos_phi = cos of the
    phase of F(t - i theta)/F(t), is_peak = (cos_phi > 0.99)."""

    theta: float
    log_norm_sq: float
    cos_phi: float
    is_peak: bool


def landscape(
    t: float, theta_count: int = DESK_THETA_COUNT, cfg: SeriesConfig = DEFAULT_CONFIG
) -> list[LandscapeSample]:
    """Samples of the cusp landscape on the uniform grid theta_j = j pi/M,
    j = 1..M (the negative half follows by conjugate symmetry).

    All M values of the truncated series are evaluated in one FFT: with
    a_n = sigma_{-1}(n) e^{-nt} and L = 2M,

        F(t - i theta_j) = sum_n a_n e^{2 pi i n j / L},

    so folding a_n into residue classes mod L and applying an inverse FFT
    of length L yields every grid value exactly (up to float rounding).
    The normalization F(t) is the same truncated sum, so log_norm_sq -> 0
    as theta -> 0."""
    if t <= 0:
        raise DomainError("landscape requires t > 0")
    if theta_count < 1:
        raise DomainError("landscape requires theta_count >= 1")
    if theta_count > MAX_THETA_COUNT:
        raise ResourceLimitError(f"theta_count capped at {MAX_THETA_COUNT}")
    M = theta_count
    L = 2 * M
    n = np.arange(1, cfg.terms + 1, dtype=np.float64)
    a = _weights(cfg.terms) * np.exp(-t * n)
    folded = np.zeros(L, dtype=np.float64)
    np.add.at(folded, np.arange(1, cfg.terms + 1) % L, a)
    values = np.fft.ifft(folded) * L
    F0 = float(folded.sum())
    ratio = values[1 : M + 1] / F0
    mod = np.abs(ratio)
    log_norm_sq = 2.0 * np.log(mod)
    cos_phi = np.clip(ratio.real / mod, -1.0, 1.0)
    theta = np.arange(1, M + 1, dtype=np.float64) * (pi / M)
    peaks = cos_phi > 0.99
    return [
        LandscapeSample(float(theta[i]), float(log_norm_sq[i]), float(cos_phi[i]), bool(peaks[i]))
        for i in range(M)
    ]


def refined_peaks(samples: list[LandscapeSample], half_window: int = 3) -> list[bool]:
    """Refined peak rule: is_peak and log_norm_sq a strict local maximum
    over the +-half_window neighborhood (truncated at the ends)."""
    m = len(samples)
    out = [False] * m
    for i, s in enumerate(samples):
        if not s.is_peak:
            continue
        lo = max(0, i - half_window)
        hi = min(m, i + half_window + 1)
        v = s.log_norm_sq
        if all(samples[j].log_norm_sq < v for j in range(lo, hi) if j != i):
            out[i] = True
    return out


def farey_overlay(Q: int) -> list[tuple[FareyFraction, float]]:
    """(p/q, -4 ln q) for every Farey fraction with denominator <= Q,
    endpoints 0/1 and 1/1 included; the overlay panel of the landscape."""
    if Q < 1:
        raise DomainError("farey_overlay requires Q >= 1")
    return [(f, -4.0 * log(f.q)) for f in farey(Q, include_endpoints=True)]


# ======================================================================
# the circle-method ansatz for alpha
# ======================================================================


def ansatz_alpha(n: int, k: int, Q: int) -> float:
    """Truncated major-arc ansatz

        alpha(n,k) ~ n^{k-1} zeta(2)^k / (k-1)! * sum_{q<=Q} c_q(n)/q^{2k};

    as Q -> oo the q-sum converges to sigma_{-2k+1}(n)/zeta(2k), recovering
    the leading-order model beta(n,k). Only the truncation is reported; the
    minor arcs are not modeled."""
    if k < 2:
        raise DomainError("ansatz_alpha requires k >= 2")
    if n < 1 or Q < 1:
        raise DomainError("ansatz_alpha requires n, Q >= 1")
    prefactor = float(n) ** (k - 1) * zeta(2).value ** k / math.factorial(k - 1)
    return prefactor * ramanujan_series_partial(k, n, Q)
