"""Asymptotic predictors and convergence diagnostics for the d'Arcais triangle.

Three families of results are evaluated numerically:

  * the weighted-convolution asymptotic
        S^(a,b)_{-r,-s}(n) ~ B(a+1,b+1) * zeta(r+1)zeta(s+1)/zeta(r+s+2)
                             * n^{a+b+1} * sigma_{-r-s-1}(n),
  * the leading-order model beta(n,k) = C(k) n^{k-1} sigma_{-2k+1}(n) for
    alpha(n,k), with C(k) = zeta(2)^k/((k-1)! zeta(2k)), and the convergence
    diagnostic rho(n,k) = alpha(n,k)/beta(n,k) -> 1,
  * liminf ratio limits for the log-concavity question: the limit is 0 at
    k = 2 (zeta(1) diverges) and a zeta product > 1 for k >= 3, bounded below
    by the elementary rational bound (2k^2-4k)/(2k^2-5k+3).

zeta values come from Euler-Maclaurin summation with a rigorous error bound;
even arguments are exactly rational multiples of pi^s via Bernoulli numbers,
which also makes C(k) itself an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gamma, log, exp, pi
import math

from .errors import DomainError, ResourceLimitError
from .numtheory import Factorization, as_factorization, primorial, ramanujan_sum, sigma
from .triangle import ConvolutionSpec, alpha, alpha_float, convolve

__all__ = [
    "ALPHA_EXACT_LIMIT",
    "BIG_C_MAX_K",
    "EULER_GAMMA",
    "ZetaValue",
    "ZetaPole",
    "ZETA_POLE",
    "AsymptoticReport",
    "exact_to_float",
    "bernoulli",
    "zeta_even_exact",
    "zeta",
    "big_C_exact",
    "big_C",
    "beta",
    "rho",
    "convolution_prediction",
    "convergence_report",
    "logconcavity_ratio_liminf",
    "calculus_lower_bound",
    "zeta_ratio_bound",
    "divisor_ratio",
    "primorial_liminf_trace",
    "ramanujan_series_partial",
    "ramanujan_tail_bound",
    "residue_class_power_sum",
    "robin_diagnostic",
]

EULER_GAMMA = 0.57721566490153286061  # Euler-Mascheroni, 20 digits

BIG_C_MAX_K = 150
ALPHA_EXACT_LIMIT = 400  # largest n served by the exact rational alpha path


def exact_to_float(x: Fraction) -> float:
    """Round-to-nearest float conversion with a relative-error assertion."""
    f = float(x)
    if x != 0 and math.isfinite(f) and f != 0.0:
        rel = abs(Fraction(f) - x) / abs(x)
        assert rel < Fraction(1, 10**14), f"float conversion lost {float(rel)} relative"
    return f


# ======================================================================
# zeta values
# ======================================================================


@dataclass(frozen=True)
class ZetaValue:
    """zeta(s) for real s > 1 with a rigorous error bound <= 1e-12."""

    s: int
    value: float
    error_bound: float


class ZetaPole:
    """Sentinel for the divergent value zeta(1).

    Kept out of float arithmetic entirely: the only consumer is the
    log-concavity ratio limit at k = 2, which maps it to an exact zero.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZETA_POLE"


ZETA_POLE = ZetaPole()


@lru_cache(maxsize=None)
def _bernoulli_list(m: int) -> tuple[Fraction, ...]:
    vals = [Fraction(1)]
    for j in range(1, m + 1):
        acc = Fraction(0)
        for i in range(j):
            acc += comb(j + 1, i) * vals[i]
        vals.append(-acc / (j + 1))
    return tuple(vals)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (B_1 = -1/2 convention). Exact rational."""
    if m < 0:
        raise DomainError("bernoulli requires m >= 0")
    return _bernoulli_list(m)[m]


def zeta_even_exact(s: int) -> Fraction:
    """zeta(s)/pi^s for even s >= 2: (-1)^{s/2+1} B_s 2^s / (2 s!). Exact."""
    if s < 2 or s % 2:
        raise DomainError("zeta_even_exact requires even s >= 2")
    j = s // 2
    val = Fraction((-1) ** (j + 1) * 2**s, 2 * factorial(s)) * bernoulli(s)
    assert val > 0
    return val


@lru_cache(maxsize=None)
def zeta(s) -> ZetaValue:
    """zeta(s), real s > 1, by Euler-Maclaurin summation:

        sum_{n<=M} n^-s + M^{1-s}/(s-1) - M^-s/2 + s M^{-s-1}/12,

    with M grown until the rigorous remainder bound
    s(s+1)(s+2) M^{-s-3}/360 drops below 1e-13. For even s the value is
    cross-asserted against the exact rational multiple of pi^s.
    """
    if s <= 1:
        raise DomainError("zeta requires real s > 1")
    M = 16
    while s * (s + 1) * (s + 2) * M ** (-s - 3.0) / 360.0 > 1e-13:
        M *= 2
    total = math.fsum(n ** (-float(s)) for n in range(1, M + 1))
    tail = M ** (1.0 - s) / (s - 1) - M ** (-float(s)) / 2 + s * M ** (-s - 1.0) / 12
    value = total + tail
    bound = s * (s + 1) * (s + 2) * M ** (-s - 3.0) / 360.0
    if s % 2 == 0 and s <= 30:
        closed = exact_to_float(zeta_even_exact(s)) * pi**s
        assert abs(value - closed) <= 1e-12, f"zeta({s}) disagrees with closed form"
    return ZetaValue(s, value, bound)


# ======================================================================
# the leading-order model beta and the diagnostic rho
# ======================================================================


@lru_cache(maxsize=None)
def big_C_exact(k: int) -> Fraction:
    """C(k) = zeta(2)^k/((k-1)! zeta(2k)) as an exact rational.

    The powers of pi cancel between zeta(2)^k and zeta(2k), leaving
    (1/6)^k / ((k-1)! * zeta(2k)/pi^{2k}).
    """
    if k < 1:
        raise DomainError("big_C requires k >= 1")
    if k > BIG_C_MAX_K:
        raise ResourceLimitError(f"big_C is limited to k <= {BIG_C_MAX_K}")
    return Fraction(1, 6) ** k / (factorial(k - 1) * zeta_even_exact(2 * k))


def big_C(k: int) -> float:
    """Float value of C(k); exactly 1.0 at k = 1, 2.5 at k = 2."""
    return exact_to_float(big_C_exact(k))


def beta(n: int, k: int) -> float:
    """beta(n,k) = C(k) * n^{k-1} * sigma_{-2k+1}(n), the model for alpha(n,k).

    Computed as one exact rational, floated once; strictly positive."""
    if n < 1 or k < 1:
        raise DomainError("beta requires n, k >= 1")
    exact = big_C_exact(k) * n ** (k - 1) * sigma(-2 * k + 1, n)
    value = exact_to_float(exact)
    assert value > 0.0
    return value


def rho(n: int, k: int) -> float:
    """Convergence diagnostic rho(n,k) = alpha(n,k)/beta(n,k) -> 1 as n grows.

    Exact rational alpha for n <= 400; the numpy convolution path above that
    (reduced alpha denominators grow like lcm(1..n)^k, far past exact reach).
    The two paths agree to 1e-9 on an overlap grid; rho(n,1) is exactly 1.0.
    """
    if k < 1 or k > n:
        raise DomainError("rho requires 1 <= k <= n")
    if n <= ALPHA_EXACT_LIMIT:
        num = exact_to_float(alpha(n, k))
    else:
        num = alpha_float(n, k)
    return num / beta(n, k)


# ======================================================================
# the weighted-convolution predictor
# ======================================================================


def convolution_prediction(a: int, b: int, r: int, s: int, n: int) -> float:
    """Predicted value of S^(a,b)_{-r,-s}(n):

        Gamma(a+1)Gamma(b+1)/Gamma(a+b+2) * zeta(r+1)zeta(s+1)/zeta(r+s+2)
          * n^{a+b+1} * sigma_{-r-s-1}(n),

    with the sigma factor evaluated exactly and floated once."""
    if a < 0 or b < 0:
        raise DomainError("convolution_prediction requires a, b >= 0")
    if r < 1 or s < 1:
        raise DomainError("convolution_prediction requires r, s >= 1")
    if n < 1:
        raise DomainError("convolution_prediction requires n >= 1")
    beta_factor = gamma(a + 1) * gamma(b + 1) / gamma(a + b + 2)
    zeta_factor = zeta(r + 1).value * zeta(s + 1).value / zeta(r + s + 2).value
    sig = exact_to_float(n ** (a + b + 1) * sigma(-r - s - 1, n))
    return beta_factor * zeta_factor * sig


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact-vs-predicted trace of S^(a,b)_{-r,-s} over an ascending n grid."""

    a: int
    b: int
    r: int
    s: int
    n_grid: tuple[int, ...]
    exact: tuple[float, ...]
    predicted: tuple[float, ...]
    ratio: tuple[float, ...]

    def __post_init__(self) -> None:
        if not (len(self.n_grid) == len(self.exact) == len(self.predicted) == len(self.ratio)):
            raise AssertionError("report columns must have equal length")
        if any(p <= 0 for p in self.predicted):
            raise AssertionError("predicted entries must be strictly positive")


MAX_CONVOLUTION_N = 10**6


def convergence_report(
    a: int, b: int, r: int, s: int, n_grid: list[int]
) -> AsymptoticReport:
    """Exact convolution vs prediction per grid point, with their ratio.

    r, s >= 1 index the negative-weight divisor sums sigma_{-r}, sigma_{-s}."""
    if list(n_grid) != sorted(set(n_grid)):
        raise DomainError("n_grid must be strictly ascending")
    if n_grid and n_grid[-1] > MAX_CONVOLUTION_N:
        raise ResourceLimitError(f"grid exceeds the cap n <= {MAX_CONVOLUTION_N}")
    exact = []
    predicted = []
    ratios = []
    for n in n_grid:
        e = exact_to_float(convolve(ConvolutionSpec(a, b, -r, -s, n)))
        p = convolution_prediction(a, b, r, s, n)
        exact.append(e)
        predicted.append(p)
        ratios.append(e / p)
    return AsymptoticReport(
        a, b, r, s, tuple(n_grid), tuple(exact), tuple(predicted), tuple(ratios)
    )


# ======================================================================
# log-concavity ratio limits
# ======================================================================


def _zeta_or_pole(s: int):
    return ZETA_POLE if s == 1 else zeta(s)


def logconcavity_ratio_liminf(k: int):
    """Limit of the alpha log-concavity ratio along n -> oo:

        k/(k-1) * zeta(2k+2)zeta(2k-2)/zeta(2k)^2
                * zeta(2k-1)^2/(zeta(2k-3)zeta(2k+1)).

    Returns exact int 0 at k = 2, where the zeta(2k-3) = zeta(1) pole kills
    the limit; for k >= 3 returns the float product, asserted > 1."""
    if k < 2:
        raise DomainError("ratio liminf requires k >= 2")
    z = _zeta_or_pole(2 * k - 3)
    if z is ZETA_POLE:
        return 0
    num = zeta(2 * k + 2).value * zeta(2 * k - 2).value * zeta(2 * k - 1).value ** 2
    den = zeta(2 * k).value ** 2 * z.value * zeta(2 * k + 1).value
    value = (k / (k - 1)) * num / den
    assert value > 1.0, f"ratio liminf must exceed 1 at k={k}"
    return value


def calculus_lower_bound(k: int) -> float:
    """Elementary lower bound (2k^2-4k)/(2k^2-5k+3) for the k >= 3 liminf."""
    if k < 3:
        raise DomainError("calculus_lower_bound requires k >= 3")
    return (2 * k * k - 4 * k) / (2 * k * k - 5 * k + 3)


def zeta_ratio_bound(k: int) -> float:
    """zeta(2k-1)^2/(zeta(2k-3)zeta(2k+1)), the proven lower bound for
    divisor_ratio at every n when k >= 3 (it is 0 when k = 2)."""
    if k < 2:
        raise DomainError("zeta_ratio_bound requires k >= 2")
    z = _zeta_or_pole(2 * k - 3)
    if z is ZETA_POLE:
        return 0.0
    return zeta(2 * k - 1).value ** 2 / (z.value * zeta(2 * k + 1).value)


def divisor_ratio(n: int | Factorization, k: int) -> Fraction:
    """Exact ratio sigma_{-2k+1}(n)^2 / (sigma_{-2k+3}(n) sigma_{-2k-1}(n)).

    Its liminf over n drives the log-concavity limit; for k >= 3 the value
    is asserted to exceed the zeta ratio bound (float margin 1e-10)."""
    if k < 2:
        raise DomainError("divisor_ratio requires k >= 2")
    fac = as_factorization(n)
    if fac.n < 1:
        raise DomainError("divisor_ratio requires n >= 1")
    num = sigma(-2 * k + 1, fac) ** 2
    den = sigma(-2 * k + 3, fac) * sigma(-2 * k - 1, fac)
    ratio = num / den
    if k >= 3:
        bound = zeta_ratio_bound(k)
        assert exact_to_float(ratio) > bound * (1 - 1e-10), (
            f"divisor ratio fell below the zeta bound at n={fac.n}, k={k}"
        )
    return ratio


MAX_TRACE_M = 25
MAX_TRACE_R = 50


def primorial_liminf_trace(k: int, m_max: int, r: int) -> list[tuple[int, float]]:
    """divisor_ratio along n = (p_m#)^r for m = 1..m_max, floated.

    Everything runs on symbolic factorizations, so the 3000-digit values of
    (p_25#)^50 never materialize as factored integers. For k = 2 the trace
    decreases toward 0; for k >= 3 it approaches the zeta ratio bound from
    above."""
    if k < 2:
        raise DomainError("primorial trace requires k >= 2")
    if m_max > MAX_TRACE_M or r > MAX_TRACE_R:
        raise ResourceLimitError(
            f"primorial trace capped at m_max <= {MAX_TRACE_M}, r <= {MAX_TRACE_R}"
        )
    if m_max < 1 or r < 1:
        raise DomainError("primorial trace requires m_max, r >= 1")
    out = []
    for m in range(1, m_max + 1):
        n = primorial(m).pow(r)
        out.append((m, exact_to_float(divisor_ratio(n, k))))
    return out


# ======================================================================
# Ramanujan-sum series and the residue-class power-sum check
# ======================================================================


def ramanujan_series_partial(k: int, n: int, Q: int) -> float:
    """Partial sum sum_{q<=Q} c_q(n)/q^{2k}; converges to
    sigma_{-2k+1}(n)/zeta(2k) as Q -> oo."""
    if k < 1:
        raise DomainError("ramanujan_series_partial requires k >= 1")
    if Q < 1:
        raise DomainError("ramanujan_series_partial requires Q >= 1")
    return math.fsum(ramanujan_sum(q, n) / q ** (2 * k) for q in range(1, Q + 1))


def ramanujan_tail_bound(k: int, Q: int) -> float:
    """Analytic bound on the omitted tail: since |c_q(n)| <= q,

        |sum_{q>Q} c_q(n)/q^{2k}| <= sum_{q>Q} q^{1-2k}
                                  <= Q^{2-2k}/(2k-2) + Q^{1-2k}.

    Valid for k >= 2."""
    if k < 2:
        raise DomainError("ramanujan_tail_bound requires k >= 2")
    return Q ** (2 - 2 * k) / (2 * k - 2) + Q ** (1 - 2 * k)


def residue_class_power_sum(
    a: float, b: float, k0: int, m: int, n: int
) -> tuple[float, float, float]:
    """Check of the residue-class power-sum estimate

        sum_{k = k0 mod m, 1<=k<=n} k^{a-1}(n-k)^{b-1}
            = (n^{a+b-1}/m) B(a,b) + O(n^{a+b-2}),   a, b >= 1,

    with B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b). Returns (lhs, main term,
    defect scaled by n^{2-a-b}); the scaled defect stays bounded in n."""
    if a < 1 or b < 1:
        raise DomainError("residue_class_power_sum requires a, b >= 1")
    if not (1 <= k0 <= m <= n):
        raise DomainError("residue_class_power_sum requires 1 <= k0 <= m <= n")
    terms = []
    for k in range(k0, n + 1, m):
        kk = float(k) ** (a - 1) if a != 1 else 1.0
        rr = float(n - k) ** (b - 1) if b != 1 else 1.0
        terms.append(kk * rr)
    lhs = math.fsum(terms)
    main = float(n) ** (a + b - 1) / m * (gamma(a) * gamma(b) / gamma(a + b))
    defect = (lhs - main) * float(n) ** (2 - a - b)
    return lhs, main, defect


# ======================================================================
# Robin-style abundance diagnostic
# ======================================================================


def robin_diagnostic(n: int | Factorization) -> tuple[float, float, bool]:
    """Compare sigma_{-1}(n) against e^gamma ln ln n + 0.6483/ln ln n.

    Returns (value, bound, holds). The bound is the classical effective
    envelope for the abundance index, used here as the O(ln ln n) control
    on sigma_{-1} that keeps beta(n,k) within polynomial range."""
    fac = as_factorization(n)
    if fac.n < 3:
        raise DomainError("robin_diagnostic requires n >= 3")
    value = exact_to_float(sigma(-1, fac))
    loglog = log(log(fac.n))
    bound = exp(EULER_GAMMA) * loglog + 0.6483 / loglog
    return value, bound, value < bound
