"""Exact d'Arcais triangle and weighted divisor-sum convolutions.

The triangle A(2,n,k) collects the coefficients of x^k z^n/n! in the double
generating function ((z;z)_oo)^{-x} = exp(x*G(z)) with
G(z) = sum_{m>=1} (sigma_1(m)/m) z^m. The normalized values

    alpha(n,k) = k! * A(2,n,k) / n!  =  [z^n] G(z)^k

form the k-fold arithmetic convolution of the abundance index sigma_{-1}, and
equal the sum over compositions n = nu_1 + ... + nu_k of prod sigma_1(nu_j)/nu_j.

Two algorithmically distinct integer recurrences build the triangle and are
cross-asserted cell by cell:

  (a) layer recurrence in k on T(n,k) = n!*alpha(n,k):
        T(n,k) = sum_{m=1}^{n-k+1} sigma_1(m)*(m-1)!*C(n,m)*T(n-m,k-1)
      (split a composition at its first part),
  (b) row recurrence in n on the integer polynomials A_n(x) = sum_k A(2,n,k)x^k,
      from z d/dz exp(xG) = x z G'(z) exp(xG):
        A_n(x) = x * sum_{m=1}^{n} sigma_1(m) * (n-1)!/(n-m)! * A_{n-m}(x).

All triangle arithmetic is exact integers; alpha entries are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
import json

import numpy as np

from .errors import DomainError, ResourceLimitError
from .numtheory import abundance_index as abundance

__all__ = [
    "DarcaisTriangle",
    "ConvolutionSpec",
    "abundance",
    "alpha",
    "alpha_bruteforce",
    "alpha_float",
    "kfold_sigma_convolution",
    "partition_count",
    "darcais_triangle",
    "sigma_power_sieve",
    "convolve",
    "besge_rhs",
    "LogConcavityRecord",
    "logconcavity_scan",
    "triangle_to_json",
    "triangle_from_json",
    "triangle_to_csv",
]

DEFAULT_MAX_ROWS = 400
BRUTEFORCE_LIMIT = 18


# ======================================================================
# divisor-sum sieves (exact integers)
# ======================================================================

_sieve_cache: dict[int, list[int]] = {}


def sigma_power_sieve(p: int, bound: int) -> list[int]:
    """sigma_p(k) for k = 0..bound (index 0 unused), p >= 0, exact ints."""
    if p < 0:
        raise DomainError("sigma_power_sieve requires p >= 0")
    cached = _sieve_cache.get(p)
    if cached is not None and len(cached) > bound:
        return cached
    table = [0] * (bound + 1)
    for d in range(1, bound + 1):
        dp = d**p
        for m in range(d, bound + 1, d):
            table[m] += dp
    _sieve_cache[p] = table
    return table


# ======================================================================
# alpha: recurrence, brute force, k-fold convolution
# ======================================================================

# _alpha_layers[k] is the list [alpha(0,k), alpha(1,k), ..., alpha(N_k,k)]
_alpha_layers: list[list[Fraction]] = [[Fraction(1)]]


def _extend_alpha(n: int, k: int) -> None:
    while len(_alpha_layers) <= k:
        _alpha_layers.append([Fraction(0)])
    # layer 0 is [1, 0, 0, ...]
    layer0 = _alpha_layers[0]
    while len(layer0) <= n:
        layer0.append(Fraction(0))
    sig = sigma_power_sieve(1, n)
    for j in range(1, k + 1):
        layer, prev = _alpha_layers[j], _alpha_layers[j - 1]
        for m in range(len(layer), n + 1):
            if m < j:
                layer.append(Fraction(0))
                continue
            total = Fraction(0)
            for i in range(1, m - j + 2):
                t = prev[m - i]
                if t:
                    total += Fraction(sig[i], i) * t
            layer.append(total)


def alpha(n: int, k: int) -> Fraction:
    """alpha(n,k) by the first-part recurrence

        alpha(n,k) = sum_{m=1}^{n-k+1} (sigma_1(m)/m) * alpha(n-m, k-1),

    with alpha(0,0) = 1 and alpha(n,0) = 0 for n >= 1. Exact rational."""
    if n < 0 or k < 0:
        raise DomainError("alpha requires n, k >= 0")
    if k > n:
        raise DomainError("alpha requires k <= n")
    if len(_alpha_layers) <= k or len(_alpha_layers[k]) <= n:
        _extend_alpha(n, k)
    return _alpha_layers[k][n]


def alpha_bruteforce(n: int, k: int) -> Fraction:
    """Literal composition enumeration; independent oracle for alpha.

    Sums prod_j sigma_1(nu_j)/nu_j over all C(n-1, k-1) ordered compositions
    of n into k positive parts (cut-point enumeration). Guarded at n <= 18.
    """
    if n < 0 or k < 0:
        raise DomainError("alpha_bruteforce requires n, k >= 0")
    if k > n:
        raise DomainError("alpha_bruteforce requires k <= n")
    if n > BRUTEFORCE_LIMIT:
        raise ResourceLimitError(f"alpha_bruteforce is limited to n <= {BRUTEFORCE_LIMIT}")
    if k == 0:
        return Fraction(1) if n == 0 else Fraction(0)
    sig = sigma_power_sieve(1, n)
    weight = [Fraction(0)] + [Fraction(sig[m], m) for m in range(1, n + 1)]
    total = Fraction(0)
    for cuts in combinations(range(1, n), k - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (n,))]
        prod = Fraction(1)
        for part in parts:
            prod *= weight[part]
        total += prod
    return total


# _kfold_layers[k][m] caches the k-fold convolution at m; layer 1 is sigma_{-1}
_kfold_layers: list[list[Fraction]] = [[Fraction(1)]]


def kfold_sigma_convolution(k: int, n: int) -> Fraction:
    """k-fold arithmetic convolution sigma_{-1} * ... * sigma_{-1} at n.

    Built by iterated last-part convolution,

        c_k(m) = sum_{i=k-1}^{m-1} c_{k-1}(i) * sigma_{-1}(m-i),

    a code path separate from alpha's first-part recurrence; equality with
    alpha(n,k) is an invariant. Layers are cached, so sweeping every (k,n)
    pair below a bound costs one pass.
    """
    if k < 1:
        raise DomainError("kfold_sigma_convolution requires k >= 1")
    if n < k:
        raise DomainError("kfold_sigma_convolution requires n >= k")
    if len(_kfold_layers) > k and len(_kfold_layers[k]) > n:
        return _kfold_layers[k][n]
    sig = sigma_power_sieve(1, n)
    while len(_kfold_layers) <= k:
        _kfold_layers.append([Fraction(0)])
    base = _kfold_layers[1]
    for m in range(len(base), n + 1):
        base.append(Fraction(sig[m], m))
    for j in range(2, k + 1):
        layer, prev = _kfold_layers[j], _kfold_layers[j - 1]
        for m in range(len(layer), n + 1):
            if m < j:
                layer.append(Fraction(0))
                continue
            total = Fraction(0)
            for i in range(j - 1, m):
                c = prev[i]
                if c:
                    total += c * base[m - i]
            layer.append(total)
    return _kfold_layers[k][n]


def alpha_float(n: int, k: int) -> float:
    """Floating-point alpha(n,k) by numpy k-fold convolution.

    All terms are positive, so the relative error is ~1e-12 even at n = 10^4;
    this is the large-n path behind rho diagnostics where exact rationals are
    out of reach (reduced denominators grow like lcm(1..n)^k).
    """
    if n < 0 or k < 0 or k > n:
        raise DomainError("alpha_float requires 0 <= k <= n")
    if k == 0:
        return 1.0 if n == 0 else 0.0
    sig = sigma_power_sieve(1, n)
    base = np.zeros(n + 1)
    for m in range(1, n + 1):
        base[m] = sig[m] / m
    current = base
    for _ in range(k - 1):
        current = np.convolve(current, base)[: n + 1]
    return float(current[n])


# ======================================================================
# partition numbers (row-sum oracle)
# ======================================================================

_partitions: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence. Plumbing for row sums."""
    if n < 0:
        raise DomainError("partition_count requires n >= 0")
    while len(_partitions) <= n:
        m = len(_partitions)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * _partitions[m - g1]
            if g2 <= m:
                total += sign * _partitions[m - g2]
            j += 1
        _partitions.append(total)
    return _partitions[n]


# ======================================================================
# the triangle
# ======================================================================


@dataclass(frozen=True)
class DarcaisTriangle:
    """Tables A(2,n,k) (exact integers) and alpha(n,k) (exact rationals).

    Row n holds entries k = 0..n. A(2,0,0) = 1 and A(2,n,0) = 0 for n >= 1;
    every entry is a nonnegative integer with A(2,n,k) = n!*alpha(n,k)/k!.
    """

    N: int
    alpha: tuple[tuple[Fraction, ...], ...]
    A: tuple[tuple[int, ...], ...]

    def row_sum(self, n: int) -> int:
        return sum(self.A[n])


def _build_rows_by_n(N: int, sig: list[int]) -> list[list[int]]:
    """Construction (b): integer row polynomials A_n(x)."""
    rows: list[list[int]] = [[1]]
    for n in range(1, N + 1):
        acc = [0] * n  # coefficients of x^0..x^{n-1}, shifted by x at the end
        ff = 1  # (n-1)!/(n-m)! grown incrementally over m
        for m in range(1, n + 1):
            w = sig[m] * ff
            for j, c in enumerate(rows[n - m]):
                if c:
                    acc[j] += w * c
            ff *= n - m
        rows.append([0] + acc)
    return rows


def _build_layers_by_k(N: int, sig: list[int]) -> list[list[int]]:
    """Construction (a): T(n,k) = n!*alpha(n,k) by first-part splitting."""
    weight = [[0] * (N + 1) for _ in range(N + 1)]
    for n in range(1, N + 1):
        fm = 1  # (m-1)!
        for m in range(1, n + 1):
            weight[n][m] = sig[m] * fm * comb(n, m)
            fm *= m
    T = [[0] * (N + 1) for _ in range(N + 1)]
    T[0][0] = 1
    for k in range(1, N + 1):
        for n in range(k, N + 1):
            wn = weight[n]
            col = k - 1
            total = 0
            for m in range(1, n - k + 2):
                t = T[n - m][col]
                if t:
                    total += wn[m] * t
            T[n][k] = total
    return T


_triangle_cache: DarcaisTriangle | None = None


def darcais_triangle(N: int, max_rows: int = DEFAULT_MAX_ROWS) -> DarcaisTriangle:
    """Build the triangle through row N, verified two independent ways.

    The layer and row constructions above must agree on every cell, and
    every T(n,k) must be divisible by k! (integrality of A). A build is
    cached; smaller requests are served as slices of the largest build.
    """
    global _triangle_cache
    if N < 0:
        raise DomainError("darcais_triangle requires N >= 0")
    if N > max_rows:
        raise ResourceLimitError(f"triangle of {N} rows exceeds the cap {max_rows}")
    if _triangle_cache is not None and _triangle_cache.N >= N:
        if _triangle_cache.N == N:
            return _triangle_cache
        return DarcaisTriangle(
            N,
            _triangle_cache.alpha[: N + 1],
            _triangle_cache.A[: N + 1],
        )
    sig = sigma_power_sieve(1, max(N, 1))
    rows = _build_rows_by_n(N, sig)
    T = _build_layers_by_k(N, sig)
    fact = [factorial(i) for i in range(N + 1)]
    a_rows: list[tuple[int, ...]] = []
    alpha_rows: list[tuple[Fraction, ...]] = []
    for n in range(N + 1):
        arow = []
        frow = []
        for k in range(n + 1):
            q, rem = divmod(T[n][k], fact[k])
            if rem != 0:
                raise AssertionError(f"integrality failed at (n,k)=({n},{k})")
            if q != rows[n][k]:
                raise AssertionError(f"construction mismatch at (n,k)=({n},{k})")
            if q < 0:
                raise AssertionError(f"negative entry at (n,k)=({n},{k})")
            arow.append(q)
            frow.append(Fraction(T[n][k], fact[n]))
        a_rows.append(tuple(arow))
        alpha_rows.append(tuple(frow))
    tri = DarcaisTriangle(N, tuple(alpha_rows), tuple(a_rows))
    _triangle_cache = tri
    return tri


# ======================================================================
# weighted convolutions S^(a,b)_{r,s}(n)
# ======================================================================


@dataclass(frozen=True)
class ConvolutionSpec:
    """Parameters of S^(a,b)_{r,s}(n) = sum_{k<n} k^a sigma_r(k) (n-k)^b sigma_s(n-k)."""

    a: int
    b: int
    r: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise DomainError("convolution weights a, b must be >= 0")
        if self.n < 2:
            raise DomainError("convolution requires n >= 2 for a nonempty sum")


def _tree_sum(terms: list[Fraction]) -> Fraction:
    """Pairwise summation; far cheaper than left-to-right on growing lcm denominators."""
    if not terms:
        return Fraction(0)
    while len(terms) > 1:
        nxt = [terms[i] + terms[i + 1] for i in range(0, len(terms) - 1, 2)]
        if len(terms) % 2:
            nxt.append(terms[-1])
        terms = nxt
    return terms[0]


def convolve(spec: ConvolutionSpec) -> Fraction:
    """Exact S^(a,b)_{r,s}(n). Negative r or s makes terms rational via
    sigma_{-p}(k) = sigma_p(k)/k^p; each term is a single reduced Fraction."""
    a, b, r, s, n = spec.a, spec.b, spec.r, spec.s, spec.n
    sig_r = sigma_power_sieve(abs(r), n - 1)
    sig_s = sigma_power_sieve(abs(s), n - 1)
    terms: list[Fraction] = []
    for k in range(1, n):
        num = k**a * sig_r[k] * (n - k) ** b * sig_s[n - k]
        den = 1
        if r < 0:
            den *= k ** (-r)
        if s < 0:
            den *= (n - k) ** (-s)
        terms.append(Fraction(num, den))
    return _tree_sum(terms)


def besge_rhs(n: int) -> int:
    """(5*sigma_3(n) + (1-6n)*sigma_1(n))/12, the classical closed form for
    sum_{k<n} sigma_1(k) sigma_1(n-k). Exact integer; divisibility asserted."""
    if n < 1:
        raise DomainError("besge_rhs requires n >= 1")
    sig1 = sigma_power_sieve(1, n)
    sig3 = sigma_power_sieve(3, n)
    num = 5 * sig3[n] + (1 - 6 * n) * sig1[n]
    q, rem = divmod(num, 12)
    if rem != 0:
        raise AssertionError(f"Besge numerator not divisible by 12 at n={n}")
    return q


# ======================================================================
# log-concavity scan
# ======================================================================


@dataclass(frozen=True)
class LogConcavityRecord:
    n: int
    k: int
    a_ratio: Fraction  # A(2,n,k)^2 / (A(2,n,k-1) * A(2,n,k+1))
    alpha_ratio: Fraction  # same ratio on alpha; equals a_ratio * k/(k+1)
    holds: bool  # a_ratio >= 1


def logconcavity_scan(
    N: int, k_range: tuple[int, int] | None = None, max_rows: int = DEFAULT_MAX_ROWS
) -> list[LogConcavityRecord]:
    """Exact interior log-concavity ratios over rows n <= N.

    For each cell with 1 <= k-1 and k+1 <= n, reports the A-ratio, the
    alpha-ratio (A-ratio times k/(k+1)), and whether the A-ratio is >= 1.
    """
    tri = darcais_triangle(N, max_rows=max_rows)
    out: list[LogConcavityRecord] = []
    lo = 2 if k_range is None else max(2, k_range[0])
    for n in range(3, N + 1):
        hi = n - 1 if k_range is None else min(n - 1, k_range[1])
        for k in range(lo, hi + 1):
            row = tri.A[n]
            ratio = Fraction(row[k] * row[k], row[k - 1] * row[k + 1])
            out.append(
                LogConcavityRecord(n, k, ratio, ratio * Fraction(k, k + 1), ratio >= 1)
            )
    return out


# ======================================================================
# serialization (schemas documented in the cli module)
# ======================================================================


def triangle_to_json(tri: DarcaisTriangle) -> str:
    """Integers as decimal strings, rationals as "num/den" strings."""
    obj = {
        "max_row": tri.N,
        "rows": [
            {
                "n": n,
                "A": [str(v) for v in tri.A[n]],
                "alpha": [f"{v.numerator}/{v.denominator}" for v in tri.alpha[n]],
            }
            for n in range(tri.N + 1)
        ],
    }
    return json.dumps(obj, indent=1)


def triangle_from_json(text: str) -> DarcaisTriangle:
    obj = json.loads(text)
    a_rows = []
    alpha_rows = []
    for row in obj["rows"]:
        a_rows.append(tuple(int(v) for v in row["A"]))
        alpha_rows.append(tuple(Fraction(v) for v in row["alpha"]))
    return DarcaisTriangle(obj["max_row"], tuple(alpha_rows), tuple(a_rows))


def triangle_to_csv(tri: DarcaisTriangle) -> str:
    """Long format, one cell per line: n,k,A,alpha."""
    lines = ["n,k,A,alpha"]
    for n in range(tri.N + 1):
        for k in range(n + 1):
            v = tri.alpha[n][k]
            lines.append(f"{n},{k},{tri.A[n][k]},{v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"
