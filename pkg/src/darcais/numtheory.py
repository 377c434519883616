"""Exact multiplicative number theory.

Primes and factorization, divisor power sums sigma_p(n), extended gcd with a
canonical Bezout choice, Mobius and Euler phi, Ramanujan sums c_q(n), Dedekind
sums s(h,k), Farey sequences, the eta multiplier phase, and primorials.

Everything here is exact: integers are arbitrary precision and rationals are
`fractions.Fraction` (always lowest terms, denominator > 0). Floats appear only
in the unit-phase field of EtaMultiplier.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError, ResourceLimitError

__all__ = [
    "Factorization",
    "FareyFraction",
    "EtaMultiplier",
    "primes_up_to",
    "nth_primes",
    "factorize",
    "as_factorization",
    "divisors",
    "sigma",
    "sigma_weighted",
    "abundance_index",
    "totient",
    "mobius",
    "ramanujan_sum",
    "gcd_ext",
    "k0_residue",
    "dedekind_sum",
    "farey",
    "eta_multiplier",
    "primorial",
]

DEFAULT_FACTOR_BOUND = 10**6


# ======================================================================
# primes and factorization
# ======================================================================

_prime_cache: dict[int, list[int]] = {}


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by a plain Eratosthenes sieve. Cached per bound."""
    if bound < 2:
        return []
    cached = _prime_cache.get(bound)
    if cached is not None:
        return cached
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    out = [i for i in range(2, bound + 1) if sieve[i]]
    _prime_cache[bound] = out
    return out


def nth_primes(m: int) -> list[int]:
    """The first m primes."""
    if m < 1:
        raise DomainError("m must be >= 1")
    # p_m < m(ln m + ln ln m) for m >= 6; small m padded by the constant.
    bound = 15
    while True:
        ps = primes_up_to(bound)
        if len(ps) >= m:
            return ps[:m]
        bound *= 2


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition n = prod p_j^{a_j}, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("factorization requires n >= 1")
        prod = 1
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1:
                raise DomainError("factors must be ascending primes with exponents >= 1")
            last = p
            prod *= p**a
        if prod != self.n:
            raise DomainError("factor product does not equal n")

    def pow(self, r: int, max_bits: int | None = None) -> "Factorization":
        """Factorization of n^r; exponents scale, no refactoring needed."""
        if r < 1:
            raise DomainError("exponent must be >= 1")
        if max_bits is not None and r * self.n.bit_length() > max_bits:
            raise ResourceLimitError(
                f"n^{r} would exceed the {max_bits}-bit limit"
            )
        return Factorization(self.n**r, tuple((p, a * r) for p, a in self.factors))


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Factorization:
    """Factor n by trial division over sieved primes up to `bound`.

    A leftover cofactor c > 1 with c <= bound^2 is prime (it has no factor
    <= sqrt(c)); anything larger cannot be certified and raises
    ResourceLimitError rather than returning a wrong answer.
    """
    if n < 1:
        raise DomainError("factorize requires n >= 1")
    factors: list[tuple[int, int]] = []
    rem = n
    for p in primes_up_to(bound):
        if p * p > rem:
            break
        if rem % p == 0:
            a = 0
            while rem % p == 0:
                rem //= p
                a += 1
            factors.append((p, a))
    if rem > 1:
        if rem > bound * bound:
            raise ResourceLimitError(
                f"cofactor {rem} exceeds the trial-division bound {bound}^2"
            )
        factors.append((rem, 1))
    return Factorization(n, tuple(factors))


def as_factorization(n: "int | Factorization") -> Factorization:
    """Accept either a raw integer or a ready-made Factorization."""
    if isinstance(n, Factorization):
        return n
    return factorize(n)


def divisors(n: "int | Factorization") -> list[int]:
    """All positive divisors, ascending. Brute-force companion for tests."""
    fac = as_factorization(n)
    out = [1]
    for p, a in fac.factors:
        out = [d * p**e for d in out for e in range(a + 1)]
    return sorted(out)


# ======================================================================
# divisor power sums
# ======================================================================


def sigma(p: int, n: "int | Factorization"):
    """sigma_p(n) = sum of d^p over divisors d of n.

    Evaluated through the multiplicative product over prime powers:
        sigma_d(q^a) = (q^{d(a+1)} - 1)/(q^d - 1),  and a+1 when d = 0.
    Returns an int for p >= 0 and a Fraction for p < 0 (the relation
    sigma_{-p}(n) = sigma_p(n)/n^p makes the negative case rational).
    """
    fac = as_factorization(n)
    if p == 0:
        out = 1
        for _, a in fac.factors:
            out *= a + 1
        return out
    if p > 0:
        out = 1
        for q, a in fac.factors:
            out *= (q ** (p * (a + 1)) - 1) // (q**p - 1)
        return out
    out_fr = Fraction(1)
    for q, a in fac.factors:
        qp = Fraction(q) ** p
        out_fr *= (qp ** (a + 1) - 1) / (qp - 1)
    return out_fr


def sigma_weighted(p: int, q: int, n: "int | Factorization"):
    """sigma_p^{(q)}(n) = n^q * sigma_p(n), exact."""
    if q < 0:
        raise DomainError("weight exponent q must be >= 0")
    fac = as_factorization(n)
    return fac.n**q * sigma(p, fac)


def abundance_index(n: "int | Factorization") -> Fraction:
    """sigma_{-1}(n) = sigma_1(n)/n, the sum of reciprocals of divisors."""
    fac = as_factorization(n)
    return Fraction(sigma(1, fac), fac.n)


def totient(n: "int | Factorization") -> int:
    """Euler phi via the factorization."""
    fac = as_factorization(n)
    out = 1
    for p, a in fac.factors:
        out *= (p - 1) * p ** (a - 1)
    return out


def mobius(n: "int | Factorization") -> int:
    """Mobius mu: 0 on a squared factor, else (-1)^{number of primes}."""
    fac = as_factorization(n)
    if any(a > 1 for _, a in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def ramanujan_sum(q: int, n: int) -> int:
    """c_q(n) = sum of e^{2 pi i n p / q} over 1 <= p <= q with gcd(p,q) = 1.

    Computed by the closed form mu(q/g) * phi(q)/phi(q/g) with g = gcd(q,n);
    phi(q/g) divides phi(q), so the value is an exact integer.
    """
    if q < 1 or n < 1:
        raise DomainError("ramanujan_sum requires q, n >= 1")
    g = gcd(q, n)
    qg = q // g
    mu = mobius(qg)
    if mu == 0:
        return 0
    return mu * (totient(q) // totient(qg))


# ======================================================================
# gcd machinery
# ======================================================================


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, x, y) with a*x + b*y = g = gcd(a,b) > 0.

    The Bezout pair is canonicalized to the minimal |x| (so results are
    reproducible); when +v and -v both attain it, the positive x wins.
    This keeps |x| <= |b|/(2g) whenever b != 0.
    """
    if a == 0 and b == 0:
        raise DomainError("gcd_ext(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
    g, x0 = old_r, old_x
    if g < 0:
        g, x0 = -g, -x0
    if b != 0:
        step = abs(b) // g
        x0 %= step  # representative in [0, step); keeping it on a tie favors +x
        if 2 * x0 > step:
            x0 -= step
        y = (g - a * x0) // b
    else:
        y = 0
    return g, x0, y


def k0_residue(d: int, e: int, n: int) -> tuple[int, int] | None:
    """The residue class k0 (mod m) with d | k0 and e | (n - k0), m = d*e/(d,e).

    Built from a Bezout pair x*d + y*e = g as k0 = x*n*d/g. Such a class
    exists iff g = gcd(d,e) divides n; otherwise None. Returns (k0 mod m, m).
    """
    if d < 1 or e < 1 or n < 1:
        raise DomainError("k0_residue requires d, e, n >= 1")
    g, x, _ = gcd_ext(d, e)
    if n % g != 0:
        return None
    m = d * e // g
    k0 = (x * n * d // g) % m
    assert k0 % d == 0 and (n - k0) % e == 0
    return k0, m


# ======================================================================
# Dedekind sums and the eta multiplier
# ======================================================================


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h,k) = sum_{n=1}^{k-1} (n/k) * (hn/k - floor(hn/k) - 1/2), exactly.

    Requires gcd(h, k) = 1 (mod k), so hn/k is never an integer inside the
    range and the sawtooth subtlety at integers never arises.
    """
    if k < 1:
        raise DomainError("dedekind_sum requires k >= 1")
    if k > 1 and gcd(h % k, k) != 1:
        raise DomainError("dedekind_sum requires gcd(h, k) = 1")
    total = Fraction(0)
    for m in range(1, k):
        frac_part = Fraction(h * m % k, k)
        total += Fraction(m, k) * (frac_part - Fraction(1, 2))
    return total


@dataclass(frozen=True)
class EtaMultiplier:
    """Unit phase epsilon(a,b;c,d) attached to a matrix with ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int
    phase: complex

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError("matrix must satisfy ad - bc = 1")
        if abs(abs(self.phase) - 1.0) > 1e-12:
            raise DomainError("phase must be a unit complex number")


def eta_multiplier(a: int, b: int, c: int, d: int) -> EtaMultiplier:
    """The two-case multiplier phase:

        epsilon = e^{i pi b / 12}                                  if c = 0, d = 1
        epsilon = e^{i pi ((a+d)/(12 c) - s(d,c) - 1/4)}           if c > 0

    The exponent is an exact rational multiple of pi (the Dedekind sum is
    exact); only the final complex exponential is floating point.
    """
    if a * d - b * c != 1:
        raise DomainError("eta_multiplier requires ad - bc = 1")
    if c < 0:
        raise DomainError("eta_multiplier requires c >= 0")
    if c == 0:
        if d != 1:
            raise DomainError("c = 0 requires d = 1")
        exponent = Fraction(b, 12)
    else:
        exponent = Fraction(a + d, 12 * c) - dedekind_sum(d, c) - Fraction(1, 4)
    phase = cmath.exp(1j * cmath.pi * float(exponent))
    return EtaMultiplier(a, b, c, d, phase)


# ======================================================================
# Farey sequences
# ======================================================================


@dataclass(frozen=True)
class FareyFraction:
    """Reduced fraction p/q with 0 <= p <= q. Ordering is numeric."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1 or self.p < 0 or self.p > self.q:
            raise DomainError("FareyFraction requires 0 <= p <= q, q >= 1")
        if gcd(self.p, self.q) != 1:
            raise DomainError("FareyFraction must be reduced")

    def __lt__(self, other: "FareyFraction") -> bool:
        return self.p * other.q < other.p * self.q

    @property
    def value(self) -> float:
        return self.p / self.q


def farey(Q: int, include_endpoints: bool = False) -> list[FareyFraction]:
    """All reduced p/q with q <= Q and 0 < p/q < 1, ascending.

    Generated by the standard next-term recurrence: from consecutive a/b, c/d
    the successor is ((j*c - a)/(j*d - b)) with j = floor((b + Q)/d).
    Endpoints 0/1 and 1/1 are attached only on request.
    """
    if Q < 1:
        raise DomainError("farey requires Q >= 1")
    out: list[FareyFraction] = []
    a, b, c, d = 0, 1, 1, Q
    while c <= Q:
        if a > 0:  # skip the 0/1 starting point
            out.append(FareyFraction(a, b))
        j = (b + Q) // d
        a, b, c, d = c, d, j * c - a, j * d - b
    # the loop emits terms up to (Q-1)/Q; the pivot 1/1 is the terminator
    if include_endpoints:
        return [FareyFraction(0, 1)] + out + [FareyFraction(1, 1)]
    return out


# ======================================================================
# primorials
# ======================================================================


def primorial(m: int, max_bits: int | None = None) -> Factorization:
    """Product of the first m primes, carried with its known factorization."""
    if m < 1:
        raise DomainError("primorial requires m >= 1")
    ps = nth_primes(m)
    n = 1
    bits = 0
    for p in ps:
        bits += p.bit_length()
        if max_bits is not None and bits > max_bits:
            raise ResourceLimitError(f"primorial({m}) exceeds the {max_bits}-bit limit")
        n *= p
    return Factorization(n, tuple((p, 1) for p in ps))
