"""Divisibility and regularity filters, sieve generators, prime-power sums."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError
from .rational import IntSet, fraction_sum
from .sieve import FactorTable, exact_prime_powers, omega


@dataclass(frozen=True)
class FilterSpec:
    """Threshold bundle for the three element filters.

    y..z is the small-divisor-pair window, smooth_bound caps exact
    prime-power divisors, and [omega_lo, omega_hi] brackets the number of
    distinct prime factors.
    """

    smooth_bound: float
    y: float
    z: float
    omega_lo: float
    omega_hi: float

    def __post_init__(self):
        if not 1 <= self.y <= self.z:
            raise DomainError(f"need 1 <= y <= z, got y={self.y}, z={self.z}")
        if self.omega_lo > self.omega_hi:
            raise DomainError("omega_lo must not exceed omega_hi")
        if self.smooth_bound < 2:
            raise DomainError("smooth_bound must be >= 2")

    @classmethod
    def for_scale(cls, N: int) -> "FilterSpec":
        """Named preset with thresholds tied to N via natural logarithms.

        y = 1, z = (ln N)^(1/500), smoothness cap N^(1 - 6/ln ln N), and
        omega window [0.99 ln ln N, 2 ln ln N].  At desk-scale N the
        smoothness exponent is negative, so the cap is clamped to 2 (the
        smallest value admitting any integer at all).
        """
        if N < 16:
            raise DomainError("preset needs N >= 16 so that ln ln N > 0")
        ll = math.log(math.log(N))
        return cls(
            smooth_bound=max(2.0, N ** (1 - 6 / ll)),
            y=1.0,
            z=math.log(N) ** (1 / 500),
            omega_lo=0.99 * ll,
            omega_hi=2 * ll,
        )

    def admits(self, n: int, t: FactorTable) -> bool:
        return (
            passes_smoothness(n, self.smooth_bound, t)
            and has_divisor_pair(n, self.y, self.z)
            and omega_in_range(n, self.omega_lo, self.omega_hi, t)
        )


def passes_smoothness(n: int, bound: float, t: FactorTable) -> bool:
    """True iff every exact prime-power divisor of n is <= bound."""
    return all(q <= bound for q in exact_prime_powers(n, t))


def has_divisor_pair(n: int, y: float, z: float, t: FactorTable | None = None) -> bool:
    """True iff n has divisors d1, d2 with y <= d1 and 4*d1 <= d2 <= z.

    Only divisors <= z matter (d2 <= z forces d1 <= z/4), so the scan is
    O(z) regardless of the size of n.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    top = min(n, math.floor(z))
    d1_min = 0
    d2_max = 0
    for d in range(1, top + 1):
        if n % d == 0:
            if d >= y and d1_min == 0:
                d1_min = d
            d2_max = d
    return d1_min != 0 and 4 * d1_min <= d2_max


def omega_in_range(n: int, lo: float, hi: float, t: FactorTable) -> bool:
    """True iff lo <= omega(n) <= hi."""
    w = omega(n, t)
    return lo <= w <= hi


def sieve_survivors(lo: int, hi: int, y: float, z: float, t: FactorTable) -> IntSet:
    """Integers in [lo, hi] with no prime factor p in the closed window [y, z]."""
    if not 1 <= lo <= hi:
        raise RangeError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi > t.bound:
        raise RangeError(f"hi={hi} exceeds table bound {t.bound}")
    width = hi - lo + 1
    alive = bytearray(b"\x01") * width
    for p in t.primes_between(max(y, 2), min(z, hi)):
        start = ((lo + p - 1) // p) * p
        if start <= hi:
            count = (hi - start) // p + 1
            alive[start - lo :: p] = b"\x00" * count
    return IntSet(lo + i for i in range(width) if alive[i])


def two_prime_pair_set(hi: int, y: float, z: float, t: FactorTable) -> IntSet:
    """Integers <= hi divisible by two distinct primes p1 < p2 in [y, z] with 4*p1 < p2."""
    if hi < 1:
        raise RangeError(f"hi must be >= 1, got {hi}")
    if hi > t.bound:
        raise RangeError(f"hi={hi} exceeds table bound {t.bound}")
    ps = t.primes_between(max(y, 2), min(z, hi))
    marked = bytearray(hi + 1)
    for i, p1 in enumerate(ps):
        for p2 in ps[i + 1 :]:
            if 4 * p1 < p2:
                step = p1 * p2
                if step > hi:
                    break
                count = hi // step
                marked[step :: step] = b"\x01" * count
    return IntSet(n for n in range(1, hi + 1) if marked[n])


def prime_powers_upto(X: int, t: FactorTable) -> list[int]:
    """All prime powers p^r <= X, ascending."""
    if X > t.bound:
        raise RangeError(f"X={X} exceeds table bound {t.bound}")
    out = []
    for p in t.primes_between(2, X):
        pk = p
        while pk <= X:
            out.append(pk)
            pk *= p
    out.sort()
    return out


def mertens_q_sum(X: int, t: FactorTable) -> Fraction:
    """Exact sum of 1/q over all prime powers q <= X."""
    if X > t.bound:
        raise RangeError(f"X={X} exceeds table bound {t.bound}")
    if X < 2:
        return Fraction(0)
    return fraction_sum((1, q) for q in prime_powers_upto(X, t))


def mertens_product(X: int, t: FactorTable) -> Fraction:
    """Exact product of (1 - 1/p)^(-1) = p/(p-1) over primes p <= X."""
    if X > t.bound:
        raise RangeError(f"X={X} exceeds table bound {t.bound}")
    terms = [(p, p - 1) for p in t.primes_between(2, X)]
    if not terms:
        return Fraction(1)
    # balanced pairwise products keep the big-integer operands similar in size
    while len(terms) > 1:
        merged = []
        for i in range(0, len(terms) - 1, 2):
            a, b = terms[i]
            c, d = terms[i + 1]
            merged.append((a * c, b * d))
        if len(terms) % 2:
            merged.append(terms[-1])
        terms = merged
    return Fraction(*terms[0])
