"""Integer and prime utilities underlying the arithmetic data generation.

Everything here is elementary number theory on machine-sized integers:
prime sieves, factorization good to ~10^16 (trial division plus Brent's
cycle-finding rho, with a deterministic Miller-Rabin certificate), the
Moebius function, and the Kronecker symbol.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10**6


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of |n|: ordered (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ps = [p for p, _ in self.factors]
        if ps != sorted(ps) or len(set(ps)) != len(ps):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def primes_upto(x: int) -> np.ndarray:
    """All primes <= x in increasing order, by sieve of Eratosthenes."""
    if x < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(x) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def primes_in_range(lo: int, hi: int) -> np.ndarray:
    """Primes p with lo <= p <= hi, by a segmented sieve.

    Supports hi up to ~10^18 as long as hi - lo stays moderate.
    """
    lo = max(lo, 2)
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    base = primes_upto(math.isqrt(hi))
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            seg[start - lo :: p] = False
    if lo <= 1:
        seg[: 2 - lo] = False
    return np.nonzero(seg)[0].astype(np.int64) + lo


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_brent(n: int) -> int:
    """A nontrivial factor of composite odd n, by Brent's variant of
    Pollard rho.  Deterministic: the polynomial constant is swept 1,2,3,...
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to factor {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _rho_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor |n| completely.  Trial division by small primes first, then
    rho for the 64-bit-sized cofactor."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 17
    # wheel over 17, 19, 23, ... up to the trial bound or sqrt(n)
    while p * p <= n and p <= _TRIAL_BOUND:
        if n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        else:
            p += 2
    if n > 1:
        _factor_into(n, out)
    return Factorization(tuple(sorted(out.items())))


def moebius(n: int) -> int:
    """mu(n): (-1)^k for squarefree n with k prime factors, else 0."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    if n == 1:
        return 1
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if len(f.factors) % 2 else 1


def moebius_sieve(x: int) -> np.ndarray:
    """mu(n) for all n <= x as an array indexed by n (index 0 unused).

    One sign flip per prime divisor, then square multiples zeroed.
    """
    mu = np.ones(x + 1, dtype=np.int8)
    for p in primes_upto(x):
        p = int(p)
        mu[p::p] *= -1
        if p * p <= x:
            mu[p * p :: p * p] = 0
    mu[0] = 0
    return mu


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides |n|."""
    if n == 0:
        raise ValueError("0 is not square-free or square-full")
    return factorize(n).is_squarefree()


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending Jacobi to all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # pull out the even part of n; (a|2) = 0, 1, -1 for a mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi via quadratic reciprocity
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None if a is a
    non-residue.  Tonelli-Shanks; deterministic non-residue search."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if kronecker(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while kronecker(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def icbrt(n: int) -> int:
    """Integer cube root: the largest r with r^3 <= n (n >= 0)."""
    if n < 0:
        raise ValueError("icbrt requires n >= 0")
    if n == 0:
        return 0
    r = int(round(n ** (1.0 / 3.0)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r
