"""Integer arithmetic helpers: factorization and the usual multiplicative functions.

Everything downstream (multiplicative orders, character index sets, density
bounds) leans on exact factorizations, so inputs are capped at 2^63 - 1 where
the deterministic Miller-Rabin witness set is provably correct and Brent's rho
stays in the millisecond range.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .util import CapExceeded, derive_rng

INPUT_CAP = 2**63 - 1

_TRIAL_BOUND = 10_000

# Witnesses making Miller-Rabin deterministic for all n < 3.3e24 (covers 2^64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = _sieve(_TRIAL_BOUND)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n below the 63-bit input cap."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n, rng):
    # Brent's cycle variant with batched gcds; n odd composite, no factor <= _TRIAL_BOUND.
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
        if g != n:
            return g
        # unlucky cycle swallowed every factor at once: retry with fresh (y, c)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of `value`, exponents sorted by prime."""

    value: int
    factors: tuple  # ((prime, exponent), ...)

    def prime_list(self):
        return [p for p, _ in self.factors]


@lru_cache(maxsize=1 << 16)
def factorize(m: int) -> Factorization:
    """Factor m exactly.  m = 1 gives the empty factorization.

    Trial division over a fixed small-prime table, then deterministic
    Miller-Rabin plus Brent's rho on whatever survives.  The rho stream is
    seeded from m itself so repeated calls agree.
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise ValueError("factorize expects an int")
    if m <= 0:
        raise ValueError("factorize requires m >= 1")
    if m > INPUT_CAP:
        raise CapExceeded(f"factorize input {m} exceeds 2^63 - 1")
    counts = {}
    rest = m
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    if rest > 1:
        if rest <= _TRIAL_BOUND * _TRIAL_BOUND or is_prime(rest):
            # below the square of the trial bound any survivor is prime
            counts[rest] = counts.get(rest, 0) + 1
        else:
            stack = [rest]
            rng = derive_rng(m, "rho")
            while stack:
                v = stack.pop()
                if is_prime(v):
                    counts[v] = counts.get(v, 0) + 1
                    continue
                d = _brent_rho(v, rng)
                stack.append(d)
                stack.append(v // d)
    return Factorization(m, tuple(sorted(counts.items())))


def moebius(m: int) -> int:
    """Moebius mu: 0 on non-squarefree m, else (-1)^(number of prime factors)."""
    fac = factorize(m)
    for _, e in fac.factors:
        if e > 1:
            return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(m: int) -> int:
    fac = factorize(m)
    out = 1
    for p, e in fac.factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def squarefree_divisor_count(m: int) -> int:
    """W(m) = 2^(number of distinct primes) = count of squarefree divisors."""
    return 2 ** len(factorize(m).factors)


def divisors(n: int) -> list:
    """All positive divisors of n, ascending."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    out.sort()
    return out
