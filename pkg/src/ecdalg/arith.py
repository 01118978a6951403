"""Exact integer number theory: factorization, totients, multiplicative orders.

All routines are deterministic: primality uses a fixed Miller-Rabin witness
set (proven exact below 2^64), and Pollard rho uses Brent cycle detection
with a fixed polynomial sequence.  Inputs are capped at 128 bits; this
library targets desk-scale algebra, not cryptographic factoring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    FactorizationBudgetExceeded,
    IntegerBudgetExceeded,
    NotCoprime,
    TooManyDivisors,
)

INT_BIT_BUDGET = 127
TRIAL_DIVISION_BOUND = 100_000
DEFAULT_RHO_ITERATION_CAP = 1 << 24
DEFAULT_DIVISOR_CAP = 10 ** 6

# Exact for all n < 2^64 (and a strong probabilistic test above).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_budget(n: int) -> None:
    if n.bit_length() > INT_BIT_BUDGET:
        raise IntegerBudgetExceeded(
            f"{n} exceeds the {INT_BIT_BUDGET}-bit working range"
        )


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below TRIAL_DIVISION_BOUND via a plain sieve."""
    bound = TRIAL_DIVISION_BOUND
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin with the fixed 12-witness set."""
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
    for a in _MR_WITNESSES:
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


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization: value = prod(p**m for p, m in factors)."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        recomposed = 1
        for p, m in self.factors:
            recomposed *= p ** m
        if recomposed != self.value:
            raise ValueError(f"factors do not recompose to {self.value}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factor primes must be strictly increasing")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            f"{p}^{m}" if m > 1 else str(p) for p, m in self.factors
        )


def _brent_rho(n: int, iteration_cap: int) -> int:
    """One nontrivial factor of composite odd n, or raise on budget.

    Brent's variant with a deterministic sequence of polynomial constants,
    so repeated runs split identically.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        spent = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
            spent += r
            if spent > iteration_cap:
                raise FactorizationBudgetExceeded(
                    f"Pollard rho exceeded {iteration_cap} iterations on {n}"
                )
        if g == n:
            # Backtrack one step at a time to recover the factor.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationBudgetExceeded(f"Pollard rho failed to split {n}")


def _factor_into(n: int, out: dict[int, int], iteration_cap: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n, iteration_cap)
    _factor_into(d, out, iteration_cap)
    _factor_into(n // d, out, iteration_cap)


@lru_cache(maxsize=4096)
def factorize(n: int, iteration_cap: int = DEFAULT_RHO_ITERATION_CAP) -> Factorization:
    """Complete prime factorization of n, 2 <= n < 2^127.

    Trial division below TRIAL_DIVISION_BOUND, Pollard rho (Brent) above.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    _check_budget(n)
    found: dict[int, int] = {}
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
    if rest > 1:
        if rest < TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND or is_prime(rest):
            found[rest] = found.get(rest, 0) + 1
        else:
            _factor_into(rest, found, iteration_cap)
    return Factorization(n, tuple(sorted(found.items())))


def euler_phi(n: int) -> int:
    """Euler's totient: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    _check_budget(n)
    if n == 1:
        return 1
    result = n
    for p in factorize(n).primes:
        result -= result // p
    return result


def carmichael_lambda(n: int) -> int:
    """Exponent of the unit group (Z/n)^*."""
    if n < 1:
        raise ValueError(f"carmichael_lambda requires n >= 1, got {n}")
    if n == 1:
        return 1
    result = 1
    for p, m in factorize(n).factors:
        if p == 2 and m >= 3:
            block = 1 << (m - 2)
        else:
            block = p ** (m - 1) * (p - 1)
        result = math.lcm(result, block)
    return result


def mul_order(a: int, n: int) -> int:
    """Least m >= 1 with a^m = 1 (mod n).

    Strips prime factors from the Carmichael exponent lambda(n) instead of
    scanning, so it scales with the factorization, not with the answer.
    """
    if n < 1:
        raise ValueError(f"mul_order requires n >= 1, got {n}")
    _check_budget(n)
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1, no multiplicative order")
    m = carmichael_lambda(n)
    for p in iter_prime_factors(m):
        while m % p == 0 and pow(a, m // p, n) == 1:
            m //= p
    return m


def mul_order_by_scan(a: int, n: int, limit: int = 10 ** 6) -> int:
    """Linear-scan multiplicative order; independent check used in tests."""
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1, no multiplicative order")
    x = a
    for m in range(1, limit + 1):
        if x == 1:
            return m
        x = x * a % n
    raise ValueError(f"order of {a} mod {n} not found within {limit} steps")


def divisors(f: Factorization, cap: int = DEFAULT_DIVISOR_CAP) -> list[int]:
    """All positive divisors of f.value in increasing order."""
    count = 1
    for _, m in f.factors:
        count *= m + 1
    if count > cap:
        raise TooManyDivisors(f"{f.value} has {count} divisors, cap is {cap}")
    divs = [1]
    for p, m in f.factors:
        powers = [p ** k for k in range(1, m + 1)]
        divs += [d * pk for d in divs for pk in powers]
    divs.sort()
    return divs


def prime_power_parts(q: int) -> tuple[int, int]:
    """Split a prime power q = p^alpha into (p, alpha); ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    _check_budget(q)
    f = factorize(q)
    if len(f.factors) != 1:
        raise ValueError(f"{q} is not a prime power: {f}")
    return f.factors[0]


def iter_prime_factors(n: int) -> Iterator[int]:
    """Distinct prime factors of n in increasing order."""
    if n > 1:
        yield from factorize(n).primes
