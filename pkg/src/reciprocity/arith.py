"""Exact arithmetic substrate: validated odd primes, reduced rationals,
modular exponentiation and deterministic primality.

Python integers never overflow, so the 2^31 / 2^63 bounds below are
contracts on the inputs rather than machine limits. The numpy kernels in
:mod:`reciprocity.lemmas` rely on the 2^31 bound to stay inside int64.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Union

PRIME_BOUND = 1 << 31
MODULUS_BOUND = 1 << 63

# A Legendre or Jacobi symbol value.
Symbol = Literal[-1, 0, 1]

# Fraction keeps itself reduced with a positive denominator.
Rational = Fraction

# Strong-pseudoprime witnesses that decide primality for every n < 3.18e23.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class ConsistencyError(ArithmeticError):
    """Two routes that must agree produced different results."""


def rational(num: Union[int, str, Fraction], den: int = 1) -> Fraction:
    """Build a reduced rational from ``num/den`` or a ``"u/v"`` string."""
    if isinstance(num, str):
        if den != 1:
            raise DomainError("pass either a 'u/v' string or num, den")
        try:
            return Fraction(num)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {num!r}") from exc
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def rational_floor(x: Fraction) -> int:
    """Greatest integer <= x, exact (rounds toward -inf)."""
    return x.numerator // x.denominator


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` by right-to-left square-and-multiply."""
    if modulus <= 0:
        raise DomainError(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be nonnegative, got {exp}")
    result = 1 % modulus
    base %= modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def _strong_probable_prime(n: int, d: int, s: int, witness: int) -> bool:
    x = mod_pow(witness, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n < 2^64."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d & 1 == 0:
        d >>= 1
        s += 1
    return all(_strong_probable_prime(n, d, s, w) for w in _WITNESSES)


class OddPrime(int):
    """An odd prime 3 <= p < 2^31.

    The upper bound keeps every ``2*q*a`` with ``a < p/2`` below 2^62.
    """

    def __new__(cls, value: int) -> "OddPrime":
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"expected an integer, got {value!r}")
        if not 3 <= value < PRIME_BOUND:
            raise DomainError(f"{value} is outside [3, 2^31)")
        if not is_prime(value):
            raise DomainError(f"{value} is not prime")
        return super().__new__(cls, value)

    @property
    def half(self) -> int:
        """Size of the half system, (p - 1) / 2."""
        return (self - 1) // 2


def odd_primes_upto(limit: int) -> list[int]:
    """Odd primes p with 3 <= p <= limit, by the sieve of Eratosthenes."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i in range(3, limit + 1, 2) if sieve[i]]
