"""Legendre and Jacobi symbols.

``legendre_euler`` is the oracle. ``legendre_gauss`` goes through the Gauss
lemma traces, and ``jacobi`` is the fast reciprocity-driven algorithm.
"""

from __future__ import annotations

from .arith import MODULUS_BOUND, ConsistencyError, DomainError, is_prime, mod_pow
from .lemmas import _check_int, _prime, gauss_sign_product, m_sum, mu_sum

GAUSS_VARIANTS = ("sign-product", "m-sum", "mu-sum")


def _check_odd_modulus(n: int, name: str = "n") -> None:
    _check_int(name, n)
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"{name} must be a positive odd integer, got {n}")
    if n >= MODULUS_BOUND:
        raise DomainError(f"{name}={n} is not below 2^63")


def legendre_euler(a: int, p: int) -> int:
    """(a/p) by Euler's criterion, a^((p-1)/2) mod p.

    Primality of ``p`` is not tested; a power outside {1, p-1} raises
    ConsistencyError, which is how a composite modulus usually shows up.
    """
    _check_int("a", a)
    _check_odd_modulus(p, "p")
    if p < 3:
        raise DomainError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    power = mod_pow(a, (p - 1) >> 1, p)
    if power == 1:
        return 1
    if power == p - 1:
        return -1
    raise ConsistencyError(f"{a}^((p-1)/2) mod {p} = {power}: {p} is not prime")


def legendre_gauss(a: int, p: int, variant: str = "sign-product") -> int:
    """(a/p) through Gauss's lemma.

    ``sign-product`` multiplies the signs eps_a, ``m-sum`` and ``mu-sum``
    take (-1) to the corresponding floor sum. ``p | a`` gives 0.

    M and mu only agree in parity for odd multipliers, so ``mu-sum`` is
    evaluated at the odd representative of ``a`` in [1, 2p).
    """
    if variant not in GAUSS_VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; choose from {GAUSS_VARIANTS}")
    _check_int("a", a)
    p = _prime(p)
    a %= p
    if a == 0:
        return 0
    if variant == "sign-product":
        return gauss_sign_product(a, p).symbol
    if variant == "m-sum":
        total = m_sum(a, p)
    else:
        total = mu_sum(a if a & 1 else a + p, p)
    return -1 if total & 1 else 1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd 0 < n < 2^63, without factoring n.

    Factors of two are stripped with the (2/n) law and the arguments are
    swapped using reciprocity. A negative ``a`` is handled with the (-1/n)
    law. The two supplementary laws are standard results used alongside
    the reciprocity law itself.
    """
    _check_int("a", a)
    _check_odd_modulus(n)
    result = 1
    if a < 0:
        a = -a
        if n & 3 == 3:
            result = -result
    a %= n
    while a:
        twos = (a & -a).bit_length() - 1
        if twos:
            a >>= twos
            # (2/n) = -1 iff n = 3, 5 mod 8
            if twos & 1 and (n & 7) in (3, 5):
                result = -result
        # (a/n)(n/a) = -1 iff a = n = 3 mod 4
        if a & n & 2:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


ROUTES = ("euler", "gauss-sign", "m-sum", "mu-sum", "jacobi")


def symbol_routes(a: int, p: int) -> dict[str, int]:
    """The value of (a/p) by each of the five independent routes."""
    return {
        "euler": legendre_euler(a, p),
        "gauss-sign": legendre_gauss(a, p, "sign-product"),
        "m-sum": legendre_gauss(a, p, "m-sum"),
        "mu-sum": legendre_gauss(a, p, "mu-sum"),
        "jacobi": jacobi(a, p),
    }


def symbol_consensus(a: int, p: int) -> int:
    """(a/p) after checking that all five routes agree."""
    _check_int("p", p)
    if not is_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    values = symbol_routes(a, p)
    distinct = set(values.values())
    if len(distinct) != 1:
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        raise ConsistencyError(f"routes disagree on ({a}/{p}): {detail}")
    return distinct.pop()
