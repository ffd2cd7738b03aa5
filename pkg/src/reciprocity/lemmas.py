"""Executable form of each step in the Gauss-lemma / Hermite-identity proof
of quadratic reciprocity.

Notation: ``p = 2m + 1`` is an odd prime, ``A = {1, ..., m}`` its half
system, and ``q`` an integer coprime to ``p``. For each ``a`` in ``A`` the
residue ``r = qa mod p`` is written as ``eps * a'`` with ``eps = +-1`` and
``a'`` in ``A``.

Single-sum floors (``m_sum``, ``mu_sum``) use integer division on int64
columns. The lattice route (``mu_via_lattice``, ``lattice_complement``)
works with rationals instead, so the two sides of the final identity are
computed independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

import numpy as np

from .arith import (
    ConsistencyError,
    DomainError,
    OddPrime,
    rational_floor,
)

# Upper bound on the number of int64 cells a kernel materialises at once.
_CHUNK = 1 << 20

# With a < 2^30 this keeps 2qa below 2^63.
Q_BOUND = 1 << 32

RationalLike = Union[int, Fraction]


@lru_cache(maxsize=8192)
def _prime(p: int) -> OddPrime:
    return OddPrime(p)


def _check_int(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {value!r}")


def _check_coprime(q: int, p: int) -> OddPrime:
    p = _prime(p)
    _check_int("q", q)
    if not 1 <= q < Q_BOUND:
        raise DomainError(f"q={q} is outside [1, 2^32)")
    if q % p == 0:
        raise DomainError(f"p={p} divides q={q}: no half-system decomposition")
    return p


def _check_half(a: int, p: int) -> None:
    _check_int("a", a)
    if not 1 <= a <= (p - 1) // 2:
        raise DomainError(f"a={a} is not in the half system 1..{(p - 1) // 2}")


def _check_distinct(p: int, q: int) -> tuple[OddPrime, OddPrime]:
    p, q = _prime(p), _prime(q)
    if p == q:
        raise DomainError(f"p and q must be distinct primes, got p = q = {p}")
    return p, q


def _as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return Fraction(int(x))
    raise DomainError(f"expected an exact rational, got {x!r}")


def _sign(exponent: int) -> int:
    return -1 if exponent & 1 else 1


def _half_system(count: int, start: int = 1) -> Iterator[np.ndarray]:
    for lo in range(start, count + 1, _CHUNK):
        yield np.arange(lo, min(lo + _CHUNK, count + 1), dtype=np.int64)


def _floor_sum(coef: int, p: int) -> int:
    """sum over a in A of floor(coef * a / p)."""
    return sum(int(((coef * a) // p).sum()) for a in _half_system((p - 1) // 2))


# ---------------------------------------------------------------------------
# Gauss's lemma
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussTraceRow:
    a: int
    r: int
    eps: int
    a_prime: int
    floor_2qa: int
    floor_qa: int


_COLUMNS = ("a", "r", "eps", "a_prime", "floor_2qa", "floor_qa")


@dataclass(frozen=True, eq=False)
class GaussTrace:
    """Per-element data for one ``(q, p)`` pair, rows ordered by ``a``.

    The rows are held as int64 columns; :attr:`rows` materialises them.
    """

    p: int
    q: int
    columns: dict[str, np.ndarray]
    M: int
    mu: int
    symbol: int

    @property
    def rows(self) -> list[GaussTraceRow]:
        cols = [self.columns[name].tolist() for name in _COLUMNS]
        return [GaussTraceRow(*values) for values in zip(*cols)]

    @property
    def signs(self) -> list[int]:
        return self.columns["eps"].tolist()

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "rows": [
                dict(zip(_COLUMNS, values))
                for values in zip(*(self.columns[c].tolist() for c in _COLUMNS))
            ],
            "M": self.M,
            "mu": self.mu,
            "symbol": self.symbol,
        }

    def violations(self) -> list[str]:
        """Names of the trace invariants that fail (empty when sound)."""
        p, q = self.p, self.q
        m = (p - 1) // 2
        c = self.columns
        a, r, eps, a_prime = c["a"], c["r"], c["eps"], c["a_prime"]
        f2, f1 = c["floor_2qa"], c["floor_qa"]
        bad = []
        if len(a) != m or not np.array_equal(a, np.arange(1, m + 1)):
            bad.append("rows do not enumerate the half system in order")
            return bad
        if not np.array_equal(r, (q * a) % p) or r.min() <= 0:
            bad.append("r is not qa mod p in (0, p)")
        plus = (eps == 1) & (a_prime == r)
        minus = (eps == -1) & (a_prime == p - r)
        if not np.all(plus | minus):
            bad.append("r != eps * a' mod p")
        if not np.array_equal(np.sort(a_prime), a):
            bad.append("a' is not a permutation of A")
        halfness = f2 - 2 * f1
        if not np.array_equal(halfness, (2 * r > p).astype(np.int64)):
            bad.append("floor(2qa/p) - 2 floor(qa/p) is not the halfness of r")
        if self.M != int(f2.sum()) or self.mu != int(f1.sum()):
            bad.append("M or mu does not match the row sums")
        product = int(np.prod(eps)) if m else 1
        if not self.symbol == product == _sign(self.M):
            bad.append("symbol, prod(eps) and (-1)^M disagree")
        # M and mu share parity only when q - 1 is even
        if q & 1 and _sign(self.mu) != self.symbol:
            bad.append("(-1)^mu disagrees with the symbol for odd q")
        return bad

    def check(self) -> "GaussTrace":
        bad = self.violations()
        if bad:
            raise ConsistencyError(f"trace (q={self.q}, p={self.p}): " + "; ".join(bad))
        return self


def half_residue(q: int, p: int, a: int) -> tuple[int, int, int]:
    """Return ``(r, eps, a_prime)`` with ``r = qa mod p = eps * a_prime``."""
    p = _check_coprime(q, p)
    _check_half(a, p)
    r = q * a % p
    if 2 * r < p:
        return r, 1, r
    return r, -1, p - r


def gauss_sign_product(q: int, p: int) -> GaussTrace:
    """Full trace of the sign product over the half system of ``p``."""
    p = _check_coprime(q, p)
    m = p.half
    a = np.arange(1, m + 1, dtype=np.int64)
    qa = q * a
    r = qa % p
    upper = 2 * r > p
    eps = np.where(upper, -1, 1).astype(np.int64)
    a_prime = np.where(upper, p - r, r)
    floor_2qa = (2 * qa) // p
    floor_qa = qa // p
    columns = dict(
        a=a, r=r, eps=eps, a_prime=a_prime, floor_2qa=floor_2qa, floor_qa=floor_qa
    )
    symbol = int(np.prod(eps)) if m else 1
    return GaussTrace(
        p=int(p),
        q=int(q),
        columns=columns,
        M=int(floor_2qa.sum()),
        mu=int(floor_qa.sum()),
        symbol=symbol,
    )


def m_sum(q: int, p: int) -> int:
    """M = sum over a in A of floor(2qa / p)."""
    p = _check_coprime(q, p)
    return _floor_sum(2 * q, p)


def mu_sum(q: int, p: int) -> int:
    """mu = sum over a in A of floor(qa / p)."""
    p = _check_coprime(q, p)
    return _floor_sum(q, p)


def halfness_indicator(q: int, p: int, a: int) -> int:
    """floor(2qa/p) - 2 floor(qa/p): 1 when qa mod p lies above p/2, else 0."""
    p = _check_coprime(q, p)
    _check_half(a, p)
    return (2 * q * a) // p - 2 * ((q * a) // p)


def pairing_check(q: int, p: int, a: int) -> int:
    """floor(2qa/p) + floor(q(p - 2a)/p) for a paired index a > p/4.

    The two terms always sum to ``q - 1``, so each pair contributes an even
    amount to the parity of M.
    """
    p = _check_coprime(q, p)
    _check_half(a, p)
    # p is odd, so 4a == p never happens and the split of A is total.
    if 4 * a < p:
        raise DomainError(f"a={a} < p/4 is not a paired term")
    return (2 * q * a) // p + (q * (p - 2 * a)) // p


def pairing_sums(q: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """All paired indices ``a > p/4`` and their ``pairing_check`` values."""
    p = _check_coprime(q, p)
    a = np.arange(p // 4 + 1, p.half + 1, dtype=np.int64)
    return a, (2 * q * a) // p + (q * (p - 2 * a)) // p


# ---------------------------------------------------------------------------
# Hermite's identity
# ---------------------------------------------------------------------------


def _check_n(n: int) -> None:
    _check_int("n", n)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def _shifted_floors(x: Fraction, n: int) -> int:
    # floor(x + k/n) == (n*num + k*den) // (n*den), exactly
    num, den = x.numerator, x.denominator
    scaled, denom = n * num, n * den
    return sum((scaled + k * den) // denom for k in range(n))


def hermite_sum(x: RationalLike, n: int) -> int:
    """floor(x) + floor(x + 1/n) + ... + floor(x + (n-1)/n) for x >= 0."""
    x = _as_rational(x)
    _check_n(n)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    return _shifted_floors(x, n)


def hermite_defect(x: RationalLike, n: int) -> int:
    """Shifted floor sum minus floor(n x); identically zero.

    Negative ``x`` is accepted here since the difference is 1/n-periodic
    on the whole line.
    """
    x = _as_rational(x)
    _check_n(n)
    return _shifted_floors(x, n) - rational_floor(n * x)


# ---------------------------------------------------------------------------
# Lattice form of mu and nu
# ---------------------------------------------------------------------------


def _lattice_blocks(p: int, q: int) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Blocks of (t1, t2, s) over A x B with rows indexed by a, columns by b.

    Every rational a/p +- b/q is held over the common denominator pq, so
    ``floor(N / pq)`` is exact; all numerators stay below 2^63.
    """
    pq = p * q
    b = np.arange(1, (q - 1) // 2 + 1, dtype=np.int64)
    bp = (b * p)[None, :]
    rows = max(1, _CHUNK // max(1, len(b)))
    for lo in range(1, (p - 1) // 2 + 1, rows):
        a = np.arange(lo, min(lo + rows, (p - 1) // 2 + 1), dtype=np.int64)
        aq = (a * q)[:, None]
        t1 = (aq - bp + pq) // pq
        t2 = (bp - aq + pq) // pq
        s = (aq + bp) // pq
        yield t1, t2, s


def lattice_table(p: int, q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full (m x n) tables of floor(a/p - b/q + 1), floor(b/q - a/p + 1)
    and floor(a/p + b/q)."""
    p, q = _check_distinct(p, q)
    blocks = list(_lattice_blocks(p, q))
    if not blocks:
        empty = np.zeros((0, (q - 1) // 2), dtype=np.int64)
        return empty, empty, empty
    return tuple(np.concatenate(parts) for parts in zip(*blocks))


def mu_via_lattice(p: int, q: int) -> int:
    """sum over A x B of floor(a/p - b/q + 1); equals ``mu_sum(q, p)``."""
    p, q = _check_distinct(p, q)
    return sum(int(t1.sum()) for t1, _, _ in _lattice_blocks(p, q))


def lattice_complement(p: int, q: int, a: int, b: int) -> tuple[int, int]:
    """Return ``(floor(a/p - b/q + 1), floor(b/q - a/p + 1))``.

    Raises ConsistencyError if floor(a/p + b/q) is not 0.
    """
    p, q = _check_distinct(p, q)
    _check_half(a, p)
    _check_half(b, q)
    x, y = Fraction(a, p), Fraction(b, q)
    if rational_floor(x + y) != 0:
        raise ConsistencyError(f"floor({x} + {y}) != 0")
    return rational_floor(x - y + 1), rational_floor(y - x + 1)


# ---------------------------------------------------------------------------
# Reciprocity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReciprocityReport:
    p: int
    q: int
    mu: int
    nu: int
    sym_qp: int
    sym_pq: int
    exponent: int


def reciprocity_exponent(p: int, q: int) -> ReciprocityReport:
    """mu, nu and both symbols for distinct odd primes p, q.

    Raises ConsistencyError unless mu + nu = (p-1)/2 * (q-1)/2 and
    (q/p)(p/q) = (-1)^(mu + nu).
    """
    p, q = _check_distinct(p, q)
    mu = mu_sum(q, p)
    nu = mu_sum(p, q)
    report = ReciprocityReport(
        p=int(p),
        q=int(q),
        mu=mu,
        nu=nu,
        sym_qp=gauss_sign_product(q, p).symbol,
        sym_pq=gauss_sign_product(p, q).symbol,
        exponent=p.half * q.half,
    )
    if mu + nu != report.exponent:
        raise ConsistencyError(f"mu + nu = {mu + nu} != {report.exponent} for {report}")
    if report.sym_qp * report.sym_pq != _sign(mu + nu):
        raise ConsistencyError(f"(q/p)(p/q) != (-1)^(mu+nu) for {report}")
    return report


def reciprocity_product(p: int, q: int) -> int:
    """(-1)^(mu + nu) for distinct odd primes p, q."""
    p, q = _check_distinct(p, q)
    return _sign(mu_sum(q, p) + mu_sum(p, q))
