"""Exhaustive sweeps over prime pairs that check each lemma of the proof."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional

import numpy as np

from .arith import ConsistencyError, DomainError, odd_primes_upto
from .lemmas import (
    gauss_sign_product,
    hermite_defect,
    hermite_sum,
    lattice_table,
    m_sum,
    mu_sum,
    mu_via_lattice,
    pairing_sums,
    reciprocity_exponent,
    reciprocity_product,
)
from .symbols import legendre_euler

LEMMAS = ("gauss", "parity", "pairing", "hermite", "lattice", "reciprocity")

# Rational grid for the Hermite sweep: u/v with 0 <= u <= 300, 1 <= v <= 30.
HERMITE_MAX_NUM = 300
HERMITE_MAX_DEN = 30
HERMITE_MAX_N = 25

# The lattice route is quadratic per pair.
LATTICE_CAP = 200


@dataclass(frozen=True)
class VerificationReport:
    lemma: str
    range_bound: int
    pairs_checked: int
    failures: int
    first_counterexample: Optional[tuple[int, int, str]]
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        return (
            f"{self.lemma}\trange_bound={self.range_bound}\t"
            f"pairs_checked={self.pairs_checked}\tfailures={self.failures}\t"
            f"wall_time={self.wall_time:.3f}s"
        )


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


# Each pair check returns None when (p, q) passes, else a description.


def check_gauss(p: int, q: int) -> Optional[str]:
    trace = gauss_sign_product(q, p)
    bad = trace.violations()
    m, mu = m_sum(q, p), mu_sum(q, p)
    euler = legendre_euler(q, p)
    if trace.M != m or trace.mu != mu:
        bad.append(f"trace sums (M={trace.M}, mu={trace.mu}) != m_sum={m}, mu_sum={mu}")
    if not trace.symbol == _sign(m) == euler:
        bad.append(f"sign product {trace.symbol}, (-1)^M {_sign(m)}, Euler {euler}")
    return "; ".join(bad) or None


def check_parity(p: int, q: int) -> Optional[str]:
    m, mu = m_sum(q, p), mu_sum(q, p)
    if (m - mu) % 2:
        return f"M={m} and mu={mu} differ in parity"
    return None


def check_pairing(p: int, q: int) -> Optional[str]:
    a, sums = pairing_sums(q, p)
    wrong = np.flatnonzero(sums != q - 1)
    if len(wrong):
        i = wrong[0]
        return f"a={a[i]}: paired floors sum to {sums[i]}, not q-1={q - 1}"
    return None


def check_lattice(p: int, q: int) -> Optional[str]:
    m, n = (p - 1) // 2, (q - 1) // 2
    t1, t2, s = lattice_table(p, q)
    lat, mu = mu_via_lattice(p, q), mu_sum(q, p)
    if lat != mu:
        return f"lattice mu={lat} != mu_sum={mu}"
    if not np.all(t1 + t2 == 1):
        return "floor(a/p - b/q + 1) + floor(b/q - a/p + 1) != 1"
    if np.any(s != 0):
        return "floor(a/p + b/q) != 0"
    if int(t1.sum() + t2.sum()) != m * n:
        return f"lattice total {int(t1.sum() + t2.sum())} != {m * n}"
    return None


def check_reciprocity(p: int, q: int) -> Optional[str]:
    try:
        report = reciprocity_exponent(p, q)
    except ConsistencyError as exc:
        return str(exc)
    product = reciprocity_product(p, q)
    euler = legendre_euler(p, q) * legendre_euler(q, p)
    if not product == report.sym_qp * report.sym_pq == _sign(report.exponent) == euler:
        return (
            f"(-1)^(mu+nu)={product}, gauss product={report.sym_qp * report.sym_pq}, "
            f"(-1)^exponent={_sign(report.exponent)}, Euler product={euler}"
        )
    return None


PAIR_CHECKS: dict[str, Callable[[int, int], Optional[str]]] = {
    "gauss": check_gauss,
    "parity": check_parity,
    "pairing": check_pairing,
    "lattice": check_lattice,
    "reciprocity": check_reciprocity,
}


def hermite_grid() -> list[Fraction]:
    """Distinct reduced rationals u/v on the sweep grid, in increasing order."""
    values = {
        Fraction(u, v)
        for v in range(1, HERMITE_MAX_DEN + 1)
        for u in range(HERMITE_MAX_NUM + 1)
        if gcd(u, v) == 1
    }
    return sorted(values)


def check_hermite(x: Fraction, n: int) -> Optional[str]:
    defect = hermite_defect(x, n)
    if defect != 0:
        return f"f({x}) = {defect} with n={n}"
    lhs, rhs = hermite_sum(x, n), (n * x.numerator) // x.denominator
    if lhs != rhs:
        return f"sum {lhs} != floor(nx) {rhs} at x={x}, n={n}"
    shifted = hermite_defect(x + Fraction(1, n), n)
    if shifted != defect:
        return f"f(x + 1/n) = {shifted} != f(x) = {defect} at x={x}, n={n}"
    return None


# A task result: (items checked, failures, first failure keyed for ordering).
_Result = tuple[int, int, Optional[tuple[tuple, tuple[int, int, str]]]]


def _pair_task(lemma: str, p: int, primes: list[int]) -> _Result:
    check = PAIR_CHECKS[lemma]
    checked = failures = 0
    first = None
    for q in primes:
        if q == p:
            continue
        checked += 1
        try:
            detail = check(p, q)
        except (ConsistencyError, DomainError) as exc:
            detail = f"{type(exc).__name__}: {exc}"
        if detail is not None:
            failures += 1
            if first is None:
                first = ((p, q), (p, q, detail))
    return checked, failures, first


def _hermite_task(lemma: str, n: int, grid: list[Fraction]) -> _Result:
    checked = failures = 0
    first = None
    for i, x in enumerate(grid):
        checked += 1
        detail = check_hermite(x, n)
        if detail is not None:
            failures += 1
            if first is None:
                first = ((n, i), (x.numerator, x.denominator, f"n={n}: {detail}"))
    return checked, failures, first


def _star(args):
    fn, *rest = args
    return fn(*rest)


def _merge(results: Iterable[_Result]) -> tuple[int, int, Optional[tuple[int, int, str]]]:
    checked = failures = 0
    first = None
    for c, f, cx in results:
        checked += c
        failures += f
        if cx is not None and (first is None or cx[0] < first[0]):
            first = cx
    return checked, failures, (first[1] if first else None)


def run_lemma(lemma: str, max_prime: int, workers: int = 1) -> VerificationReport:
    """Sweep one lemma over all ordered pairs of distinct odd primes <= max_prime.

    The Hermite sweep ignores ``max_prime`` and walks the fixed rational
    grid instead; the lattice sweep is capped at primes <= 200.
    """
    if lemma not in LEMMAS:
        raise DomainError(f"unknown lemma {lemma!r}")
    start = time.perf_counter()
    if lemma == "hermite":
        grid = hermite_grid()
        bound = HERMITE_MAX_NUM
        tasks = [(_hermite_task, lemma, n, grid) for n in range(1, HERMITE_MAX_N + 1)]
    else:
        bound = min(max_prime, LATTICE_CAP) if lemma == "lattice" else max_prime
        primes = odd_primes_upto(bound)
        tasks = [(_pair_task, lemma, p, primes) for p in primes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_star, tasks))
    else:
        results = [_star(t) for t in tasks]
    checked, failures, first = _merge(results)
    return VerificationReport(
        lemma=lemma,
        range_bound=bound,
        pairs_checked=checked,
        failures=failures,
        first_counterexample=first,
        wall_time=time.perf_counter() - start,
    )


def run_verification(
    max_prime: int, lemma: str = "all", workers: int = 1
) -> list[VerificationReport]:
    if max_prime < 5:
        raise DomainError(f"max prime must be >= 5, got {max_prime}")
    selected = LEMMAS if lemma == "all" else (lemma,)
    return [run_lemma(name, max_prime, workers) for name in selected]
