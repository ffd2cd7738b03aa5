"""Acceptance criteria. Every check is exact; a summary line per criterion
is printed at the end of the pytest run."""

import json
import random
import subprocess
import sys
import time
import warnings
from fractions import Fraction

import numpy as np
import pytest

from oracles import factor, smallest_prime_factors
from reciprocity import bench, cli, verify
from reciprocity.arith import odd_primes_upto
from reciprocity.lemmas import (
    gauss_sign_product,
    hermite_defect,
    lattice_complement,
    lattice_table,
    m_sum,
    mu_sum,
    mu_via_lattice,
    pairing_sums,
    reciprocity_exponent,
)
from reciprocity.symbols import jacobi, legendre_euler, symbol_routes

PRIMES_2000 = odd_primes_upto(1999)
PRIMES_200 = odd_primes_upto(199)


def sign(e):
    return -1 if e & 1 else 1


@pytest.mark.criterion(1, "five symbol routes agree for p < 2000, 1 <= a < p")
def test_cross_algorithm_agreement():
    disagreements = []
    for p in PRIMES_2000:
        for a in range(1, p):
            values = symbol_routes(a, p)
            if len(set(values.values())) != 1:
                disagreements.append((a, p, values))
    assert len(PRIMES_2000) == 302
    assert disagreements == []


@pytest.mark.criterion(2, "Gauss's lemma: sign product = (-1)^M = Euler, p < 2000")
def test_gauss_lemma():
    failures = []
    for p in PRIMES_2000:
        for a in range(1, p):
            trace = gauss_sign_product(a, p)
            euler = legendre_euler(a, p)
            if trace.violations() or not trace.symbol == sign(m_sum(a, p)) == euler:
                failures.append((a, p))
    assert failures == []


@pytest.mark.criterion(3, "M = mu mod 2 for all coprime (a, p); pairing sums = q - 1")
def test_parity_and_pairing():
    parity_failures = []
    pairing_failures = []
    for p in PRIMES_2000:
        for a in range(1, p):
            if (m_sum(a, p) - mu_sum(a, p)) % 2:
                parity_failures.append((a, p))
            _, sums = pairing_sums(a, p)
            if np.any(sums != a - 1):
                pairing_failures.append((a, p))
    assert pairing_failures == []
    # Stated over every coprime a, including even a, where q - 1 is odd and
    # the pairing argument does not preserve parity.
    odd = [(a, p) for a, p in parity_failures if a % 2]
    assert len(parity_failures) == 0, (
        f"parity differs for {len(parity_failures)} pairs "
        f"({len(odd)} with odd a); first: {parity_failures[:3]}"
    )


@pytest.mark.criterion(4, "Hermite defect vanishes, is 1/n-periodic, zero on [0, 1/n)")
def test_hermite_grid():
    grid = verify.hermite_grid()
    assert grid[0] == 0 and grid[-1] == 300 and Fraction(299, 30) in grid
    failures = []
    base_checked = 0
    for n in range(1, verify.HERMITE_MAX_N + 1):
        step = Fraction(1, n)
        for x in grid:
            f = hermite_defect(x, n)
            if f != 0 or hermite_defect(x + step, n) != f:
                failures.append((x, n))
            if x < step:
                base_checked += 1
                if f != 0:
                    failures.append((x, n, "base interval"))
    assert base_checked > 0
    assert failures == []


@pytest.mark.criterion(5, "mu + nu = (p-1)/2 (q-1)/2 and (p/q)(q/p) = (-1)^(mu+nu), p, q < 2000")
def test_reciprocity_identities():
    failures = []
    pairs = 0
    for p in PRIMES_2000:
        for q in PRIMES_2000:
            if p == q:
                continue
            pairs += 1
            r = reciprocity_exponent(p, q)
            euler = legendre_euler(p, q) * legendre_euler(q, p)
            if r.mu + r.nu != ((p - 1) // 2) * ((q - 1) // 2):
                failures.append((p, q, "exponent"))
            if not r.sym_qp * r.sym_pq == sign(r.mu + r.nu) == euler:
                failures.append((p, q, "sign"))
            if p < 200 and q < 200 and mu_via_lattice(p, q) != r.mu:
                failures.append((p, q, "lattice"))
    assert pairs == 302 * 301
    assert failures == []


@pytest.mark.criterion(6, "lattice terms sum to 1 and floor(a/p + b/q) = 0, p, q < 200")
def test_lattice_complementarity():
    failures = []
    for p in PRIMES_200:
        for q in PRIMES_200:
            if p == q:
                continue
            t1, t2, s = lattice_table(p, q)
            if not np.all(t1 + t2 == 1) or s.any():
                failures.append((p, q, "table"))
            if p < q:
                # the exact-rational per-term route; (q, p) is its transpose
                for a in range(1, (p - 1) // 2 + 1):
                    for b in range(1, (q - 1) // 2 + 1):
                        t = lattice_complement(p, q, a, b)
                        if sorted(t) != [0, 1] or t != (t1[a - 1, b - 1], t2[a - 1, b - 1]):
                            failures.append((p, q, a, b))
    assert failures == []


@pytest.mark.criterion(7, "jacobi = Legendre product for odd n < 10^5, 100 random a each")
def test_jacobi_against_factorization():
    limit = 10**5
    spf = smallest_prime_factors(limit)
    rng = random.Random(2024)
    failures = []
    for n in range(1, limit, 2):
        factors = factor(n, spf)
        for _ in range(100):
            a = rng.randrange(-4 * n, 4 * n + 1)
            expected = 1
            for p in factors:
                expected *= legendre_euler(a, p)
            if jacobi(a, n) != expected:
                failures.append((a, n))
    assert failures == []


@pytest.mark.criterion(8, "bench --bits 63: jacobi faster than legendre_euler on average")
def test_benchmark_sanity(capsys):
    result = bench.run_bench(63, 2000)
    with capsys.disabled():
        print(f"\n[bench 63-bit, 2000 samples]\n{result.table()}")
    if result.speedup < 5:
        warnings.warn(f"jacobi speedup {result.speedup:.2f}x is below the 5x soft target")
    assert result.jacobi_ns > 0 and result.euler_ns > 0
    assert result.speedup > 1


@pytest.mark.criterion(9, "CLI: trace JSON round-trip, exit codes, verify 100 all < 10 s")
def test_cli_contract(capsys):
    for q, p in [(3, 5), (2, 13), (123, 1999)]:
        assert cli.main(["trace", str(q), str(p)]) == 0
        d = json.loads(capsys.readouterr().out)
        assert d["M"] == sum(r["floor_2qa"] for r in d["rows"])
        assert d["mu"] == sum(r["floor_qa"] for r in d["rows"])
        assert d["symbol"] == int(np.prod([r["eps"] for r in d["rows"]])) == sign(d["M"])

    assert cli.main(["symbol", "3", "5"]) == 0
    assert cli.main(["symbol", "4", "15", "--method", "euler"]) == 2
    assert cli.main(["verify", "--max-prime", "4"]) == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["bench", "--bits", "12"])
    assert info.value.code == 2
    capsys.readouterr()

    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "reciprocity", "verify", "--max-prime", "100", "--lemma", "all"],
        capture_output=True,
        text=True,
        check=False,
    )
    elapsed = time.perf_counter() - start
    lines = proc.stdout.splitlines()
    assert proc.returncode == 0
    assert len(lines) == 6 and all("failures=0" in line for line in lines)
    assert elapsed < 10
