"""Timing of ``jacobi`` against the Euler-criterion ``legendre_euler``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .arith import ConsistencyError, is_prime
from .symbols import jacobi, legendre_euler

DEFAULT_SEED = 20240229
WIDTHS = (31, 63)


@dataclass(frozen=True)
class BenchResult:
    bits: int
    samples: int
    jacobi_ns: float
    euler_ns: float

    @property
    def speedup(self) -> float:
        return self.euler_ns / self.jacobi_ns if self.jacobi_ns else float("inf")

    def table(self) -> str:
        return "\n".join(
            [
                "method\tmean_ns_per_op",
                f"jacobi\t{self.jacobi_ns:.1f}",
                f"legendre_euler\t{self.euler_ns:.1f}",
                f"speedup\t{self.speedup:.2f}",
            ]
        )


def random_prime(bits: int, rng: random.Random) -> int:
    """A uniformly drawn prime with exactly ``bits`` bits."""
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(n):
            return n


def sample_pairs(bits: int, samples: int, seed: int = DEFAULT_SEED) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(samples):
        p = random_prime(bits, rng)
        pairs.append((rng.randrange(1, p), p))
    return pairs


def _time_ns(fn, pairs) -> tuple[float, list[int]]:
    start = time.perf_counter_ns()
    out = [fn(a, p) for a, p in pairs]
    return (time.perf_counter_ns() - start) / len(pairs), out


def run_bench(bits: int, samples: int, seed: int = DEFAULT_SEED) -> BenchResult:
    if bits not in WIDTHS:
        raise ValueError(f"bits must be one of {WIDTHS}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    pairs = sample_pairs(bits, samples, seed)
    jacobi_ns, by_jacobi = _time_ns(jacobi, pairs)
    euler_ns, by_euler = _time_ns(legendre_euler, pairs)
    if by_jacobi != by_euler:
        raise ConsistencyError("jacobi and legendre_euler disagree on benchmark inputs")
    return BenchResult(bits, samples, jacobi_ns, euler_ns)
