"""Quadratic reciprocity via Gauss's lemma and Hermite's identity, as code."""

from .arith import (
    ConsistencyError,
    DomainError,
    OddPrime,
    Rational,
    Symbol,
    is_prime,
    mod_pow,
    odd_primes_upto,
    rational,
    rational_floor,
)
from .lemmas import (
    GaussTrace,
    GaussTraceRow,
    ReciprocityReport,
    gauss_sign_product,
    half_residue,
    halfness_indicator,
    hermite_defect,
    hermite_sum,
    lattice_complement,
    lattice_table,
    m_sum,
    mu_sum,
    mu_via_lattice,
    pairing_check,
    pairing_sums,
    reciprocity_exponent,
    reciprocity_product,
)
from .symbols import jacobi, legendre_euler, legendre_gauss, symbol_consensus, symbol_routes

__version__ = "0.1.0"
