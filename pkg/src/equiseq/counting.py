"""Exact and analytic counting of subsets with sum = 0 mod N.

The primary method is a residue-class DP (O(L*N) exact integer additions,
compiled kernel when available).  Two independent cross-checks are kept:

* a brute-force oracle that explicitly enumerates all 2^L subset sums
  (guarded at L <= 25), and
* floating-point evaluators of the roots-of-unity identity

      (1/N) * sum_{b=0}^{N-1} prod_{j=1}^{L} (1 + e^{2 pi i b a_j / N})

  and of its cosine-product regrouping, which is a sum of nonnegative per-b
  terms whenever every nonzero ±-class mod 2N has even multiplicity and the
  total sum is 0 mod 2N.

The threshold test N * count >= 2^L is always exact integer arithmetic;
L may exceed 64, so it must never touch floating point.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _backend
from .core import IntSequence, Modulus, SizeError, pm_class

BRUTE_FORCE_LIMIT = 25


@dataclass(frozen=True)
class CountReport:
    """Exact number of subsets (empty included) per residue class mod N."""

    modulus: Modulus
    counts: tuple[int, ...]
    length: int

    def __post_init__(self) -> None:
        if sum(self.counts) != 1 << self.length:
            raise ValueError("residue counts must sum to 2^L")


@dataclass(frozen=True)
class CosineTermVector:
    """Per-b cosine products and the ±-class multiplicities behind them.

    terms[b] = prod_j cos(pi * b * a_j / N); multiplicities[b][n] counts the
    j with b*a_j = ±n mod 2N, for n = 1..N (the regrouped product's exponents).
    """

    terms: tuple[float, ...]
    multiplicities: tuple[dict[int, int], ...]
    modulus: Modulus
    length: int


def count_by_residue(seq: IntSequence, n_mod: Modulus) -> CountReport:
    """DP over residue classes; exact arbitrary-precision counts."""
    n = n_mod.n
    residues = [t % n for t in seq.terms]
    counts = _backend.count_residue(residues, n)
    return CountReport(n_mod, tuple(int(c) for c in counts), len(seq))


def count_zero(seq: IntSequence, n_mod: Modulus, include_empty: bool = True) -> int:
    """Number of subsets with sum = 0 mod N; empty subset per the flag."""
    zero = count_by_residue(seq, n_mod).counts[0]
    return zero if include_empty else zero - 1


def brute_force_count(
    seq: IntSequence, n_mod: Modulus, include_empty: bool = True
) -> int:
    """Independent oracle: explicitly enumerate all 2^L subset sums."""
    length = len(seq)
    if length > BRUTE_FORCE_LIMIT:
        raise SizeError(f"brute force limited to length <= {BRUTE_FORCE_LIMIT}")
    n = n_mod.n
    peak = sum(abs(t) for t in seq.terms)
    if peak < 2**62:
        # vectorized doubling: after step k, sums holds all 2^k subset sums
        sums = np.zeros(1, dtype=np.int64)
        for t in seq.terms:
            sums = np.concatenate([sums, sums + t])
        zero = int(np.count_nonzero(sums % n == 0))
    else:
        zero = sum(
            1
            for size in range(length + 1)
            for combo in combinations(seq.terms, size)
            if sum(combo) % n == 0
        )
    return zero if include_empty else zero - 1


def character_sum_estimate(seq: IntSequence, n_mod: Modulus) -> float:
    """Roots-of-unity evaluation of the zero-sum subset count (empty included).

    Accurate to ~1e-6 relative only while 2^L stays within double-precision
    integer exactness (L <= 64 or so); runs regardless.
    """
    n = n_mod.n
    residues = [t % n for t in seq.terms]
    acc = 0j
    for b in range(n):
        prod = complex(1.0)
        for r in residues:
            prod *= 1 + cmath.exp(2j * math.pi * ((b * r) % n) / n)
        acc += prod
    value = acc / n
    if abs(value.imag) > 1e-6 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"character sum has large imaginary part: {value}")
    return value.real


def cosine_terms(seq: IntSequence, n_mod: Modulus) -> CosineTermVector:
    """Per-b products cos(pi b a_j / N) plus their ±-class multiplicity maps.

    Meaningful as a count of zero-sum subsets only when the total sum is
    0 mod 2N; the multiplicity maps let nonnegativity be checked structurally
    (all multiplicities even implies terms[b] >= 0).
    """
    n = n_mod.n
    two_n = 2 * n
    residues = [t % two_n for t in seq.terms]  # cos(pi x / N) has period 2N
    terms: list[float] = []
    mults: list[dict[int, int]] = []
    for b in range(n):
        prod = 1.0
        classes: dict[int, int] = {}
        for r in residues:
            br = (b * r) % two_n
            prod *= math.cos(math.pi * br / n)
            cls = min(br, two_n - br)
            if cls != 0:
                classes[cls] = classes.get(cls, 0) + 1
        terms.append(prod)
        mults.append(classes)
    return CosineTermVector(tuple(terms), tuple(mults), n_mod, len(seq))


def cosine_identity_count(seq: IntSequence, n_mod: Modulus) -> float:
    """(2^L / N) * sum_b cosine terms; equals the empty-inclusive zero count
    when the sequence sum is 0 mod 2N."""
    vec = cosine_terms(seq, n_mod)
    return (2 ** vec.length / n_mod.n) * math.fsum(vec.terms)


def meets_threshold(count: int, length: int, n_mod: Modulus) -> bool:
    """Exact integer test N * count >= 2^L (never floating point)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return n_mod.n * count >= 1 << length
