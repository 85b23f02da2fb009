"""Counterexample search for the length-2N strengthening.

The claim under test: for any N >= 2, every integer sequence of length 2N
contains a subsequence of length L >= N with at least 2^L / N zero-sum
subsets mod N (empty subset included).  All quantities depend only on the
terms mod N and are permutation-invariant, so exhaustive mode enumerates
residue multisets of length 2N (C(3N-1, N-1) instances) instead of all N^2N
tuples.  Random mode samples residue sequences from seeded randomness.

A witness is searched over subsets in decreasing-size order: the full
sequence meets the bar most often (the b=0 character term dominates), so the
scan usually short-circuits immediately.  Any instance with no witness is a
counterexample and is reported with full data, never suppressed.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Literal, Optional

from . import _backend
from .core import IntSequence, Modulus, ScaleError, SizeError

EXHAUSTIVE_MAX_N = 6
SUBSET_SCAN_LIMIT = 30


@dataclass(frozen=True)
class ConjectureInstance:
    """A length-2N sequence of residue representatives in [0, N)."""

    modulus: Modulus
    residues: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]  # 1-based indices into the instance
    length: int
    zero_count: int


@dataclass(frozen=True)
class ConjectureReport:
    modulus: Modulus
    mode: Literal["exhaustive", "random"]
    sequence_length: int  # the search checks exactly this length (2N)
    instances_checked: int
    counterexamples: tuple[ConjectureInstance, ...]
    witnesses: tuple[Optional[Witness], ...]  # aligned with instance order
    instances: tuple[ConjectureInstance, ...]
    budget: Optional[int] = None
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def enumerate_multisets(n_mod: Modulus, length: int) -> Iterator[ConjectureInstance]:
    """All residue multisets of the given length, lexicographic; C(length+N-1, N-1) total."""
    if length < 1:
        raise ValueError("length must be >= 1")
    for combo in combinations_with_replacement(range(n_mod.n), length):
        yield ConjectureInstance(n_mod, combo)


def multiset_count(n_mod: Modulus, length: int) -> int:
    return math.comb(length + n_mod.n - 1, n_mod.n - 1)


def find_witness(seq: IntSequence, n_mod: Modulus) -> Optional[Witness]:
    """First subset (decreasing size, then lexicographic) meeting the bar."""
    if len(seq) > SUBSET_SCAN_LIMIT:
        raise SizeError(f"witness scan limited to length <= {SUBSET_SCAN_LIMIT}")
    n = n_mod.n
    residues = [t % n for t in seq.terms]
    hit = _backend.find_witness_scan(residues, n)
    if hit is None:
        return None
    mask, zero_count = hit
    positions = [i for i in range(len(seq)) if mask >> i & 1]
    return Witness(
        indices=tuple(seq.indices[i] for i in positions),
        length=len(positions),
        zero_count=int(zero_count),
    )


def search_conjecture(
    n_mod: Modulus,
    mode: Literal["exhaustive", "random"] = "exhaustive",
    budget: Optional[int] = None,
    seed: Optional[int] = None,
) -> ConjectureReport:
    """Check every (or `budget` random) length-2N instance for a witness."""
    n = n_mod.n
    length = 2 * n
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ScaleError(
                f"exhaustive search limited to N <= {EXHAUSTIVE_MAX_N}, got {n}"
            )
        instances = tuple(enumerate_multisets(n_mod, length))
    elif mode == "random":
        if budget is None or budget < 1:
            raise ValueError("random mode requires budget >= 1")
        rng = random.Random(seed)
        instances = tuple(
            ConjectureInstance(n_mod, tuple(rng.randrange(n) for _ in range(length)))
            for _ in range(budget)
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")

    witnesses: list[Optional[Witness]] = []
    counterexamples: list[ConjectureInstance] = []
    for inst in instances:
        w = find_witness(IntSequence.from_terms(inst.residues), n_mod)
        witnesses.append(w)
        if w is None:
            counterexamples.append(inst)

    return ConjectureReport(
        modulus=n_mod,
        mode=mode,
        sequence_length=length,
        instances_checked=len(instances),
        counterexamples=tuple(counterexamples),
        witnesses=tuple(witnesses),
        instances=instances,
        budget=budget,
        seed=seed,
    )
