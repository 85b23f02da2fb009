"""Base domain types shared by the whole pipeline.

Everything downstream works with residues mod N and mod 2N of
arbitrary-precision signed integers.  Residues are always normalized with the
mathematical (nonnegative) mod, so class comparisons are canonical even for
negative terms.  A ±-class mod 2N is the pair {x, 2N-x}; it is represented by
its canonical representative min(x, 2N-x), an integer in [0, N].  The classes
0 and N are self-paired, so there are exactly N+1 classes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class LengthError(ValueError):
    """Sequence too short for the requested operation."""


class ParityError(ValueError):
    """An odd modulus >= 3 was required."""


class SizeError(ValueError):
    """Input exceeds a hard enumeration guard."""


class ScaleError(ValueError):
    """Exhaustive search requested beyond the feasible range."""


class InternalError(RuntimeError):
    """A guaranteed-by-construction invariant failed: an implementation bug."""


@dataclass(frozen=True)
class Modulus:
    """A modulus N >= 2."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.n!r}")


@dataclass(frozen=True)
class OddModulus(Modulus):
    """An odd modulus N >= 3, required by the extraction pipeline."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n % 2 == 0 or self.n < 3:
            raise ParityError(f"modulus must be odd and >= 3, got {self.n}")


@dataclass(frozen=True)
class IntSequence:
    """An ordered sequence of integers with stable 1-based original indices.

    Subsequence selection preserves the original indices, so every
    certificate produced anywhere in the pipeline indexes into the same
    universe as the input sequence.
    """

    terms: tuple[int, ...]
    indices: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.indices:
            object.__setattr__(self, "indices", tuple(range(1, len(self.terms) + 1)))
        if len(self.indices) != len(self.terms):
            raise ValueError("terms and indices must have equal length")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])) or (
            self.indices and self.indices[0] < 1
        ):
            raise ValueError("indices must be strictly increasing and >= 1")

    @classmethod
    def from_terms(cls, terms: Iterable[int]) -> "IntSequence":
        return cls(tuple(int(t) for t in terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(zip(self.indices, self.terms))

    def term_at(self, index: int) -> int:
        """Term carrying the given original index."""
        return self.terms[self.indices.index(index)]

    def total(self) -> int:
        return sum(self.terms)

    def subsequence(self, selected: Iterable[int]) -> "IntSequence":
        """Subsequence of the terms whose original index is in `selected`."""
        chosen = set(selected)
        missing = chosen - set(self.indices)
        if missing:
            raise ValueError(f"unknown indices: {sorted(missing)}")
        kept = [(i, t) for i, t in zip(self.indices, self.terms) if i in chosen]
        return IntSequence(tuple(t for _, t in kept), tuple(i for i, _ in kept))

    def without(self, removed: Iterable[int]) -> "IntSequence":
        """Complement subsequence, original relative order preserved."""
        gone = set(removed)
        kept = [(i, t) for i, t in zip(self.indices, self.terms) if i not in gone]
        return IntSequence(tuple(t for _, t in kept), tuple(i for i, _ in kept))


def normalize_residue(a: int, m: Modulus) -> int:
    """Residue of `a` in [0, m.n), mathematical mod (nonnegative for any sign)."""
    return a % m.n


def pm_class(a: int, n_mod: Modulus) -> int:
    """Canonical representative of the ±-class of `a` mod 2N, in [0, N]."""
    two_n = 2 * n_mod.n
    r = a % two_n
    return min(r, two_n - r)
