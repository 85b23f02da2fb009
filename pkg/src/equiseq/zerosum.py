"""Pigeonhole zero-sum extraction.

`find_zero_subsum` locates a contiguous block with sum divisible by N via the
classic partial-sum collision argument: among the partial sums s_0 = 0,
s_1, ..., s_M mod N there are M+1 >= N+1 values, so two coincide, and the
terms strictly between those positions sum to 0 mod N.

`extract_zero_union` applies this repeatedly, deleting each found block from
the residual (relative order preserved), until fewer than N terms remain.
The union of the deleted blocks has more than T - N elements and sum
divisible by N.

Both are deterministic: the collision taken is the one with the smallest
right endpoint j (and for that j the earliest matching left endpoint, with
s_0 always present).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import IntSequence, InternalError, LengthError, Modulus


@dataclass(frozen=True)
class ZeroSumCertificate:
    """A set of original indices whose term-sum is divisible by the modulus."""

    indices: frozenset[int]
    modulus: Modulus
    total: int

    def __post_init__(self) -> None:
        if not self.indices:
            raise ValueError("certificate indices must be nonempty")
        if self.total % self.modulus.n != 0:
            raise ValueError("certificate sum is not divisible by the modulus")


def find_zero_subsum(seq: IntSequence, n_mod: Modulus) -> ZeroSumCertificate:
    """First contiguous block (by right endpoint) with sum = 0 mod N."""
    n = n_mod.n
    if len(seq) < n:
        raise LengthError(f"need at least {n} terms, got {len(seq)}")
    first_seen = {0: 0}  # partial-sum residue -> earliest position
    s = 0
    for j, (_, term) in enumerate(seq, start=1):
        s += term
        r = s % n
        if r in first_seen:
            i = first_seen[r]
            block = seq.indices[i:j]
            return ZeroSumCertificate(
                frozenset(block), n_mod, sum(seq.terms[i:j])
            )
        first_seen[r] = j
    raise InternalError("no partial-sum collision despite length >= N")


def extract_zero_union(seq: IntSequence, n_mod: Modulus) -> ZeroSumCertificate:
    """Union of iteratively deleted zero-sum blocks; size > len(seq) - N."""
    n = n_mod.n
    t_len = len(seq)
    if t_len < n:
        raise LengthError(f"need at least {n} terms, got {t_len}")
    union: set[int] = set()
    total = 0
    residual = seq
    while len(residual) >= n:
        block = find_zero_subsum(residual, n_mod)
        union |= block.indices
        total += block.total
        residual = residual.without(block.indices)
    if len(union) <= t_len - n:
        raise InternalError("extracted union smaller than guaranteed")
    return ZeroSumCertificate(frozenset(union), n_mod, total)
