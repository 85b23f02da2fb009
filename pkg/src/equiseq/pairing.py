"""Auxiliary c-sequence construction.

Terms are grouped by their ±-class mod 2N and paired greedily within each
class in original-index order (1st with 2nd, 3rd with 4th, ...), leaving at
most one unpaired term per class, hence at most N+1 leftovers overall.  Each
pair (i, j) satisfies a_i = ±a_j mod 2N, so c = a_i + a_j is always even, and
pairs from the class 0 mod 2N additionally have c = 0 mod 2N.

Pairs whose members are nonzero mod 2N come first (positions 1..V, ordered by
smaller member index); zero-class pairs follow (positions V+1..T).  The count
bookkeeping 2T + |leftovers| = M gives T >= ceil((M - (N+1)) / 2).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import IntSequence, Modulus, pm_class


@dataclass(frozen=True)
class Pair:
    i: int  # original index of the earlier member
    j: int  # original index of the later member
    c: int  # actual integer sum of the two terms


@dataclass(frozen=True)
class PairedSequence:
    pairs: tuple[Pair, ...]
    leftovers: frozenset[int]
    num_nonzero_pairs: int  # V: pairs 1..V have members nonzero mod 2N
    modulus: Modulus

    @property
    def num_pairs(self) -> int:
        """T, the length of the c-sequence."""
        return len(self.pairs)

    def c_sequence(self) -> IntSequence:
        """The sequence c_1, ..., c_T, indexed 1..T by pair position."""
        return IntSequence.from_terms(p.c for p in self.pairs)

    def unfold(self, positions: frozenset[int] | set[int]) -> set[int]:
        """Original indices underlying the pairs at the given 1-based positions."""
        out: set[int] = set()
        for pos in positions:
            pair = self.pairs[pos - 1]
            out.add(pair.i)
            out.add(pair.j)
        return out


def build_pairing(seq: IntSequence, n_mod: Modulus) -> PairedSequence:
    """Greedy maximal pairing of terms congruent to ± each other mod 2N."""
    groups: dict[int, list[int]] = defaultdict(list)
    terms = dict(zip(seq.indices, seq.terms))
    for idx, term in seq:
        groups[pm_class(term, n_mod)].append(idx)

    nonzero_pairs: list[Pair] = []
    zero_pairs: list[Pair] = []
    leftovers: set[int] = set()
    for cls, members in groups.items():
        bucket = zero_pairs if cls == 0 else nonzero_pairs
        for a, b in zip(members[::2], members[1::2]):
            bucket.append(Pair(a, b, terms[a] + terms[b]))
        if len(members) % 2:
            leftovers.add(members[-1])

    nonzero_pairs.sort(key=lambda p: p.i)
    zero_pairs.sort(key=lambda p: p.i)
    return PairedSequence(
        pairs=tuple(nonzero_pairs + zero_pairs),
        leftovers=frozenset(leftovers),
        num_nonzero_pairs=len(nonzero_pairs),
        modulus=n_mod,
    )
