"""Pure-Python reference kernels.

Exact for any length (Python integers never overflow).  The compiled twin in
``_kernels.pyx`` implements the same two functions with machine-word counts
and is only valid within its length guards; both must return identical values
on the overlap (enforced by tests).
"""
from __future__ import annotations


from typing import Sequence


def count_residue(residues: Sequence[int], n: int) -> list[int]:
    """counts[r] = number of subsets (empty included) with sum = r mod n."""
    counts = [0] * n
    counts[0] = 1
    for a in residues:
        r = a % n
        counts = [counts[s] + counts[(s - r) % n] for s in range(n)]
    return counts


def find_witness_scan(residues: Sequence[int], n: int) -> tuple[int, int] | None:
    """First subset S, |S| >= n, with n * zero_count(S) >= 2^|S|.

    Scan order: decreasing size, increasing bitmask value within a size
    (bit i = position i).  Returns (bitmask, zero_count) or None.
    """
    length = len(residues)
    if length < n:
        return None
    res = [a % n for a in residues]
    limit = 1 << length
    for size in range(length, n - 1, -1):
        threshold = 1 << size
        mask = (1 << size) - 1
        while mask < limit:
            counts = [0] * n
            counts[0] = 1
            m = mask
            i = 0
            while m:
                if m & 1:
                    r = res[i]
                    counts = [counts[s] + counts[(s - r) % n] for s in range(n)]
                m >>= 1
                i += 1
            if n * counts[0] >= threshold:
                return mask, counts[0]
            # Gosper's hack: next mask with the same popcount
            low = mask & -mask
            carry = mask + low
            mask = carry | (((mask ^ carry) >> 2) // low)
    return None
