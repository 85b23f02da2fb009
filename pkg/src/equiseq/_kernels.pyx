# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: subset-residue DP and witness subset scan.

Counts live in unsigned 64-bit words, so these are exact only within hard
length guards: L <= 62 for the DP (sum of counts is 2^L) and L <= 30 for the
scan.  Callers fall back to the pure-Python twin beyond the guards.  Both
kernels must match ``_kernels_py`` exactly on the overlap.
"""
from libc.stdlib cimport free, malloc
from libc.string cimport memset


def count_residue(residues, int n):
    """counts[r] = number of subsets (empty included) with sum = r mod n."""
    cdef Py_ssize_t length = len(residues)
    cdef Py_ssize_t i
    cdef int s, t, r
    if length > 62:
        raise ValueError("count_residue kernel limited to length <= 62")
    cdef unsigned long long *cur = <unsigned long long *> malloc(
        2 * n * sizeof(unsigned long long))
    if cur == NULL:
        raise MemoryError()
    cdef unsigned long long *shifted = cur + n
    try:
        memset(cur, 0, 2 * n * sizeof(unsigned long long))
        cur[0] = 1
        for i in range(length):
            r = residues[i] % n
            if r < 0:
                r += n
            for s in range(n):
                t = s + r
                if t >= n:
                    t -= n
                shifted[t] = cur[s]
            for s in range(n):
                cur[s] += shifted[s]
        return [cur[s] for s in range(n)]
    finally:
        free(cur)


def find_witness_scan(residues, int n):
    """First subset S, |S| >= n, with n * zero_count(S) >= 2^|S|.

    Scan order: decreasing size, then increasing bitmask value (bit i =
    position i), which is lexicographic index order within a size.  Returns
    (bitmask, zero_count) or None.
    """
    cdef int length = len(residues)
    cdef int i, s, t, r, size
    if length > 30:
        raise ValueError("find_witness_scan kernel limited to length <= 30")
    if length < n:
        return None
    cdef int res[30]
    for i in range(length):
        r = residues[i] % n
        if r < 0:
            r += n
        res[i] = r
    cdef unsigned long long *cnt = <unsigned long long *> malloc(
        2 * n * sizeof(unsigned long long))
    if cnt == NULL:
        raise MemoryError()
    cdef unsigned long long *shifted = cnt + n
    cdef unsigned long long limit = (<unsigned long long> 1) << length
    cdef unsigned long long mask, m, low, carry, threshold
    try:
        for size in range(length, n - 1, -1):
            threshold = (<unsigned long long> 1) << size
            mask = ((<unsigned long long> 1) << size) - 1
            while mask < limit:
                memset(cnt, 0, n * sizeof(unsigned long long))
                cnt[0] = 1
                m = mask
                i = 0
                while m:
                    if m & 1:
                        r = res[i]
                        for s in range(n):
                            t = s + r
                            if t >= n:
                                t -= n
                            shifted[t] = cnt[s]
                        for s in range(n):
                            cnt[s] += shifted[s]
                    m >>= 1
                    i += 1
                if (<unsigned long long> n) * cnt[0] >= threshold:
                    return mask, cnt[0]
                # Gosper's hack: next mask with the same popcount
                low = mask & (~mask + 1)
                carry = mask + low
                mask = carry | (((mask ^ carry) >> 2) // low)
        return None
    finally:
        free(cnt)
