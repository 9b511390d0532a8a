# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for enumerating maximal intersecting families.

Same walk as _purecore (decide one side of each complementary pair,
propagate closure, prune clashes), with the 2^k-bit state vectors held
in two 64-bit limbs.  k is capped at 7, so 128 bits always suffice.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t

KERNEL_KMAX = 7

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef struct Tables:
    uint64_t sup_lo[128]
    uint64_t sup_hi[128]
    uint64_t sub_lo[128]
    uint64_t sub_hi[128]
    int reps[64]
    int npairs
    int full


cdef void _init_tables(Tables* t, int k, bint reverse_pairs):
    cdef int size = 1 << k
    cdef int full = size - 1
    cdef int s, c, tt, pc, i, j
    cdef uint64_t lo, hi
    t.full = full
    t.npairs = 0
    # pair representatives ordered by (size, mask); reversed on request
    for pc in range(k + 1):
        for s in range(size):
            if __builtin_popcount(<unsigned int> s) != pc:
                continue
            c = full ^ s
            if pc < __builtin_popcount(<unsigned int> c) or (
                pc == __builtin_popcount(<unsigned int> c) and s < c
            ):
                t.reps[t.npairs] = s
                t.npairs += 1
    if reverse_pairs:
        i = 0
        j = t.npairs - 1
        while i < j:
            s = t.reps[i]
            t.reps[i] = t.reps[j]
            t.reps[j] = s
            i += 1
            j -= 1
    for s in range(size):
        lo = 0
        hi = 0
        tt = s
        while True:
            if tt < 64:
                lo |= (<uint64_t> 1) << tt
            else:
                hi |= (<uint64_t> 1) << (tt - 64)
            if tt == full:
                break
            tt = (tt + 1) | s
        t.sup_lo[s] = lo
        t.sup_hi[s] = hi
        lo = 0
        hi = 0
        tt = s
        while True:
            if tt < 64:
                lo |= (<uint64_t> 1) << tt
            else:
                hi |= (<uint64_t> 1) << (tt - 64)
            if tt == 0:
                break
            tt = (tt - 1) & s
        t.sub_lo[s] = lo
        t.sub_hi[s] = hi


cdef inline bint _decided(uint64_t lo, uint64_t hi, int pos) nogil:
    if pos < 64:
        return (lo >> pos) & 1
    return (hi >> (pos - 64)) & 1


cdef unsigned long long _count(Tables* t, uint64_t in_lo, uint64_t in_hi,
                               uint64_t out_lo, uint64_t out_hi, int idx) nogil:
    cdef int r, rc
    cdef uint64_t ni_lo, ni_hi, no_lo, no_hi
    cdef unsigned long long total = 0
    while idx < t.npairs and _decided(in_lo | out_lo, in_hi | out_hi, t.reps[idx]):
        idx += 1
    if idx == t.npairs:
        return 1
    r = t.reps[idx]
    rc = t.full ^ r
    idx += 1
    ni_lo = in_lo | t.sup_lo[r]
    ni_hi = in_hi | t.sup_hi[r]
    no_lo = out_lo | t.sub_lo[rc]
    no_hi = out_hi | t.sub_hi[rc]
    if not ((ni_lo & no_lo) | (ni_hi & no_hi)):
        total += _count(t, ni_lo, ni_hi, no_lo, no_hi, idx)
    ni_lo = in_lo | t.sup_lo[rc]
    ni_hi = in_hi | t.sup_hi[rc]
    no_lo = out_lo | t.sub_lo[r]
    no_hi = out_hi | t.sub_hi[r]
    if not ((ni_lo & no_lo) | (ni_hi & no_hi)):
        total += _count(t, ni_lo, ni_hi, no_lo, no_hi, idx)
    return total


cdef void _collect(Tables* t, uint64_t in_lo, uint64_t in_hi,
                   uint64_t out_lo, uint64_t out_hi, int idx,
                   uint64_t* buf, unsigned long long* pos) nogil:
    cdef int r, rc
    cdef uint64_t ni_lo, ni_hi, no_lo, no_hi
    while idx < t.npairs and _decided(in_lo | out_lo, in_hi | out_hi, t.reps[idx]):
        idx += 1
    if idx == t.npairs:
        buf[2 * pos[0]] = in_lo
        buf[2 * pos[0] + 1] = in_hi
        pos[0] += 1
        return
    r = t.reps[idx]
    rc = t.full ^ r
    idx += 1
    ni_lo = in_lo | t.sup_lo[r]
    ni_hi = in_hi | t.sup_hi[r]
    no_lo = out_lo | t.sub_lo[rc]
    no_hi = out_hi | t.sub_hi[rc]
    if not ((ni_lo & no_lo) | (ni_hi & no_hi)):
        _collect(t, ni_lo, ni_hi, no_lo, no_hi, idx, buf, pos)
    ni_lo = in_lo | t.sup_lo[rc]
    ni_hi = in_hi | t.sup_hi[rc]
    no_lo = out_lo | t.sub_lo[r]
    no_hi = out_hi | t.sub_hi[r]
    if not ((ni_lo & no_lo) | (ni_hi & no_hi)):
        _collect(t, ni_lo, ni_hi, no_lo, no_hi, idx, buf, pos)


def _check_k(k):
    if not 1 <= k <= KERNEL_KMAX:
        raise ValueError(f"kernel supports 1 <= k <= {KERNEL_KMAX}, got {k}")


def mif_count(k, reverse_pairs=False):
    """Number of maximal intersecting families over [k]."""
    _check_k(k)
    cdef Tables t
    _init_tables(&t, k, bool(reverse_pairs))
    cdef unsigned long long total
    with nogil:
        total = _count(&t, 0, 0, 0, 0, 0)
    return total


def mif_masks(k):
    """All maximal intersecting families over [k] as member vectors.

    Order is the search order, not canonical; callers sort.
    """
    _check_k(k)
    cdef Tables t
    _init_tables(&t, k, False)
    cdef unsigned long long total
    with nogil:
        total = _count(&t, 0, 0, 0, 0, 0)
    cdef uint64_t* buf = <uint64_t*> PyMem_Malloc(2 * total * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef unsigned long long pos = 0
    try:
        with nogil:
            _collect(&t, 0, 0, 0, 0, 0, buf, &pos)
        assert pos == total
        return [
            (<object> int(buf[2 * i + 1]) << 64) | int(buf[2 * i])
            for i in range(total)
        ]
    finally:
        PyMem_Free(buf)
