"""Pure-Python kernel for enumerating maximal intersecting families.

A family over [k] is maximal intersecting iff it is upward-closed and
contains exactly one side of every complementary pair {S, [k] \\ S}.
The search walks the complementary pairs in a fixed order and decides
which side joins the family; each decision propagates (all supersets
of the chosen set join, everything inside its complement is shut out)
and a clash between the two state vectors prunes the branch.

State is a pair of 2^k-bit integers: bit s of `inn` means the subset
with mask s is in the family, bit s of `out` means it is excluded.
The compiled twin in _fastcore implements the same walk; the two are
cross-checked in the test suite.
"""

from __future__ import annotations

KERNEL_KMAX = 7

BACKEND = "pure"


def _pair_reps(k: int) -> list[int]:
    """One representative per complementary pair, ordered by (size, mask)."""
    full = (1 << k) - 1
    reps = []
    for s in range(1 << k):
        c = full ^ s
        if (s.bit_count(), s) <= (c.bit_count(), c):
            reps.append(s)
    reps.sort(key=lambda s: (s.bit_count(), s))
    return reps


def _closure_tables(k: int) -> tuple[list[int], list[int]]:
    """sup[s] / sub[s]: 2^k-bit masks of the supersets / subsets of s."""
    size = 1 << k
    full = size - 1
    sup = [0] * size
    sub = [0] * size
    for s in range(size):
        m = 0
        t = s
        while True:
            m |= 1 << t
            if t == full:
                break
            t = (t + 1) | s
        sup[s] = m
        m = 0
        t = s
        while True:
            m |= 1 << t
            if t == 0:
                break
            t = (t - 1) & s
        sub[s] = m
    return sup, sub


def _check_k(k: int) -> None:
    if not 1 <= k <= KERNEL_KMAX:
        raise ValueError(f"kernel supports 1 <= k <= {KERNEL_KMAX}, got {k}")


def mif_count(k: int, reverse_pairs: bool = False) -> int:
    """Number of maximal intersecting families over [k].

    reverse_pairs walks the complementary pairs in the opposite order;
    the count must not depend on it (self-consistency check).
    """
    _check_k(k)
    reps = _pair_reps(k)
    if reverse_pairs:
        reps.reverse()
    sup, sub = _closure_tables(k)
    full = (1 << k) - 1
    npairs = len(reps)
    count = 0
    stack = [(0, 0, 0)]
    while stack:
        inn, out, idx = stack.pop()
        decided = inn | out
        while idx < npairs and (decided >> reps[idx]) & 1:
            idx += 1
        if idx == npairs:
            count += 1
            continue
        r = reps[idx]
        rc = full ^ r
        idx += 1
        ni = inn | sup[rc]
        no = out | sub[r]
        if not ni & no:
            stack.append((ni, no, idx))
        ni = inn | sup[r]
        no = out | sub[rc]
        if not ni & no:
            stack.append((ni, no, idx))
    return count


def mif_masks(k: int) -> list[int]:
    """All maximal intersecting families over [k] as 2^k-bit member vectors.

    Order is the search order, not canonical; callers sort.
    """
    _check_k(k)
    reps = _pair_reps(k)
    sup, sub = _closure_tables(k)
    full = (1 << k) - 1
    npairs = len(reps)
    found: list[int] = []
    stack = [(0, 0, 0)]
    while stack:
        inn, out, idx = stack.pop()
        decided = inn | out
        while idx < npairs and (decided >> reps[idx]) & 1:
            idx += 1
        if idx == npairs:
            found.append(inn)
            continue
        r = reps[idx]
        rc = full ^ r
        idx += 1
        ni = inn | sup[rc]
        no = out | sub[r]
        if not ni & no:
            stack.append((ni, no, idx))
        ni = inn | sup[r]
        no = out | sub[rc]
        if not ni & no:
            stack.append((ni, no, idx))
    return found
