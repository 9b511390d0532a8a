"""Set families over [k] as bitmasks, and maximal intersecting families.

A subset S of [k] = {1, ..., k} is a k-bit mask (bit i-1 set means
i in S).  A family of subsets is a 2^k-bit member vector (bit s set
means the subset with mask s belongs to the family).  Enumeration of
maximal intersecting families is delegated to the selected kernel; the
counts lambda(k) are the Hosten-Morris numbers.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernel
from .errors import CapacityError

KMAX_HARD = 7

FAMILY_KMAX = 16

# Counts for k = 8, 9 transcribed from Brouwer, Mills, Mills and
# Verbeek, "Counting families of mutually intersecting sets" (2013).
# Served only on request and flagged with "literature" provenance;
# everything below k = 8 is recomputed here.
LITERATURE_LAMBDA = {
    8: 229809982112,
    9: 423295099074735261880,
}

_lambda_cache: dict[int, int] = {}
_lambda_lock = threading.Lock()


def capacity() -> int:
    """Enumeration capacity: ORCOV_KMAX clamped to 1..KMAX_HARD."""
    raw = os.environ.get("ORCOV_KMAX")
    if raw is None:
        return KMAX_HARD
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ORCOV_KMAX must be an integer, got {raw!r}") from None
    return max(1, min(KMAX_HARD, value))


def format_subset(mask: int) -> str:
    """Render a subset mask as a brace list, e.g. 0b101 -> "{1,3}"."""
    elems = []
    i = 1
    while mask:
        if mask & 1:
            elems.append(str(i))
        mask >>= 1
        i += 1
    return "{" + ",".join(elems) + "}"


@dataclass(frozen=True)
class SetFamily:
    """Family of subsets of [k], stored as a 2^k-bit member vector."""

    k: int
    member: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("ground-set size k must be positive")
        if self.k > FAMILY_KMAX:
            raise CapacityError(f"set families support k <= {FAMILY_KMAX}")
        if self.member < 0 or self.member >> (1 << self.k):
            raise ValueError("member vector wider than 2^k bits")

    @classmethod
    def from_masks(cls, k: int, masks: Iterable[int]) -> "SetFamily":
        member = 0
        for s in masks:
            if s < 0 or s >> k:
                raise ValueError(f"subset mask {s} out of range for k={k}")
            member |= 1 << s
        return cls(k, member)

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build from element collections, e.g. from_sets(2, [{1}, {1, 2}])."""
        masks = []
        for elems in sets:
            s = 0
            for i in elems:
                if not 1 <= i <= k:
                    raise ValueError(f"element {i} outside [1, {k}]")
                s |= 1 << (i - 1)
            masks.append(s)
        return cls.from_masks(k, masks)

    @property
    def size(self) -> int:
        return self.member.bit_count()

    def members(self) -> Iterator[int]:
        """Member subset masks in ascending order."""
        vec = self.member
        while vec:
            lsb = vec & -vec
            yield lsb.bit_length() - 1
            vec ^= lsb

    def __contains__(self, mask: int) -> bool:
        return 0 <= mask < (1 << self.k) and bool((self.member >> mask) & 1)

    def format(self) -> str:
        """Members as concatenated brace lists in ascending mask order."""
        return "".join(format_subset(s) for s in self.members())


@dataclass(frozen=True)
class MifCatalog:
    """All maximal intersecting families over [k], canonically ordered."""

    k: int
    families: tuple[SetFamily, ...]

    @property
    def count(self) -> int:
        return len(self.families)


def is_intersecting(f: SetFamily) -> bool:
    """True iff every pair of members (a set with itself included) meets."""
    ms = list(f.members())
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if a & b == 0:
                return False
    return True


def is_maximal_intersecting(f: SetFamily) -> bool:
    """Intersecting of the extremal size 2^(k-1)."""
    return f.size == 1 << (f.k - 1) and is_intersecting(f)


def _zero_bit_pattern(k: int, i: int) -> int:
    """2^k-bit mask of the positions s with bit i of s clear."""
    size = 1 << k
    step = 1 << i
    block = (1 << step) - 1
    period = (1 << (2 * step)) - 1
    return block * (((1 << size) - 1) // period)


def upward_closure(f: SetFamily) -> SetFamily:
    """Smallest superset-closed family containing f."""
    vec = f.member
    size = 1 << f.k
    for i in range(f.k):
        step = 1 << i
        vec |= (vec & _zero_bit_pattern(f.k, i)) << step
    return SetFamily(f.k, vec & ((1 << size) - 1))


def extend_to_maximal(f: SetFamily) -> SetFamily:
    """Deterministic maximal intersecting extension of an intersecting f.

    Repeatedly adds the smallest-mask admissible subset and closes
    upward until the family reaches size 2^(k-1).
    """
    if not is_intersecting(f):
        raise ValueError("family is not intersecting")
    g = upward_closure(f)
    target = 1 << (f.k - 1)
    size = 1 << f.k
    while g.size < target:
        added = False
        for s in range(1, size):
            if s in g:
                continue
            if all(s & m for m in g.members()):
                g = upward_closure(SetFamily(f.k, g.member | (1 << s)))
                added = True
                break
        if not added:
            raise AssertionError("no admissible extension below maximal size")
    return g


def _require_within_capacity(k: int) -> int:
    cap = capacity()
    if k < 1:
        raise ValueError("k must be positive")
    if k > cap:
        raise CapacityError(
            f"enumeration capacity is k <= {cap} (hard cap {KMAX_HARD}; see ORCOV_KMAX)"
        )
    return cap


def sorted_mif_masks(k: int) -> list[int]:
    """Member vectors of all maximal intersecting families, ascending."""
    _require_within_capacity(k)
    masks = _kernel.mif_masks(k)
    masks.sort()
    return masks


def enumerate_mifs(k: int) -> MifCatalog:
    """Catalog of all maximal intersecting families over [k].

    Canonical order is ascending member vector.  At k = 7 the catalog
    holds ~1.4 million families; prefer sorted_mif_masks for streaming.
    """
    masks = sorted_mif_masks(k)
    return MifCatalog(k, tuple(SetFamily(k, m) for m in masks))


def hosten_morris(k: int, literature_table: bool = False) -> int:
    """lambda(k): the number of maximal intersecting families over [k].

    Values within the enumeration capacity are computed (and memoized
    per process, initialize-once under the GIL); k = 8, 9 are served
    from LITERATURE_LAMBDA only when literature_table is set.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cap = capacity()
    if k <= cap:
        value = _lambda_cache.get(k)
        if value is None:
            value = _kernel.mif_count(k)
            with _lambda_lock:
                _lambda_cache.setdefault(k, value)
        return value
    if k in LITERATURE_LAMBDA:
        if literature_table:
            return LITERATURE_LAMBDA[k]
        raise CapacityError(
            f"lambda({k}) is only served from the literature table; pass literature_table=True"
        )
    raise CapacityError(
        f"lambda({k}) is beyond the enumeration capacity k <= {cap} "
        f"and the literature table (k <= 9)"
    )


def lambda_provenance(k: int) -> str:
    """Where hosten_morris(k) comes from: "computed" or "literature"."""
    return "literature" if k > KMAX_HARD else "computed"


def find_disjoint_pair(f1: SetFamily, f2: SetFamily) -> tuple[int, int]:
    """Disjoint witnesses (S, T), S in f1, T in f2, for distinct MIFs.

    S is the smallest-mask member of f1 \\ f2; T is its complement,
    which f2 must contain (a maximal intersecting family holds exactly
    one side of every complementary pair).
    """
    if f1.k != f2.k:
        raise ValueError("families live over different ground sets")
    if f1.member == f2.member:
        raise ValueError("families are identical")
    if not is_maximal_intersecting(f1) or not is_maximal_intersecting(f2):
        raise ValueError("both families must be maximal intersecting")
    diff = f1.member & ~f2.member
    s = (diff & -diff).bit_length() - 1
    t = ((1 << f1.k) - 1) ^ s
    assert t in f2
    return s, t
