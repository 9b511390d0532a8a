"""Brute-force reference implementations for small instances.

These recompute the library's answers from the bare definitions:
maximality of a family means no intersecting proper superset (not the
size shortcut), covers are checked triple by triple with a verifier
written here rather than the one in the cover module, and the minimum
cover size is found by scanning multisets of orientations in index
order with no pruning beyond permutation symmetry.  Slow on purpose;
shared code with the fast paths is what these exist to catch.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import BudgetError, CapacityError
from .families import SetFamily
from .graphs import Graph

_TIMEOUT_STRIDE = 0x3FFF


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exhaustive cover search."""

    max_edges: int = 8
    max_k: int = 3
    timeout: float = 300.0

    def __post_init__(self) -> None:
        if self.max_edges < 1 or self.max_k < 1 or self.timeout <= 0:
            raise ValueError("budget fields must be positive")


def brute_mifs(k: int) -> tuple[SetFamily, ...]:
    """All maximal intersecting families over [k] by exhaustive filter.

    Tries every one of the 2^(2^k) candidate families, keeping those
    that are intersecting and admit no intersecting proper superset.
    Returned in ascending member-vector order.
    """
    if not 1 <= k <= 4:
        raise CapacityError("the exhaustive family filter supports k <= 4")
    size = 1 << k
    found = []
    for fam in range(1 << size):
        members = [s for s in range(size) if (fam >> s) & 1]
        intersecting = True
        for a in members:
            for b in members:
                if a & b == 0:
                    intersecting = False
                    break
            if not intersecting:
                break
        if not intersecting:
            continue
        maximal = True
        for s in range(size):
            if (fam >> s) & 1:
                continue
            if s != 0 and all(s & m for m in members):
                maximal = False
                break
        if maximal:
            found.append(SetFamily(k, fam))
    return tuple(found)


def _neighbor_lists(g: Graph) -> list[list[int]]:
    return [list(g.neighbors(x)) for x in range(g.n)]


def _covers(nbrs: list[list[int]], n: int, rowset: list[list[int]]) -> bool:
    """Literal covering check: every (x, y, z) with y, z neighbors of x
    must have an orientation directing both edges away from x."""
    for x in range(n):
        for y in nbrs[x]:
            yb = 1 << y
            for z in nbrs[x]:
                zb = 1 << z
                for rows in rowset:
                    rx = rows[x]
                    if rx & yb and rx & zb:
                        break
                else:
                    return False
    return True


def brute_sigma(g: Graph, budget: SearchBudget | None = None) -> int | None:
    """Exact sigma(g) by exhaustive search, or None if above max_k.

    Enumerates, for k = 1, 2, ..., all multisets of the 2^m possible
    orientations (indices non-decreasing, which only removes
    permutation symmetry) and returns the first k admitting a cover.
    None means the whole space up to max_k was exhausted: a proof that
    sigma(g) > max_k, not a budget failure.
    """
    if budget is None:
        budget = SearchBudget()
    if g.m == 0:
        raise ValueError("sigma is defined only for non-empty graphs")
    if g.m > budget.max_edges:
        raise BudgetError(
            f"graph has {g.m} edges; the search budget allows {budget.max_edges}"
        )
    deadline = time.monotonic() + budget.timeout
    n = g.n
    norient = 1 << g.m
    all_rows = []
    for o in range(norient):
        rows = [0] * n
        for e, (u, v) in enumerate(g.edges):
            if (o >> e) & 1:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
        all_rows.append(rows)
    nbrs = _neighbor_lists(g)
    tick = 0
    for k in range(1, budget.max_k + 1):
        for combo in itertools.combinations_with_replacement(range(norient), k):
            tick += 1
            if tick & _TIMEOUT_STRIDE == 0 and time.monotonic() > deadline:
                raise BudgetError(
                    f"search budget of {budget.timeout}s exhausted at k={k}"
                )
            if _covers(nbrs, n, [all_rows[i] for i in combo]):
                return k
    return None


def brute_chromatic(g: Graph) -> int:
    """Exact chromatic number by enumerating all color assignments."""
    if g.n > 8:
        raise CapacityError("the exhaustive coloring filter supports n <= 8")
    for t in range(1, g.n + 1):
        for assignment in itertools.product(range(t), repeat=g.n):
            for u, v in g.edges:
                if assignment[u] == assignment[v]:
                    break
            else:
                return t
    raise AssertionError("n colors always suffice")
