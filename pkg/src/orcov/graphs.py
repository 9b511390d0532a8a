"""Simple undirected graphs, orientations, parsers, and exact coloring.

Graphs are immutable: vertices are 0..n-1, adjacency is a tuple of
bitmask rows, and the edge list is kept in canonical order
(lexicographically sorted pairs (u, v) with u < v).  Orientations are
indexed against that canonical edge order, which makes certificates
bit-exact and diffable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapacityError, ParseError

DEFAULT_CHI_VERTEX_BOUND = 32


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitmask adjacency rows.

    Invariants (checked on construction): adjacency is symmetric, has
    no self-loops, and `edges` is exactly the sorted, deduplicated
    list of adjacent pairs (u, v) with u < v.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        for u, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"adjacency row of vertex {u} addresses vertices >= n")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        derived = tuple(
            (u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v
        )
        if self.edges != derived:
            raise ValueError("edge list does not match adjacency rows")

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: Optional[int] = None) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse.

        Without an explicit n the vertex count is 1 + max endpoint.
        """
        canon = set()
        top = -1
        for u, v in edges:
            if u < 0 or v < 0:
                raise ValueError(f"negative endpoint in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v})")
            canon.add((u, v) if u < v else (v, u))
            top = max(top, u, v)
        if n is None:
            if top < 0:
                raise ValueError("cannot infer vertex count from an empty edge list")
            n = top + 1
        elif top >= n:
            raise ValueError(f"endpoint {top} out of range for n={n}")
        adj = [0] * n
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(sorted(canon)))

    def neighbors(self, u: int) -> Iterator[int]:
        return _bits(self.adj[u])

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(
            [(perm[u], perm[v]) for u, v in self.edges], n=self.n
        )

    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map canonical edge (u, v), u < v, to its position."""
        return {e: i for i, e in enumerate(self.edges)}


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of a graph with the same shape (n, m).

    Edge e = (u, v) with u < v in the owning graph's canonical order is
    oriented u -> v iff bit e of `bits` is set.
    """

    n: int
    m: int
    bits: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.bits < 0 or self.bits >> self.m:
            raise ValueError("orientation bits exceed edge count")

    @classmethod
    def from_dir(cls, n: int, dir_flags: Sequence[bool]) -> "Orientation":
        bits = 0
        for e, flag in enumerate(dir_flags):
            if flag:
                bits |= 1 << e
        return cls(n, len(dir_flags), bits)

    @property
    def dir(self) -> tuple[bool, ...]:
        return tuple(bool((self.bits >> e) & 1) for e in range(self.m))

    def matches_shape(self, g: Graph) -> bool:
        return self.n == g.n and self.m == g.m

    def out_rows(self, g: Graph) -> list[int]:
        """Out-neighbor bitmask per vertex under this orientation."""
        if not self.matches_shape(g):
            raise ValueError("orientation shape does not match graph")
        rows = [0] * g.n
        for e, (u, v) in enumerate(g.edges):
            if (self.bits >> e) & 1:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
        return rows


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring using color indices 0..t-1, all occupied."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("coloring needs at least one color")
        used = set(self.colors)
        if used != set(range(self.t)):
            raise ValueError("color indices must occupy exactly 0..t-1")


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines into a graph.

    An optional first line "n <count>" pins the vertex count (needed
    for trailing isolated vertices); otherwise n = 1 + max endpoint.
    Duplicate edges collapse; self-loops are rejected with their line
    number.
    """
    pinned: Optional[int] = None
    edges: list[tuple[int, int]] = []
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks:
            continue
        if not saw_content and toks[0] == "n":
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: header must be 'n <count>'")
            try:
                pinned = int(toks[1])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex count {toks[1]!r}") from None
            if pinned < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            saw_content = True
            continue
        saw_content = True
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            bad = toks[0] if not toks[0].lstrip("-").isdigit() else toks[1]
            raise ParseError(f"line {lineno}: non-integer token {bad!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative endpoint")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop {u} {v}")
        if pinned is not None and max(u, v) >= pinned:
            raise ParseError(f"line {lineno}: endpoint {max(u, v)} out of range for n={pinned}")
        edges.append((u, v))
    if not saw_content:
        raise ParseError("empty edge-list input")
    if not edges and pinned is None:
        raise ParseError("no edges and no 'n <count>' header")
    return Graph.from_edges(edges, n=pinned)


_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (short form, n <= 62).

    Payload bits fill the upper triangle column by column: (0,1),
    (0,2), (1,2), (0,3), ...  Every byte must lie in 63..126.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise ParseError("empty graph6 input")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 input is not ASCII") from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b} at position {i} outside graph6 range 63..126")
    if data[0] == 126:
        raise ParseError("long-form graph6 (n >= 63) is not supported")
    n = data[0] - 63
    if n == 0:
        raise ParseError("graph6 encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) < nbytes:
        raise ParseError(f"truncated graph6 payload: need {nbytes} bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise ParseError("trailing data after graph6 payload")
    adj = [0] * n
    idx = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for b in payload:
        val = b - 63
        for shift in range(5, -1, -1):
            if idx >= nbits:
                break
            if (val >> shift) & 1:
                u, v = pairs[idx]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    edges = tuple((u, v) for u in range(n) for v in _bits(adj[u]) if u < v)
    return Graph(n, tuple(adj), edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph in graph6 short form (n <= 62)."""
    if g.n > 62:
        raise CapacityError("graph6 short form supports at most 62 vertices")
    out = [chr(63 + g.n)]
    val = 0
    nfilled = 0
    for v in range(1, g.n):
        for u in range(v):
            val = (val << 1) | ((g.adj[u] >> v) & 1)
            nfilled += 1
            if nfilled == 6:
                out.append(chr(63 + val))
                val = 0
                nfilled = 0
    if nfilled:
        out.append(chr(63 + (val << (6 - nfilled))))
    return "".join(out)


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph.from_edges(
        [(u, v) for u in range(n) for v in range(u + 1, n)], n=n
    )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    if n == 1:
        return Graph(1, (0,), ())
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def wheel_graph(n: int) -> Graph:
    """Wheel on n vertices: hub 0 joined to the cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel_graph needs n >= 4")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    spokes = [(0, i) for i in range(1, n)]
    return Graph.from_edges(rim + spokes, n=n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(outer + inner + spokes, n=10)


# ---------------------------------------------------------------------------
# exact coloring
# ---------------------------------------------------------------------------

def _greedy_clique(g: Graph) -> list[int]:
    """Deterministic greedy clique; its size lower-bounds chi."""
    clique: list[int] = []
    cand = (1 << g.n) - 1
    while cand:
        best, best_score = -1, -1
        for v in _bits(cand):
            score = (g.adj[v] & cand).bit_count()
            if score > best_score:
                best, best_score = v, score
        clique.append(best)
        cand &= g.adj[best]
    return clique


def proper_coloring(g: Graph, t: int) -> Optional[Coloring]:
    """First proper coloring with at most t colors, or None.

    Branch and bound in saturation order: the next vertex is the
    uncolored one with the most distinct neighbor colors, ties broken
    by lowest index.  Color classes are introduced in order (a fresh
    color is only tried once per vertex), so the search is
    deterministic and symmetry-reduced.
    """
    if t < 1:
        raise ValueError("t must be positive")
    n = g.n
    colors = [-1] * n

    def backtrack(num_colored: int, max_used: int) -> bool:
        if num_colored == n:
            return True
        best_v, best_sat, best_mask = -1, -1, 0
        for v in range(n):
            if colors[v] >= 0:
                continue
            mask = 0
            for w in _bits(g.adj[v]):
                if colors[w] >= 0:
                    mask |= 1 << colors[w]
            sat = mask.bit_count()
            if sat > best_sat:
                best_v, best_sat, best_mask = v, sat, mask
        limit = min(t, max_used + 2)
        for c in range(limit):
            if (best_mask >> c) & 1:
                continue
            colors[best_v] = c
            if backtrack(num_colored + 1, max(max_used, c)):
                return True
            colors[best_v] = -1
        return False

    if not backtrack(0, -1):
        return None
    return Coloring(tuple(colors), max(colors) + 1)


def chromatic_number(g: Graph, max_vertices: int = DEFAULT_CHI_VERTEX_BOUND) -> int:
    """Exact chromatic number (refuses graphs above the vertex bound)."""
    if g.n > max_vertices:
        raise CapacityError(
            f"exact chromatic number limited to {max_vertices} vertices (graph has {g.n}); "
            "raise max_vertices to override"
        )
    if g.m == 0:
        return 1
    t = len(_greedy_clique(g))
    while True:
        if proper_coloring(g, t) is not None:
            return t
        t += 1
