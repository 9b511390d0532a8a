"""Orientation coverings: verification, construction, and certificates.

A list of orientations covers a graph when, for every vertex x and
every ordered pair of its neighbors y, z (y = z included), some
orientation directs both xy and xz away from x.  Covers translate to
per-vertex set families and back: the direction set of a directed
edge (x, y) collects the orientation indices sending x to y, and a
valid cover makes every vertex's collection of direction sets an
intersecting family.  Minimum covers are built by coloring the graph
and handing each color class its own maximal intersecting family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CapacityError, ParseError
from .families import FAMILY_KMAX, SetFamily, enumerate_mifs, is_intersecting
from .graphs import (
    DEFAULT_CHI_VERTEX_BOUND,
    Graph,
    Orientation,
    _bits,
    proper_coloring,
)
from .sigma import sigma_of_graph


@dataclass(frozen=True)
class FamilyAssignment:
    """One set family over [k] per vertex."""

    k: int
    per_vertex: tuple[SetFamily, ...]

    def __post_init__(self) -> None:
        for f in self.per_vertex:
            if f.k != self.k:
                raise ValueError("family ground set does not match assignment k")


@dataclass(frozen=True)
class AssignmentViolation:
    """First failed condition of an assignment, with its witness."""

    condition: int
    edge: Optional[tuple[int, int]] = None
    vertex: Optional[int] = None


@dataclass(frozen=True)
class CertificateMeta:
    """Construction provenance: coloring, catalog indices, direction sets."""

    coloring: Optional[tuple[int, ...]] = None
    family_indices: Optional[tuple[int, ...]] = None
    direction_sets: Optional[dict[tuple[int, int], int]] = None


@dataclass(frozen=True)
class CoverCertificate:
    """k orientations plus optional construction metadata."""

    k: int
    orientations: tuple[Orientation, ...]
    meta: Optional[CertificateMeta] = None

    def __post_init__(self) -> None:
        if self.k != len(self.orientations):
            raise ValueError("k does not match the number of orientations")


def _check_shapes(g: Graph, orientations: Sequence[Orientation]) -> None:
    for o in orientations:
        if not o.matches_shape(g):
            raise ValueError(
                f"orientation shape ({o.n}, {o.m}) does not match graph ({g.n}, {g.m})"
            )


def verify_cover(
    g: Graph, orientations: Sequence[Orientation]
) -> Optional[tuple[int, int, int]]:
    """None iff the orientations cover g; else the smallest bad triple.

    A triple (x, y, z) with xy, xz edges is bad when no orientation
    directs both away from x; y = z counts, so every directed edge
    must appear somewhere.  The returned counterexample is the
    lexicographically smallest one.
    """
    _check_shapes(g, orientations)
    rows = [o.out_rows(g) for o in orientations]
    for x in range(g.n):
        nbrs = g.adj[x]
        if nbrs == 0:
            continue
        for y in _bits(nbrs):
            covered = 0
            for r in rows:
                if (r[x] >> y) & 1:
                    covered |= r[x]
            missing = nbrs & ~covered
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, y, z)
    return None


def families_from_cover(
    g: Graph, orientations: Sequence[Orientation]
) -> FamilyAssignment:
    """Direction-set families of a cover: A_v = {S_(v,w) : vw an edge}.

    S_(v,w) is the set of orientation indices (1-based elements of
    [k]) directing v to w.  For a valid cover every A_v comes out
    intersecting; an invalid cover shows up as a failed condition in
    validate_assignment, not as an error here.
    """
    _check_shapes(g, orientations)
    k = len(orientations)
    if k < 1:
        raise ValueError("need at least one orientation")
    if k > FAMILY_KMAX:
        raise CapacityError(f"direction-set families support at most k = {FAMILY_KMAX}")
    rows = [o.out_rows(g) for o in orientations]
    per_vertex = []
    for v in range(g.n):
        member = 0
        for w in _bits(g.adj[v]):
            s = 0
            for i, r in enumerate(rows):
                if (r[v] >> w) & 1:
                    s |= 1 << i
            member |= 1 << s
        per_vertex.append(SetFamily(k, member))
    return FamilyAssignment(k, tuple(per_vertex))


def validate_assignment(
    g: Graph, fa: FamilyAssignment
) -> Optional[AssignmentViolation]:
    """None iff both cover conditions hold; else the first violation.

    Condition 1: every edge uv admits disjoint S in A_u, T in A_v.
    Condition 2: every A_v is intersecting.
    """
    if len(fa.per_vertex) != g.n:
        raise ValueError("assignment size does not match vertex count")
    for u, v in g.edges:
        if _disjoint_members(fa.per_vertex[u], fa.per_vertex[v]) is None:
            return AssignmentViolation(condition=1, edge=(u, v))
    for v in range(g.n):
        if not is_intersecting(fa.per_vertex[v]):
            return AssignmentViolation(condition=2, vertex=v)
    return None


def _disjoint_members(fu: SetFamily, fv: SetFamily) -> Optional[tuple[int, int]]:
    """Smallest-mask S in fu admitting a disjoint T in fv, then smallest T."""
    for s in fu.members():
        for t in fv.members():
            if s & t == 0:
                return (s, t)
    return None


def cover_from_families(g: Graph, fa: FamilyAssignment) -> CoverCertificate:
    """Build a k-orientation cover from a valid family assignment.

    Each edge uv gets deterministic disjoint direction sets
    (smallest-mask choices); orientation i then directs uv by
    membership of i, and slots claimed by neither set default to
    low -> high.
    """
    if len(fa.per_vertex) != g.n:
        raise ValueError("assignment size does not match vertex count")
    k = fa.k
    direction_sets: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        pair = _disjoint_members(fa.per_vertex[u], fa.per_vertex[v])
        if pair is None:
            raise ValueError(
                f"condition 1 violated at edge ({u}, {v}): no disjoint direction sets"
            )
        s, t = pair
        direction_sets[(u, v)] = s
        direction_sets[(v, u)] = t
    orientations = []
    for i in range(k):
        bits = 0
        for e, (u, v) in enumerate(g.edges):
            if (direction_sets[(u, v)] >> i) & 1:
                bits |= 1 << e
            elif (direction_sets[(v, u)] >> i) & 1:
                pass
            else:
                bits |= 1 << e
        orientations.append(Orientation(g.n, g.m, bits))
    meta = CertificateMeta(direction_sets=direction_sets)
    return CoverCertificate(k, tuple(orientations), meta)


def construct_cover(
    g: Graph, max_chi_vertices: int = DEFAULT_CHI_VERTEX_BOUND
) -> CoverCertificate:
    """Minimum orientation covering of g, with provenance metadata.

    Colors g with chi colors, assigns color class c the c-th maximal
    intersecting family over [sigma] in canonical order, and converts
    the assignment to orientations.  The certificate has exactly
    sigma(g) orientations and passes verify_cover.
    """
    if g.m == 0:
        raise ValueError("cover construction requires a non-empty graph")
    res = sigma_of_graph(g, max_chi_vertices=max_chi_vertices)
    coloring = proper_coloring(g, res.chi)
    assert coloring is not None and coloring.t == res.chi
    catalog = enumerate_mifs(res.value)
    fa = FamilyAssignment(
        res.value,
        tuple(catalog.families[coloring.colors[v]] for v in range(g.n)),
    )
    cert = cover_from_families(g, fa)
    meta = CertificateMeta(
        coloring=coloring.colors,
        family_indices=tuple(range(res.chi)),
        direction_sets=cert.meta.direction_sets if cert.meta else None,
    )
    return CoverCertificate(cert.k, cert.orientations, meta)


# ---------------------------------------------------------------------------
# certificate serialization
# ---------------------------------------------------------------------------

def _subset_elements(mask: int) -> list[int]:
    return [b + 1 for b in _bits(mask)]


def certificate_to_json(g: Graph, cert: CoverCertificate) -> str:
    """Serialize a certificate against its graph.

    Field order is fixed (n, m, k, edges, orientations, meta) and the
    output is byte-identical across runs; each orientation sits on its
    own line.
    """
    _check_shapes(g, cert.orientations)
    orientation_rows = [
        [bool((o.bits >> e) & 1) for e in range(g.m)] for o in cert.orientations
    ]
    meta = cert.meta
    if meta is None:
        meta_doc = None
    else:
        meta_doc = {
            "coloring": list(meta.coloring) if meta.coloring is not None else None,
            "family_indices": (
                list(meta.family_indices) if meta.family_indices is not None else None
            ),
            "direction_sets": (
                {
                    f"{x}->{y}": _subset_elements(s)
                    for (x, y), s in sorted(meta.direction_sets.items())
                }
                if meta.direction_sets is not None
                else None
            ),
        }
    lines = [
        "{",
        f'  "n": {g.n},',
        f'  "m": {g.m},',
        f'  "k": {cert.k},',
        f'  "edges": {json.dumps([[u, v] for u, v in g.edges])},',
        '  "orientations": [',
    ]
    lines.append(
        ",\n".join("    " + json.dumps(row) for row in orientation_rows)
    )
    lines.append("  ],")
    lines.append(f'  "meta": {json.dumps(meta_doc)}')
    lines.append("}")
    return "\n".join(lines)


def certificate_from_json(text: str, g: Graph) -> CoverCertificate:
    """Parse and shape-check a certificate against g."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("certificate must be a JSON object")
    for key in ("n", "m", "k", "edges", "orientations"):
        if key not in doc:
            raise ParseError(f"certificate is missing field {key!r}")
    if doc["n"] != g.n or doc["m"] != g.m:
        raise ParseError(
            f"certificate shape ({doc['n']}, {doc['m']}) does not match graph ({g.n}, {g.m})"
        )
    try:
        edges = [tuple(e) for e in doc["edges"]]
    except TypeError:
        raise ParseError("certificate edges must be [u, v] pairs") from None
    if edges != list(g.edges):
        raise ParseError("certificate edge list does not match the graph's canonical edges")
    raw_orients = doc["orientations"]
    if not isinstance(raw_orients, list) or len(raw_orients) != doc["k"]:
        raise ParseError("orientation count does not match k")
    orientations = []
    for flags in raw_orients:
        if len(flags) != g.m or not all(isinstance(b, bool) for b in flags):
            raise ParseError("each orientation must list m booleans")
        orientations.append(Orientation.from_dir(g.n, flags))
    meta = None
    raw_meta = doc.get("meta")
    if isinstance(raw_meta, dict):
        coloring = raw_meta.get("coloring")
        indices = raw_meta.get("family_indices")
        raw_ds = raw_meta.get("direction_sets")
        direction_sets = None
        if isinstance(raw_ds, dict):
            direction_sets = {}
            for key, elems in raw_ds.items():
                x, _, y = key.partition("->")
                mask = 0
                for i in elems:
                    mask |= 1 << (int(i) - 1)
                direction_sets[(int(x), int(y))] = mask
        meta = CertificateMeta(
            coloring=tuple(coloring) if coloring is not None else None,
            family_indices=tuple(indices) if indices is not None else None,
            direction_sets=direction_sets,
        )
    return CoverCertificate(doc["k"], tuple(orientations), meta)
