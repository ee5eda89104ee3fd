"""Three-cycle homotopy classification and cable/rod edge analysis.

An edge is shrinkable (a cable) or unshrinkable (a rod).  Two regimes are
supported.  In literal mode a rod is an edge lying in a nonfacial 3-cycle,
a boundary edge of a length-3 boundary cycle, or a chord of the boundary.
In agreement mode, which requires the underlying closed surface to differ
from the sphere, only non-null-homotopic (essential) 3-cycles and chords
make rods.  The pipeline always runs in agreement mode.

Null-homotopy of a 3-cycle is decided by cutting: faces are grouped into
components connected across edges outside the cycle; the cycle bounds a
disk exactly when there are two components and one of them, with the
cycle's vertices and edges counted on both sides, has Euler
characteristic 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence

from .surface import (Edge, Face, Triangulation, boundary_cycles, classify,
                      face_edges)

LITERAL = "literal"
AGREEMENT = "agreement"


@dataclass(frozen=True)
class CycleVerdict:
    cycle: Face
    facial: bool
    null_homotopic: bool


@dataclass(frozen=True)
class EdgeClass:
    edge: Edge
    verdict: str  # "cable" or "rod"
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class CableSubgraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]


class AgreementModeError(ValueError):
    """Agreement mode asked for on a sphere or disk."""


def _check_mode(mode: str) -> None:
    if mode not in (LITERAL, AGREEMENT):
        raise ValueError(f"unknown mode {mode!r}")


def require_agreement_applicable(t: Triangulation) -> None:
    sc = classify(t)
    chi_closed = sc.euler_characteristic + len(sc.boundary_cycles)
    if chi_closed == 2 and sc.orientable:
        raise AgreementModeError(
            "agreement mode is undefined when the underlying closed "
            "surface is the sphere")


def graph_three_cycles(t: Triangulation) -> list[Face]:
    """All triangles of the graph of t, facial or not."""
    adj = t.adjacency
    out = []
    for u, v in t.edges:
        for w in adj[u] & adj[v]:
            if w > v:
                out.append((u, v, w))
    out.sort()
    return out


def three_cycles(t: Triangulation) -> list[CycleVerdict]:
    """Every 3-cycle of the graph with its facial/homotopy verdict."""
    fset = t.face_set
    out = []
    for cyc in graph_three_cycles(t):
        facial = cyc in fset
        out.append(CycleVerdict(cyc, facial,
                                True if facial else is_null_homotopic(t, cyc)))
    return out


def is_null_homotopic(t: Triangulation, cycle: Iterable[int]) -> bool:
    """Whether a 3-cycle bounds a disk in the (possibly punctured) surface.

    Facial cycles bound their face.  A boundary 3-cycle of a punctured
    surface bounds only the removed disk and therefore reports False.
    """
    a, b, c = sorted(cycle)
    ef = t.edge_faces
    cedges = ((a, b), (a, c), (b, c))
    for e in cedges:
        if e not in ef:
            raise ValueError(f"{(a, b, c)} is not a cycle of the graph")
    if (a, b, c) in t.face_set:
        return True
    memo = t._cache.setdefault("null_homotopy", {})
    cached = memo.get((a, b, c))
    if cached is None:
        cached = _cut_and_count(t, (a, b, c))
        memo[(a, b, c)] = cached
    return cached


def _cut_and_count(t: Triangulation, cyc: Face) -> bool:
    nf = len(t.faces)
    parent = list(range(nf))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cset = set(face_edges(cyc))
    for e, fs in t.edge_faces.items():
        if len(fs) == 2 and e not in cset:
            ra, rb = find(fs[0]), find(fs[1])
            if ra != rb:
                parent[ra] = rb

    roots = {find(i) for i in range(nf)}
    if len(roots) == 1:
        # non-separating or one-sided; also covers a length-3 boundary
        # cycle, whose complement is the whole surface.  On a closed
        # surface a circle cuts off at most two pieces; through boundary
        # vertices of a bordered surface it can split off more lobes.
        return False

    for root in roots:
        # count the cycle's cells into every side; a side bounded by the
        # full cycle and nothing else has chi = 1 exactly when it is a disk
        verts = set(cyc)
        edges = set(cset)
        nfaces = 0
        for i, f in enumerate(t.faces):
            if find(i) == root:
                nfaces += 1
                verts.update(f)
                edges.update(face_edges(f))
        if len(verts) - len(edges) + nfaces == 1:
            return True
    return False


def _edge_essential_reason(t: Triangulation, u: int, v: int) -> bool:
    """True when edge uv lies in some non-null-homotopic 3-cycle."""
    adj = t.adjacency
    fset = t.face_set
    for w in adj[u] & adj[v]:
        cyc = tuple(sorted((u, v, w)))
        if cyc in fset:
            continue
        if not is_null_homotopic(t, cyc):
            return True
    return False


def _edge_nonfacial_reason(t: Triangulation, u: int, v: int) -> bool:
    adj = t.adjacency
    fset = t.face_set
    for w in adj[u] & adj[v]:
        if tuple(sorted((u, v, w))) not in fset:
            return True
    return False


def classify_edges(t: Triangulation, mode: str) -> list[EdgeClass]:
    """Cable/rod verdict for every edge, with machine-checkable reasons."""
    _check_mode(mode)
    if mode == AGREEMENT:
        require_agreement_applicable(t)
    b_edges = t.boundary_edges
    b_vertices = t.boundary_vertices
    cycle_len = {}
    for cyc in boundary_cycles(t):
        for i, x in enumerate(cyc):
            y = cyc[(i + 1) % len(cyc)]
            e = (x, y) if x < y else (y, x)
            cycle_len[e] = len(cyc)
    out = []
    for u, v in t.edges:
        e = (u, v)
        reasons = []
        if mode == LITERAL:
            if _edge_nonfacial_reason(t, u, v):
                reasons.append("nonfacial-3-cycle")
            if e in b_edges and cycle_len[e] == 3:
                reasons.append("boundary-3-cycle")
        else:
            if _edge_essential_reason(t, u, v):
                reasons.append("essential-3-cycle")
        if u in b_vertices and v in b_vertices and e not in b_edges:
            reasons.append("chord")
        out.append(EdgeClass(e, "rod" if reasons else "cable", tuple(reasons)))
    return out


def cables(t: Triangulation, mode: str) -> frozenset[Edge]:
    key = ("cables", mode)
    cs = t._cache.get(key)
    if cs is None:
        cs = frozenset(ec.edge for ec in classify_edges(t, mode)
                       if ec.verdict == "cable")
        t._cache[key] = cs
    return cs


def cable_subgraph(t: Triangulation, mode: str) -> CableSubgraph:
    cs = cables(t, mode)
    return CableSubgraph(frozenset(v for e in cs for v in e), cs)


def is_irreducible(t: Triangulation, mode: str) -> bool:
    """Free of cables: every edge is a rod."""
    return not cables(t, mode)


def pylonic_vertices(t: Triangulation,
                     hint_edges: Sequence[Edge] = ()) -> frozenset[int]:
    """Vertices incident with every cable; empty when there are no cables.

    Closed triangulations only, agreement mode.  ``hint_edges`` just biases
    the scan order; the running intersection of cable endpoints empties as
    early as possible, which settles the common no-pylonic case after a
    couple of edge checks.
    """
    if not t.is_closed:
        raise ValueError("pylonic vertices are defined for closed triangulations")
    require_agreement_applicable(t)
    common: set[int] | None = None
    ef = t.edge_faces
    seen: set[Edge] = set()
    for e in chain(hint_edges, t.edges):
        u, v = e
        if u > v:
            u, v = v, u
        if (u, v) in seen or (u, v) not in ef:
            continue
        seen.add((u, v))
        if not _edge_essential_reason(t, u, v):
            if common is None:
                common = {u, v}
            else:
                common.intersection_update((u, v))
                if not common:
                    return frozenset()
    return frozenset(common) if common else frozenset()


def is_pylonic(t: Triangulation) -> bool:
    """At least one cable and at least one vertex meeting all cables."""
    cs = cables(t, AGREEMENT)
    return bool(cs) and bool(pylonic_vertices(t))


def no_common_vertex_certificate(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    """A subfamily of 2 or 3 edges witnessing an empty common vertex set.

    Either two disjoint edges, or three pairwise-meeting edges forming a
    triangle.  Raises ValueError when the family has a common vertex.
    """
    es = list(edges)
    for i, e in enumerate(es):
        for f in es[i + 1:]:
            if not set(e) & set(f):
                return (e, f)
    # pairwise intersecting; a common vertex exists unless three of the
    # edges form a triangle
    for i, e in enumerate(es):
        for f in es[i + 1:]:
            inter = set(e) & set(f)
            if len(inter) == 1:
                (x,) = inter
                third = (set(e) | set(f)) - {x}
                for g in es:
                    if set(g) == third:
                        return (e, f, g)
    raise ValueError("edge family has a common vertex")
