"""Splitting, shrinking, and removal operations on triangulations.

Corners are written as plain tuples ``(u, v, w)`` with apex ``v``; the
pair of edges vu, vw is unordered, so ``(u, v, w)`` and ``(w, v, u)``
denote the same corner.  A truncated corner is ``(u, v)`` with ``v`` on
the boundary and ``u`` interior.  New vertex ids always append at the
end; removals renumber the tail down to keep ids dense.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .surface import (Edge, InvalidTriangulation, Triangulation,
                      boundary_cycles, classify, vertex_link)


class NotShrinkable(ValueError):
    """Edge contraction refused; ``kind`` is multi-edge, topology, or
    degenerate."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def corners(t: Triangulation) -> Iterator[tuple[int, int, int]]:
    """All corners (u, v, w), apex v, with u < w, in deterministic order."""
    adj = t.adjacency
    for v in range(t.vertex_count):
        nbrs = sorted(adj[v])
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                yield (u, v, w)


def split_corner(t: Triangulation, corner: tuple[int, int, int],
                 validate: bool = True) -> Triangulation:
    """Split the corner (u, v, w) of a closed triangulation.

    Vertex v is cut into v' (keeping id v) and v'' (the new last id); the
    rotation at v splits at u and w, the arc running from u forward to w
    in the stored link order staying with v'.  Two faces v'v''u and v'v''w
    close the cut.  The split of a valid closed triangulation is again
    valid; pass ``validate=False`` to skip revalidation in bulk sweeps.
    """
    u, v, w = corner
    if not t.is_closed:
        raise ValueError("corner splitting applies to closed triangulations")
    if u == w or not (t.has_edge(u, v) and t.has_edge(w, v)):
        raise ValueError(f"({u}, {v}, {w}) is not a corner")
    link = vertex_link(t, v)
    i, j = link.index(u), link.index(w)
    if i <= j:
        arc = link[i:j + 1]
    else:
        arc = link[i:] + link[:j + 1]
    arc_pairs = set()
    for k in range(len(arc) - 1):
        x, y = arc[k], arc[k + 1]
        arc_pairs.add((x, y) if x < y else (y, x))
    nv = t.vertex_count
    faces: list[tuple[int, ...]] = []
    for f in t.faces:
        if v in f:
            x, y = (z for z in f if z != v)
            e = (x, y) if x < y else (y, x)
            faces.append(f if e in arc_pairs else (nv, x, y))
        else:
            faces.append(f)
    faces.append((v, nv, u))
    faces.append((v, nv, w))
    return Triangulation(nv + 1, faces, _validated=not validate)


def split_edge_image(t: Triangulation, corner: tuple[int, int, int],
                     e: Iterable[int],
                     link: tuple[int, ...] | None = None) -> Edge:
    """Image of an edge of t under split_corner(t, corner).

    An edge avoiding the apex maps to itself; an edge at the apex stays
    with whichever of the two apex copies retains it (the arc endpoints u
    and w stay with v).  ``link`` may pass a precomputed vertex_link of
    the apex.
    """
    u, v, w = corner
    x, y = _norm_edge(e)
    if v not in (x, y):
        return (x, y)
    other = y if x == v else x
    if link is None:
        link = vertex_link(t, v)
    i, j, k = link.index(u), link.index(w), link.index(other)
    in_arc = i <= k <= j if i <= j else (k >= i or k <= j)
    copy = v if in_arc else t.vertex_count
    return (copy, other) if copy < other else (other, copy)


def split_truncated_corner(t: Triangulation,
                           tc: tuple[int, int]) -> Triangulation:
    """Split the truncated corner (u, v): v on the boundary, u interior.

    Cuts from the boundary through the edge uv; v becomes v' (id v) and
    v'' (new id), joined only through the single new face uv'v'', whose
    edge v'v'' lies on the boundary.  The boundary grows by one vertex.
    """
    u, v = tc
    if t.is_closed:
        raise ValueError("truncated-corner splitting applies to bordered "
                         "triangulations")
    if v not in t.boundary_vertices:
        raise ValueError(f"vertex {v} is not on the boundary")
    if u in t.boundary_vertices:
        raise ValueError(f"vertex {u} is on the boundary")
    if not t.has_edge(u, v):
        raise ValueError(f"{u}{v} is not an edge")
    path = vertex_link(t, v)
    j = path.index(u)
    nv = t.vertex_count
    prefix_pairs = set()
    for k in range(j):
        x, y = path[k], path[k + 1]
        prefix_pairs.add((x, y) if x < y else (y, x))
    faces: list[tuple[int, ...]] = []
    for f in t.faces:
        if v in f:
            x, y = (z for z in f if z != v)
            e = (x, y) if x < y else (y, x)
            faces.append(f if e in prefix_pairs else (nv, x, y))
        else:
            faces.append(f)
    faces.append((u, v, nv))
    return Triangulation(nv + 1, faces)


def shrink_edge(t: Triangulation, e: Iterable[int]) -> Triangulation:
    """Contract the edge e, collapsing its incident faces to edges.

    Succeeds only when the result is a valid triangulation of the same
    topological type; otherwise raises NotShrinkable with kind
    ``multi-edge`` (the endpoints share neighbors beyond the collapsed
    faces), ``topology`` (the complex survives but the surface changes),
    or ``degenerate`` (no face structure is left).
    """
    a, b = _norm_edge(e)
    ef = t.edge_faces
    if (a, b) not in ef:
        raise ValueError(f"{a}{b} is not an edge")
    if t.vertex_count - 1 < 3:
        raise NotShrinkable("degenerate", "contraction would leave fewer "
                                          "than 3 vertices")
    collapsing = ef[(a, b)]
    thirds = {sum(t.faces[i]) - a - b for i in collapsing}
    common = t.adjacency[a] & t.adjacency[b]
    if common != thirds:
        extra = sorted(common - thirds)
        raise NotShrinkable(
            "multi-edge",
            f"contracting {a}{b} doubles the edges to {extra}")
    faces = []
    drop = set(collapsing)
    for i, f in enumerate(t.faces):
        if i in drop:
            continue
        faces.append(tuple(a if x == b else (x - 1 if x > b else x)
                           for x in f))
    try:
        out = Triangulation(t.vertex_count - 1, faces)
    except InvalidTriangulation as exc:
        raise NotShrinkable("degenerate", f"contraction of {a}{b} does not "
                                          f"leave a triangulation: {exc}")
    if classify(out).topology != classify(t).topology:
        raise NotShrinkable(
            "topology",
            f"contracting {a}{b} changes the surface from "
            f"{classify(t).name} to {classify(out).name}")
    return out


def is_contractible(t: Triangulation, e: Iterable[int]) -> bool:
    """Whether shrink_edge succeeds (literal shrinkability)."""
    try:
        shrink_edge(t, e)
    except NotShrinkable:
        return False
    return True


def remove_vertex(t: Triangulation, v: int) -> Triangulation:
    """Delete v with the interiors of its incident edges and faces.

    The result is a bordered triangulation whose new boundary is the link
    of v.  Vertex ids above v shift down by one.
    """
    if not t.is_closed:
        raise ValueError("vertex removal applies to closed triangulations")
    if not 0 <= v < t.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    faces = [tuple(x - 1 if x > v else x for x in f)
             for f in t.faces if v not in f]
    return Triangulation(t.vertex_count - 1, faces)


def remove_face(t: Triangulation, face: Iterable[int]) -> Triangulation:
    """Delete the interior of one face; its 3-cycle becomes the boundary."""
    if not t.is_closed:
        raise ValueError("face removal applies to closed triangulations")
    f = tuple(sorted(face))
    if f not in t.face_set:
        raise ValueError(f"{f} is not a face")
    return Triangulation(t.vertex_count, [g for g in t.faces if g != f])


def remove_cable(t: Triangulation, e: Iterable[int]) -> Triangulation:
    """Delete the open edge e and the interiors of its two faces.

    For e = ab with faces abx and aby the new boundary is the 4-cycle
    (a, x, b, y); all vertices survive.
    """
    if not t.is_closed:
        raise ValueError("cable removal applies to closed triangulations")
    a, b = _norm_edge(e)
    fs = t.edge_faces.get((a, b))
    if fs is None:
        raise ValueError(f"{a}{b} is not an edge")
    if len(fs) != 2:
        raise ValueError(f"{a}{b} is a boundary edge")
    drop = set(fs)
    faces = [f for i, f in enumerate(t.faces) if i not in drop]
    return Triangulation(t.vertex_count, faces)


def close_hole(t: Triangulation) -> tuple[Triangulation, int]:
    """Cone the unique boundary cycle with a new central vertex.

    Returns the closed triangulation and the id of the added vertex.
    """
    cycles = boundary_cycles(t)
    if len(cycles) != 1:
        raise ValueError(f"expected one boundary cycle, found {len(cycles)}")
    cycle = cycles[0]
    p = t.vertex_count
    faces = list(t.faces)
    for i, x in enumerate(cycle):
        faces.append((x, cycle[(i + 1) % len(cycle)], p))
    return Triangulation(p + 1, faces), p
