"""Triangulation value type, simplicial-surface validation, and classification.

A triangulation is stored purely combinatorially: a vertex count and a set
of triangular faces over dense integer vertex ids.  Values are immutable
after construction and all derived structure (edge map, links, boundary)
is computed lazily and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Face = tuple[int, int, int]
Edge = tuple[int, int]


class InvalidTriangulation(ValueError):
    """Raised when a face list violates the simplicial-surface axioms.

    ``code`` names the first violated invariant:
    ``bad-vertex-id``, ``degenerate-face``, ``duplicate-face``,
    ``isolated-vertex``, ``edge-multiplicity``, ``broken-link``,
    ``disconnected``, ``empty``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _sorted_face(face: Iterable[int]) -> Face:
    a, b, c = sorted(face)
    return (a, b, c)


def face_edges(face: Face) -> tuple[Edge, Edge, Edge]:
    a, b, c = face
    return ((a, b), (a, c), (b, c))


class Triangulation:
    """An immutable triangulation of a closed or bordered surface."""

    __slots__ = ("vertex_count", "faces", "label", "_cache")

    def __init__(self, vertex_count: int, faces: Sequence[Iterable[int]],
                 label: str | None = None, _validated: bool = False):
        norm = tuple(sorted(_sorted_face(f) for f in faces))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "faces", norm)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_cache", {})
        if not _validated:
            _validate(self)

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.faces == other.faces)

    def __hash__(self):
        return hash((self.vertex_count, self.faces))

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return (f"<Triangulation{tag} V={self.vertex_count} "
                f"E={len(self.edges)} F={len(self.faces)}>")

    # -- derived structure (lazy) --------------------------------------

    @property
    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        """Map from each edge to the indices of its incident faces."""
        ef = self._cache.get("edge_faces")
        if ef is None:
            ef = {}
            for i, f in enumerate(self.faces):
                for e in face_edges(f):
                    if e in ef:
                        ef[e].append(i)
                    else:
                        ef[e] = [i]
            ef = {e: tuple(fs) for e, fs in ef.items()}
            self._cache["edge_faces"] = ef
        return ef

    @property
    def edges(self) -> tuple[Edge, ...]:
        es = self._cache.get("edges")
        if es is None:
            es = tuple(sorted(self.edge_faces))
            self._cache["edges"] = es
        return es

    @property
    def face_set(self) -> frozenset[Face]:
        fs = self._cache.get("face_set")
        if fs is None:
            fs = frozenset(self.faces)
            self._cache["face_set"] = fs
        return fs

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex."""
        adj = self._cache.get("adjacency")
        if adj is None:
            sets: list[set[int]] = [set() for _ in range(self.vertex_count)]
            for u, v in self.edge_faces:
                sets[u].add(v)
                sets[v].add(u)
            adj = tuple(frozenset(s) for s in sets)
            self._cache["adjacency"] = adj
        return adj

    @property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        vf = self._cache.get("vertex_faces")
        if vf is None:
            lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
            for i, f in enumerate(self.faces):
                for v in f:
                    lists[v].append(i)
            vf = tuple(tuple(l) for l in lists)
            self._cache["vertex_faces"] = vf
        return vf

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def boundary_edges(self) -> frozenset[Edge]:
        be = self._cache.get("boundary_edges")
        if be is None:
            be = frozenset(e for e, fs in self.edge_faces.items() if len(fs) == 1)
            self._cache["boundary_edges"] = be
        return be

    @property
    def boundary_vertices(self) -> frozenset[int]:
        bv = self._cache.get("boundary_vertices")
        if bv is None:
            bv = frozenset(v for e in self.boundary_edges for v in e)
            self._cache["boundary_vertices"] = bv
        return bv

    @property
    def is_closed(self) -> bool:
        return not self.boundary_edges

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edge_faces) + len(self.faces)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_faces


def build(vertex_count: int, faces: Sequence[Iterable[int]],
          label: str | None = None) -> Triangulation:
    """Construct and validate a triangulation.

    Raises InvalidTriangulation naming the first violated invariant.
    """
    return Triangulation(vertex_count, faces, label=label)


def validate(t: Triangulation) -> None:
    """Re-run all structural checks on an existing value."""
    _validate(t)


def _validate(t: Triangulation) -> None:
    if not t.faces:
        raise InvalidTriangulation("empty", "triangulation has no faces")
    seen: set[Face] = set()
    for f in t.faces:
        a, b, c = f
        if not (0 <= a and c < t.vertex_count):
            raise InvalidTriangulation(
                "bad-vertex-id", f"face {f} references a vertex outside 0..{t.vertex_count - 1}")
        if a == b or b == c:
            raise InvalidTriangulation(
                "degenerate-face", f"face {f} repeats a vertex")
        if f in seen:
            raise InvalidTriangulation("duplicate-face", f"face {f} appears twice")
        seen.add(f)

    covered = [False] * t.vertex_count
    for f in t.faces:
        for v in f:
            covered[v] = True
    for v, ok in enumerate(covered):
        if not ok:
            raise InvalidTriangulation("isolated-vertex", f"vertex {v} lies in no face")

    for e, fs in t.edge_faces.items():
        if len(fs) > 2:
            raise InvalidTriangulation(
                "edge-multiplicity", f"edge {e} lies in {len(fs)} faces")
    # Two distinct faces sharing two edges would share all three vertices,
    # which the duplicate-face check already rejects.

    for v in range(t.vertex_count):
        _check_link(t, v)

    _check_face_connectivity(t)


def _link_edges(t: Triangulation, v: int) -> list[Edge]:
    out = []
    for i in t.vertex_faces[v]:
        a, b, c = t.faces[i]
        if v == a:
            out.append((b, c))
        elif v == b:
            out.append((a, c))
        else:
            out.append((a, b))
    return out


def _check_link(t: Triangulation, v: int) -> None:
    """The link of v must be one simple cycle or one simple path."""
    nbr_link: dict[int, list[int]] = {}
    for x, y in _link_edges(t, v):
        nbr_link.setdefault(x, []).append(y)
        nbr_link.setdefault(y, []).append(x)
    if set(nbr_link) != set(t.adjacency[v]):
        raise InvalidTriangulation(
            "broken-link", f"vertex {v} has neighbors missing from its link")
    ends = [x for x, ys in nbr_link.items() if len(ys) == 1]
    if any(len(ys) > 2 for ys in nbr_link.values()):
        # An edge {v,x} in >2 faces is caught earlier; this is unreachable
        # but kept for safety.
        raise InvalidTriangulation("broken-link", f"link of vertex {v} branches")
    if len(ends) not in (0, 2):
        raise InvalidTriangulation(
            "broken-link", f"link of vertex {v} has {len(ends)} endpoints")
    # connectivity of the link: walk from a deterministic start
    start = ends[0] if ends else next(iter(nbr_link))
    visited = {start}
    prev, cur = None, start
    while True:
        nxt = [y for y in nbr_link[cur] if y != prev]
        if not nxt:
            break
        # on a cycle the start has two continuations; either closes the walk
        step = nxt[0]
        if step in visited:
            break
        visited.add(step)
        prev, cur = cur, step
    if len(visited) != len(nbr_link):
        raise InvalidTriangulation(
            "broken-link", f"link of vertex {v} is not a single cycle or path")


def _check_face_connectivity(t: Triangulation) -> None:
    n = len(t.faces)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    ef = t.edge_faces
    while stack:
        i = stack.pop()
        for e in face_edges(t.faces[i]):
            for j in ef[e]:
                if not seen[j]:
                    seen[j] = True
                    count += 1
                    stack.append(j)
    if count != n:
        raise InvalidTriangulation(
            "disconnected", "face-adjacency graph is not connected")


def vertex_link(t: Triangulation, v: int) -> tuple[int, ...]:
    """Neighbors of v in rotation order.

    Returns a cyclic order for an interior vertex (starting at the
    smallest neighbor, turning toward the smaller of its two link
    neighbors) and a linear order for a boundary vertex (starting at the
    smaller path endpoint).  Deterministic for a given triangulation.
    """
    if not 0 <= v < t.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    nbr_link: dict[int, list[int]] = {}
    for x, y in _link_edges(t, v):
        nbr_link.setdefault(x, []).append(y)
        nbr_link.setdefault(y, []).append(x)
    ends = sorted(x for x, ys in nbr_link.items() if len(ys) == 1)
    if ends:
        start = ends[0]
        order = [start]
        prev, cur = None, start
        while len(nbr_link[cur]) > 1 or prev is None:
            nxt = [y for y in nbr_link[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        return tuple(order)
    start = min(nbr_link)
    second = min(nbr_link[start])
    order = [start, second]
    prev, cur = start, second
    while True:
        nxt = [y for y in nbr_link[cur] if y != prev][0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


@dataclass(frozen=True)
class SurfaceClass:
    """Topological type: Euler characteristic, orientability, boundary."""

    euler_characteristic: int
    orientable: bool
    boundary_cycles: tuple[tuple[int, ...], ...]
    name: str

    @property
    def is_closed(self) -> bool:
        return not self.boundary_cycles

    @property
    def topology(self) -> tuple[int, bool, int]:
        """(Euler characteristic, orientable, number of holes): the
        homeomorphism type, independent of vertex labels."""
        return (self.euler_characteristic, self.orientable,
                len(self.boundary_cycles))


def boundary_cycles(t: Triangulation) -> tuple[tuple[int, ...], ...]:
    """Boundary edges chained into disjoint simple cycles.

    Each cycle starts at its smallest vertex and proceeds toward the
    smaller of that vertex's two boundary neighbors.
    """
    nbrs: dict[int, list[int]] = {}
    for u, v in t.boundary_edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    cycles = []
    remaining = set(nbrs)
    while remaining:
        start = min(remaining)
        nxt = min(nbrs[start])
        cycle = [start]
        prev, cur = start, nxt
        while cur != start:
            cycle.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cycle))
        remaining -= set(cycle)
    return tuple(sorted(cycles))


def is_orientable(t: Triangulation) -> bool:
    """Decide orientability by propagating face orientations.

    Each face gets one of its two cyclic orders; neighbors must traverse
    their shared edge in opposite directions.  Orientable iff the
    propagation over the (connected) face-adjacency graph never conflicts.
    """
    n = len(t.faces)
    orient: list[int] = [-1] * n  # 0 = sorted cycle (a,b,c), 1 = reversed
    orient[0] = 0
    stack = [0]
    ef = t.edge_faces
    while stack:
        i = stack.pop()
        for u, v in _directed_edges(t.faces[i], orient[i]):
            e = (u, v) if u < v else (v, u)
            for j in ef[e]:
                if j == i:
                    continue
                # face j must traverse the shared edge as (v, u)
                want = _orientation_traversing(t.faces[j], v, u)
                if orient[j] == -1:
                    orient[j] = want
                    stack.append(j)
                elif orient[j] != want:
                    return False
    return True


def _directed_edges(face: Face, orientation: int) -> tuple[tuple[int, int], ...]:
    a, b, c = face
    if orientation == 0:
        return ((a, b), (b, c), (c, a))
    return ((a, c), (c, b), (b, a))


def _orientation_traversing(face: Face, u: int, v: int) -> int:
    """Orientation under which `face` contains the directed edge (u, v)."""
    if (u, v) in _directed_edges(face, 0):
        return 0
    return 1


def classify(t: Triangulation) -> SurfaceClass:
    """Compute the surface class of a valid triangulation."""
    sc = t._cache.get("surface_class")
    if sc is not None:
        return sc
    chi = t.euler_characteristic
    orientable = is_orientable(t)
    cycles = boundary_cycles(t)
    chi_closed = chi + len(cycles)
    if orientable:
        genus = (2 - chi_closed) // 2
        name = f"S{genus}"
    else:
        name = f"N{2 - chi_closed}"
    if len(cycles) == 1:
        name += "-D"
    elif len(cycles) > 1:
        name += f"-{len(cycles)}D"
    sc = SurfaceClass(chi, orientable, cycles, name)
    t._cache["surface_class"] = sc
    return sc


def relabeled(t: Triangulation, mapping: Sequence[int],
              label: str | None = None) -> Triangulation:
    """Apply a vertex bijection (old id -> mapping[old id])."""
    if sorted(mapping) != list(range(t.vertex_count)):
        raise ValueError("mapping is not a bijection on the vertex set")
    faces = [(mapping[a], mapping[b], mapping[c]) for a, b, c in t.faces]
    return Triangulation(t.vertex_count, faces, label=label, _validated=True)
