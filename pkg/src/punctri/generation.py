"""Exhaustive generation of closed triangulations by face gluing.

Independent of the splitting pipeline: grows complexes face by face from
a seed triangle, always closing the lexicographically least open edge
(an edge lying in exactly one face) with every admissible third vertex,
existing or new.  Admissibility keeps the complex a partial triangulation
throughout: edges stay in at most two faces, vertex links stay disjoint
simple paths until they close into one full cycle, and a counting bound
on faces plus an Euler-characteristic bound on completions prune branches
that cannot reach the target surface within the vertex budget.

Every closed complex is reached by this discipline from each of its
flags, so emitting a complex only when its own labeling realizes the
canonical key yields each isomorphism class exactly once.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .canon import _edge_index, _replay_min
from .homotopy import AGREEMENT, is_irreducible, require_agreement_applicable
from .surface import Triangulation, classify, is_orientable, validate

#: surface name -> (Euler characteristic, orientable)
TARGETS: dict[str, tuple[int, bool]] = {
    "S0": (2, True),
    "S1": (0, True),
    "N1": (1, False),
    "N2": (0, False),
}


def enumerate_closed(target: str | tuple[int, bool],
                     max_vertices: int) -> list[Triangulation]:
    """All closed triangulations of the target surface with at most
    ``max_vertices`` vertices, one canonical representative per
    isomorphism class, sorted by (vertex count, canonical key)."""
    if isinstance(target, str):
        try:
            chi, orientable = TARGETS[target]
        except KeyError:
            raise ValueError(f"unknown surface {target!r}; expected one of "
                             f"{sorted(TARGETS)}")
    else:
        chi, orientable = target
    if max_vertices < 4:
        raise ValueError("max_vertices must be at least 4")
    return _GluingSearch(chi, orientable, max_vertices).run()


def irreducible_filter(triangulations: Iterable[Triangulation],
                       mode: str = AGREEMENT) -> list[Triangulation]:
    """Keep the triangulations in which every edge is a rod."""
    out = []
    for t in triangulations:
        if mode == AGREEMENT:
            require_agreement_applicable(t)
        if is_irreducible(t, mode):
            out.append(t)
    return out


class _GluingSearch:
    """Depth-first gluing with explicit undo journal."""

    def __init__(self, chi: int, orientable: bool, max_vertices: int):
        self.chi = chi
        self.orientable = orientable
        self.maxv = max_vertices
        self.max_faces = 2 * (max_vertices - chi)
        n = max_vertices
        self.faces: list[tuple[int, int, int]] = []
        self.seq: list[int] = []  # identity serialization entries
        self.e2f: dict[int, list[int]] = {}
        self.open_edges: set[int] = set()
        self.open_degree = [0] * n
        self.deg = [0] * n
        self.nv = 0
        self.n_edges = 0
        # oriented triples per face, maintained only for orientable targets
        self.orient: list[tuple[int, int, int]] = []
        self.results: list[Triangulation] = []

    def _code(self, u: int, v: int) -> int:
        return u * self.maxv + v if u < v else v * self.maxv + u

    def run(self) -> list[Triangulation]:
        self.faces = [(0, 1, 2)]
        self.seq = [(0 << 16) | (1 << 8) | 2]
        self.nv = 3
        self.n_edges = 3
        for u, v in ((0, 1), (0, 2), (1, 2)):
            e = self._code(u, v)
            self.e2f[e] = [0]
            self.open_edges.add(e)
            self.open_degree[u] += 1
            self.open_degree[v] += 1
            self.deg[u] += 1
            self.deg[v] += 1
        self.orient = [(0, 1, 2)]
        self._recurse()
        self.results.sort(key=lambda t: (t.vertex_count, t._cache["canonical"][0]))
        return self.results

    # -- search ---------------------------------------------------------

    def _recurse(self) -> None:
        if not self.open_edges:
            self._emit()
            return
        e = min(self.open_edges)
        u, v = divmod(e, self.maxv)
        s = sum(self.faces[self.e2f[e][0]]) - u - v
        for t in range(self.nv):
            if t == u or t == v or t == s:
                continue
            journal = self._try_add(e, u, v, t)
            if journal is not None:
                self._recurse()
                self._undo(journal)
        if self.nv < self.maxv:
            journal = self._try_add(e, u, v, self.nv)
            if journal is not None:
                self._recurse()
                self._undo(journal)

    def _link_other_end(self, apex: int, start: int) -> tuple[int, int]:
        """Walk the link path of ``apex`` from endpoint ``start``; return
        (other endpoint, number of vertices on the path)."""
        prev = -1
        cur = start
        count = 1
        while True:
            nxt = -1
            for fi in self.e2f[self._code(apex, cur)]:
                f = self.faces[fi]
                w = f[0] + f[1] + f[2] - apex - cur
                if w != prev:
                    nxt = w
                    break
            if nxt == -1:
                return cur, count
            prev, cur = cur, nxt
            count += 1

    def _try_add(self, e: int, u: int, v: int, t: int):
        """Admissibility checks for face {u,v,t} closing open edge e;
        mutate and return an undo journal on success, else None."""
        if len(self.faces) + 1 > self.max_faces:
            return None
        new_vertex = t == self.nv
        if new_vertex:
            c_ut = c_vt = 0
        else:
            if self.open_degree[t] == 0:
                return None  # t's link is already a full cycle
            c_ut = len(self.e2f.get(self._code(u, t), ()))
            c_vt = len(self.e2f.get(self._code(v, t), ()))
            if c_ut > 1 or c_vt > 1:
                return None
            # link-cycle discipline: closing a path into a cycle is only
            # allowed when the path is the vertex's entire link
            if c_ut == 1:
                end, length = self._link_other_end(u, v)
                if end == t and length != self.deg[u]:
                    return None
            if c_vt == 1:
                end, length = self._link_other_end(v, u)
                if end == t and length != self.deg[v]:
                    return None
            if c_ut == 1 and c_vt == 1:
                end, length = self._link_other_end(t, u)
                if end == v and length != self.deg[t]:
                    return None

        # Euler bound: every later face addition keeps
        # 3*chi + open_edges + (vertex budget left) from growing, and the
        # quantity ends at 3*chi_final, so branches below 3*target are dead
        new_edges = (c_ut == 0) + (c_vt == 0)
        nv_after = self.nv + new_vertex
        chi_after = nv_after - (self.n_edges + new_edges) + len(self.faces) + 1
        open_after = len(self.open_edges) - 1 \
            + (1 if c_ut == 0 else -1) + (1 if c_vt == 0 else -1)
        if 3 * chi_after + open_after + (self.maxv - nv_after) < 3 * self.chi:
            return None

        if self.orientable:
            tri = self._forced_orientation(e, u, v, t, c_ut, c_vt)
            if tri is None:
                return None
        else:
            tri = (u, v, t)

        # mutate
        fi = len(self.faces)
        a, b, c = sorted((u, v, t))
        self.faces.append((a, b, c))
        self.seq.append((a << 16) | (b << 8) | c)
        self.orient.append(tri)
        if new_vertex:
            self.nv += 1
        self.e2f[e].append(fi)
        self.open_edges.discard(e)
        self.open_degree[u] -= 1
        self.open_degree[v] -= 1
        for x, c_old in ((u, c_ut), (v, c_vt)):
            code = self._code(x, t)
            if c_old == 0:
                self.e2f[code] = [fi]
                self.open_edges.add(code)
                self.open_degree[x] += 1
                self.open_degree[t] += 1
                self.deg[x] += 1
                self.deg[t] += 1
                self.n_edges += 1
            else:
                self.e2f[code].append(fi)
                self.open_edges.discard(code)
                self.open_degree[x] -= 1
                self.open_degree[t] -= 1
        return (e, u, v, t, c_ut, c_vt, new_vertex)

    def _forced_orientation(self, e, u, v, t, c_ut, c_vt):
        """Orientation of {u,v,t} forced across e; None on conflict."""
        anchor = self.orient[self.e2f[e][0]]
        tri = (v, u, t) if _traverses(anchor, u, v) else (u, v, t)
        if c_ut == 1:
            other = self.orient[self.e2f[self._code(u, t)][0]]
            if _traverses(tri, u, t) == _traverses(other, u, t):
                return None
        if c_vt == 1:
            other = self.orient[self.e2f[self._code(v, t)][0]]
            if _traverses(tri, v, t) == _traverses(other, v, t):
                return None
        return tri

    def _undo(self, journal) -> None:
        e, u, v, t, c_ut, c_vt, new_vertex = journal
        self.faces.pop()
        self.seq.pop()
        self.orient.pop()
        for x, c_old in ((u, c_ut), (v, c_vt)):
            code = self._code(x, t)
            if c_old == 0:
                del self.e2f[code]
                self.open_edges.discard(code)
                self.open_degree[x] -= 1
                self.open_degree[t] -= 1
                self.deg[x] -= 1
                self.deg[t] -= 1
                self.n_edges -= 1
            else:
                self.e2f[code].pop()
                self.open_edges.add(code)
                self.open_degree[x] += 1
                self.open_degree[t] += 1
        self.e2f[e].pop()
        self.open_edges.add(e)
        self.open_degree[u] += 1
        self.open_degree[v] += 1
        if new_vertex:
            self.nv -= 1

    # -- emission --------------------------------------------------------

    def _emit(self) -> None:
        nv = self.nv
        if nv - self.n_edges + len(self.faces) != self.chi:
            return
        faces = tuple(self.faces)
        e2f = _edge_index(nv, faces)
        _, labels = _replay_min(nv, faces, e2f, list(self.seq))
        if labels is not None:
            return  # some flag beats the identity labeling: not canonical
        t = Triangulation(nv, faces, _validated=True)
        if not self.orientable and is_orientable(t):
            return
        validate(t)
        sc = classify(t)
        assert sc.topology == (self.chi, self.orientable, 0), sc
        key = bytes([nv, len(faces)]) + b"".join(
            entry.to_bytes(3, "big") for entry in self.seq)
        t._cache["canonical"] = (key, tuple(range(nv)))
        self.results.append(t)


def _traverses(tri: Sequence[int], a: int, b: int) -> bool:
    x, y, z = tri
    return (x == a and y == b) or (y == a and z == b) or (z == a and x == b)
