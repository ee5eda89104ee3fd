"""Canonical labeling, isomorphism testing, and deduplication.

Identity of a triangulation class is a canonical key: the lexicographically
least face-discovery serialization over all starting flags, where a flag is
an ordered choice of one face and an assignment of labels 0,1,2 to its
vertices.  From a flag, a deterministic traversal places the remaining
faces by always completing the label-lexicographically least open edge,
labeling new vertices in discovery order.  The serialization records each
placed face as a sorted label triple, in placement order.

Any isomorphism maps flags to flags and commutes with the traversal, so
the minimum serialization is a complete invariant; equal keys hold exactly
for isomorphic triangulations.  This is the same identity the bipartite
vertex-face incidence graph carries, computed directly on the face list.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappush, heappop
from typing import Iterable

from .surface import Triangulation


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite vertex-face incidence structure of a triangulation."""

    vertex_nodes: int
    face_nodes: int
    edges: tuple[tuple[int, int], ...]  # (vertex id, face index)


def incidence_graph(t: Triangulation) -> IncidenceGraph:
    edges = tuple((v, i) for i, f in enumerate(t.faces) for v in f)
    return IncidenceGraph(t.vertex_count, len(t.faces), edges)


def _edge_index(vertex_count: int, faces) -> dict[int, tuple[int, ...]]:
    """Map ecode = u*V + v (u < v) to incident face indices."""
    ef: dict[int, list[int]] = {}
    n = vertex_count
    for i, (a, b, c) in enumerate(faces):
        for e in (a * n + b, a * n + c, b * n + c):
            if e in ef:
                ef[e].append(i)
            else:
                ef[e] = [i]
    return {e: tuple(fs) for e, fs in ef.items()}


def _replay_min(vertex_count, faces, edge2faces, best):
    """Minimize the discovery serialization over all flags.

    `best` may carry an initial serialization to beat (or None).  Returns
    (best_seq, best_labels) where best_labels is None when the initial
    serialization was never strictly beaten.
    """
    n = vertex_count
    nf = len(faces)
    face_ecodes = [(a * n + b, a * n + c, b * n + c) for a, b, c in faces]
    best_labels = None

    for start in range(nf):
        fa, fb, fc = faces[start]
        for va, vb, vc in ((fa, fb, fc), (fa, fc, fb), (fb, fa, fc),
                           (fb, fc, fa), (fc, fa, fb), (fc, fb, fa)):
            labels = [-1] * n
            labels[va] = 0
            labels[vb] = 1
            labels[vc] = 2
            nlab = 3
            placed = [False] * nf
            placed[start] = True
            count = bytearray(n * n)
            seq = [0 * 65536 + 1 * 256 + 2]
            # 0 = tied with best so far, 1 = strictly below best
            state = 0 if best is not None else 1
            heap: list[int] = []
            for e in face_ecodes[start]:
                count[e] = 1
                if len(edge2faces[e]) == 2:
                    u, v = divmod(e, n)
                    lu, lv = labels[u], labels[v]
                    if lu > lv:
                        lu, lv = lv, lu
                    heappush(heap, ((lu << 8 | lv) << 16) | e)
            aborted = False
            while heap:
                e = heappop(heap) & 0xFFFF
                if count[e] != 1:
                    continue
                fs = edge2faces[e]
                fi = fs[1] if placed[fs[0]] else fs[0]
                u, v = divmod(e, n)
                a, b, c = faces[fi]
                w = a + b + c - u - v
                if labels[w] == -1:
                    labels[w] = nlab
                    nlab += 1
                lu, lv, lw = sorted((labels[u], labels[v], labels[w]))
                entry = (lu << 16) | (lv << 8) | lw
                k = len(seq)
                if state == 0:
                    ref = best[k]
                    if entry > ref:
                        aborted = True
                        break
                    if entry < ref:
                        state = 1
                seq.append(entry)
                placed[fi] = True
                for e2 in face_ecodes[fi]:
                    c2 = count[e2]
                    count[e2] = c2 + 1
                    if c2 == 0 and len(edge2faces[e2]) == 2:
                        u2, v2 = divmod(e2, n)
                        lu2, lv2 = labels[u2], labels[v2]
                        if lu2 > lv2:
                            lu2, lv2 = lv2, lu2
                        heappush(heap, ((lu2 << 8 | lv2) << 16) | e2)
            if aborted:
                continue
            if state == 1:
                best = seq
                best_labels = tuple(labels)
    return best, best_labels


def _canonical_data(t: Triangulation) -> tuple[bytes, tuple[int, ...]]:
    data = t._cache.get("canonical")
    if data is None:
        if t.vertex_count > 255:
            raise ValueError("canonical keys support at most 255 vertices")
        e2f = _edge_index(t.vertex_count, t.faces)
        seq, labels = _replay_min(t.vertex_count, t.faces, e2f, None)
        key = bytes([t.vertex_count, len(t.faces)]) + b"".join(
            entry.to_bytes(3, "big") for entry in seq)
        data = (key, labels)
        t._cache["canonical"] = data
    return data


def canonical_key(t: Triangulation) -> bytes:
    """Total-order identity of the isomorphism class of t."""
    return _canonical_data(t)[0]


def canonical_labeling(t: Triangulation) -> tuple[int, ...]:
    """A vertex relabeling (old id -> new id) realizing the canonical key."""
    return _canonical_data(t)[1]


def canonical_form(t: Triangulation, label: str | None = None) -> Triangulation:
    """The canonically relabeled representative of t's class."""
    labels = canonical_labeling(t)
    faces = [(labels[a], labels[b], labels[c]) for a, b, c in t.faces]
    out = Triangulation(t.vertex_count, faces, label=label, _validated=True)
    out._cache["canonical"] = (canonical_key(t), tuple(range(t.vertex_count)))
    return out


def are_isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    return canonical_key(t1) == canonical_key(t2)


def dedupe(triangulations: Iterable[Triangulation]) -> list[Triangulation]:
    """One canonical representative per isomorphism class.

    Output is sorted by (vertex count, canonical key), hence independent
    of input order.  A representative keeps the smallest original label
    among its class members, if any were labeled.
    """
    by_key: dict[bytes, tuple[Triangulation, str | None]] = {}
    for t in triangulations:
        key = canonical_key(t)
        kept = by_key.get(key)
        if kept is None:
            by_key[key] = (t, t.label)
        elif t.label is not None and (kept[1] is None or t.label < kept[1]):
            by_key[key] = (kept[0], t.label)
    # keys start with the vertex-count byte, so plain byte order is
    # already (vertex_count, key) order
    out = []
    for key in sorted(by_key):
        t, label = by_key[key]
        out.append(canonical_form(t, label=label))
    return out
