"""Basis construction for once-punctured surfaces.

From the irreducible triangulations of a closed surface S (S not the
sphere), generate the split levels: level n holds the triangulations
obtainable by exactly n corner splittings, deduplicated up to
isomorphism.  Levels 1 and 2 are generated in full.  A pylonic member of
a deeper level can only arise by splitting a pylonic member (a
pylonic-free triangulation there has at least two cables, and splitting
such a triangulation never creates a pylonic vertex), so levels beyond 2
expand the pylonic members only; the loop runs until a level carries no
pylonic triangulation.

Five removal stages then produce irreducible triangulations of S - D:
(i) every vertex of every input, (ii) every pylonic vertex across all
levels, (iii) both faces flanking a unique cable in level 1, (iv) a face
whose 3-cycle carries the entire 2- or 3-edge cable subgraph in levels 1
and 2, (v) the unique cable itself in level 1.  The deduplicated union of
the surviving candidates is the complete basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .canon import canonical_key, dedupe
from .homotopy import AGREEMENT, cables, is_irreducible, pylonic_vertices
from .surface import Triangulation, classify, validate
from .transform import corners, remove_cable, remove_face, remove_vertex, split_corner

#: safety caps on the number of split levels, per closed surface
LEVEL_CAPS = {"S1": 945, "N1": 376}
DEFAULT_LEVEL_CAP = 1000

STAGE_NAMES = ("i", "ii", "iii", "iv", "v")

ProgressFn = Callable[[str], None]


@dataclass(frozen=True)
class MemberAnalysis:
    """Agreement-mode cable set and pylonic vertices of one member."""

    cables: frozenset[tuple[int, int]]
    pylonic: frozenset[int]


@dataclass
class SplitLevel:
    """Deduplicated triangulations reachable by exactly n splittings."""

    n: int
    members: tuple[Triangulation, ...]
    analyses: tuple[MemberAnalysis, ...] | None
    frontier: bool = False  # True when only pylonic parents were expanded

    @property
    def pylonic_histogram(self) -> dict[int, int] | None:
        if self.analyses is None:
            return None
        hist = {0: 0, 1: 0, 2: 0}
        for a in self.analyses:
            hist[len(a.pylonic)] += 1
        return hist

    @property
    def has_pylonic(self) -> bool:
        if self.analyses is None:
            return False
        return any(a.cables and a.pylonic for a in self.analyses)


@dataclass
class StageResult:
    prefilter: int  # removals attempted
    produced: int   # irreducible results, before dedup
    distinct: int   # after dedup (stage v: after merging with stage ii)


@dataclass
class StageReport:
    surface: str
    input_count: int
    levels: list[SplitLevel]
    stages: dict[str, StageResult]
    basis_count: int
    k_effective: int
    level_cap: int
    merged_duplicates: int

    def to_json_dict(self) -> dict:
        xi = []
        for lvl in self.levels:
            entry: dict = {"n": lvl.n, "count": len(lvl.members)}
            hist = lvl.pylonic_histogram
            if hist is not None:
                entry["pylonic"] = {"none": hist[0], "one": hist[1],
                                    "two": hist[2]}
            if lvl.frontier:
                entry["frontier"] = True
            xi.append(entry)
        return {
            "surface": self.surface,
            "input_count": self.input_count,
            "xi": xi,
            "stages": {name: {"prefilter": s.prefilter,
                              "produced": s.produced,
                              "distinct": s.distinct}
                       for name, s in self.stages.items()},
            "basis_count": self.basis_count,
            "k_effective": self.k_effective,
            "level_cap": self.level_cap,
            "merged_duplicates": self.merged_duplicates,
        }


class IncompleteExpansion(RuntimeError):
    """Level cap hit while pylonic triangulations remain."""

    def __init__(self, level_cap: int):
        super().__init__(
            f"level cap {level_cap} reached with pylonic triangulations "
            f"still present")
        self.level_cap = level_cap


def _analyze(member: Triangulation) -> MemberAnalysis:
    cs = cables(member, AGREEMENT)
    pyl = pylonic_vertices(member) if cs else frozenset()
    return MemberAnalysis(cs, pyl)


def make_level(n: int, members: Sequence[Triangulation],
               analyze: bool = True, frontier: bool = False) -> SplitLevel:
    analyses = tuple(_analyze(m) for m in members) if analyze else None
    return SplitLevel(n, tuple(members), analyses, frontier)


def all_corner_splits(t: Triangulation) -> Iterable[Triangulation]:
    for c in corners(t):
        yield split_corner(t, c, validate=False)


def expand(level: SplitLevel, frontier: bool = False,
           analyze: bool = True) -> SplitLevel:
    """Split every corner of every member (of every pylonic member when
    ``frontier``), deduplicate, and analyze the results."""
    if frontier:
        if level.analyses is None:
            raise ValueError("frontier expansion needs an analyzed level")
        parents = [m for m, a in zip(level.members, level.analyses)
                   if a.cables and a.pylonic]
    else:
        parents = list(level.members)
    members = dedupe(t for parent in parents
                     for t in all_corner_splits(parent))
    for m in members:
        validate(m)
    if analyze and members:
        sphere = classify(members[0]).topology == (2, True, 0)
        if sphere:
            analyze = False
    return make_level(level.n + 1, members, analyze=analyze,
                      frontier=frontier)


@dataclass
class _StageData:
    prefilter: int = 0
    kept: list[Triangulation] = field(default_factory=list)

    @property
    def produced(self) -> int:
        return len(self.kept)


def _filter_irreducible(data: _StageData, candidate: Triangulation) -> None:
    data.prefilter += 1
    if is_irreducible(candidate, AGREEMENT):
        data.kept.append(candidate)


def stage_i(level0: SplitLevel) -> _StageData:
    """Remove every vertex of every irreducible input."""
    data = _StageData()
    for m in level0.members:
        for v in range(m.vertex_count):
            _filter_irreducible(data, remove_vertex(m, v))
    return data


def stage_ii(levels: Sequence[SplitLevel]) -> _StageData:
    """Remove every pylonic vertex across all split levels."""
    data = _StageData()
    for level in levels:
        for m, a in zip(level.members, level.analyses):
            if a.cables and a.pylonic:
                for v in sorted(a.pylonic):
                    _filter_irreducible(data, remove_vertex(m, v))
    return data


def stage_iii(level1: SplitLevel) -> _StageData:
    """Remove either face flanking the cable when it is unique."""
    data = _StageData()
    for m, a in zip(level1.members, level1.analyses):
        if len(a.cables) == 1:
            (e,) = a.cables
            for fi in m.edge_faces[e]:
                _filter_irreducible(data, remove_face(m, m.faces[fi]))
    return data


def stage_iv(levels: Sequence[SplitLevel]) -> _StageData:
    """Remove a face whose 3-cycle holds the whole 2- or 3-cable subgraph."""
    data = _StageData()
    for level in levels:
        for m, a in zip(level.members, level.analyses):
            if len(a.cables) not in (2, 3):
                continue
            for f in m.faces:
                x, y, z = f
                fedges = {(x, y), (x, z), (y, z)}
                if a.cables <= fedges:
                    _filter_irreducible(data, remove_face(m, f))
    return data


def stage_v(level1: SplitLevel) -> _StageData:
    """Remove the cable itself when it is unique."""
    data = _StageData()
    for m, a in zip(level1.members, level1.analyses):
        if len(a.cables) == 1:
            (e,) = a.cables
            _filter_irreducible(data, remove_cable(m, e))
    return data


def punctured_basis(inputs: Sequence[Triangulation],
                    level_cap: int | None = None,
                    progress: ProgressFn | None = None,
                    ) -> tuple[list[Triangulation], StageReport]:
    """Complete basis of irreducible triangulations of S - D.

    ``inputs`` must be the closed irreducible triangulations of one
    surface S different from the sphere.  Raises IncompleteExpansion when
    the level cap is hit while pylonic triangulations remain.
    """
    if not inputs:
        raise ValueError("no input triangulations")
    note = progress or (lambda msg: None)
    surfaces = {classify(t).name for t in inputs}
    if len(surfaces) != 1:
        raise ValueError(f"inputs classify to mixed surfaces {sorted(surfaces)}")
    surface = surfaces.pop()
    if not classify(inputs[0]).is_closed:
        raise ValueError("inputs must be closed")
    for t in inputs:
        if not is_irreducible(t, AGREEMENT):
            raise ValueError("an input triangulation is not irreducible")
    if level_cap is None:
        level_cap = LEVEL_CAPS.get(surface, DEFAULT_LEVEL_CAP)

    levels = [make_level(0, dedupe(inputs))]
    note(f"inputs: {len(levels[0].members)} irreducible triangulations of "
         f"{surface}")
    for n in (1, 2):
        levels.append(expand(levels[-1]))
        note(f"level {n}: {len(levels[-1].members)} members, pylonic "
             f"histogram {levels[-1].pylonic_histogram}")
    while levels[-1].has_pylonic:
        if len(levels) - 1 >= level_cap:
            raise IncompleteExpansion(level_cap)
        levels.append(expand(levels[-1], frontier=True))
        note(f"level {levels[-1].n} (pylonic frontier): "
             f"{len(levels[-1].members)} members")
    if any(lvl.has_pylonic and lvl.n > level_cap for lvl in levels):
        raise IncompleteExpansion(level_cap)

    datas = {
        "i": stage_i(levels[0]),
        "ii": stage_ii(levels[1:]),
        "iii": stage_iii(levels[1]),
        "iv": stage_iv(levels[1:3]),
        "v": stage_v(levels[1]),
    }
    for name in STAGE_NAMES:
        note(f"stage ({name}): {datas[name].produced} irreducible of "
             f"{datas[name].prefilter} removals")

    distinct = {name: len(dedupe(datas[name].kept)) for name in STAGE_NAMES}
    # stage (v) is reported after merging against stage (ii)
    ii_keys = {canonical_key(t) for t in datas["ii"].kept}
    distinct["v"] = len({canonical_key(t) for t in datas["v"].kept} - ii_keys)

    basis = dedupe(t for name in STAGE_NAMES for t in datas[name].kept)
    for t in basis:
        sc = classify(t)
        assert len(sc.boundary_cycles) == 1 and not sc.is_closed
    k_effective = max((lvl.n for lvl in levels if lvl.has_pylonic), default=0)
    stages = {name: StageResult(datas[name].prefilter, datas[name].produced,
                                distinct[name])
              for name in STAGE_NAMES}
    report = StageReport(
        surface=surface,
        input_count=len(levels[0].members),
        levels=levels,
        stages=stages,
        basis_count=len(basis),
        k_effective=k_effective,
        level_cap=level_cap,
        merged_duplicates=sum(distinct.values()) - len(basis),
    )
    note(f"basis: {len(basis)} irreducible triangulations of {surface}-D "
         f"(k_effective={k_effective})")
    return basis, report
