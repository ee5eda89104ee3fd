"""Text file format for triangulation catalogs and the JSON run report.

A ``.tri`` file is UTF-8 text, one record per line::

    <label> <vertex_count> <face;face;...>

where each face is three comma-separated vertex ids, e.g.
``tetra 4 0,1,2;0,1,3;0,2,3;1,2,3``.  Blank lines and lines starting
with ``#`` are ignored.  Canonical serialization sorts each face
ascending and the face list lexicographically, which is exactly how
Triangulation stores its faces.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .pipeline import StageReport
from .surface import Triangulation, build


class TriFileError(ValueError):
    """Malformed .tri record; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_record(line: str, line_no: int = 0) -> Triangulation:
    parts = line.split()
    if len(parts) != 3:
        raise TriFileError(line_no, "expected '<label> <vertex_count> <faces>'")
    label, count_text, faces_text = parts
    try:
        vertex_count = int(count_text)
    except ValueError:
        raise TriFileError(line_no, f"bad vertex count {count_text!r}")
    faces = []
    for face_text in faces_text.split(";"):
        ids = face_text.split(",")
        if len(ids) != 3:
            raise TriFileError(line_no, f"face {face_text!r} is not a triple")
        try:
            faces.append(tuple(int(x) for x in ids))
        except ValueError:
            raise TriFileError(line_no, f"face {face_text!r} is not numeric")
    return build(vertex_count, faces, label=label)


def parse_tri_text(text: str) -> list[Triangulation]:
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_record(stripped, line_no))
    return out


def read_tri_file(path: str | Path) -> list[Triangulation]:
    return parse_tri_text(Path(path).read_text(encoding="utf-8"))


def serialize_record(t: Triangulation, fallback_label: str = "t") -> str:
    label = t.label if t.label else fallback_label
    faces = ";".join(",".join(str(v) for v in f) for f in t.faces)
    return f"{label} {t.vertex_count} {faces}"


def serialize_tri_text(triangulations: Sequence[Triangulation],
                       header: str | None = None) -> str:
    lines = []
    if header:
        lines.append(f"# {header}")
    width = max(4, len(str(len(triangulations))))
    for i, t in enumerate(triangulations, start=1):
        lines.append(serialize_record(t, fallback_label=f"t{i:0{width}d}"))
    return "\n".join(lines) + "\n"


def write_tri_file(path: str | Path, triangulations: Sequence[Triangulation],
                   header: str | None = None) -> None:
    Path(path).write_text(serialize_tri_text(triangulations, header),
                          encoding="utf-8")


def write_report(path: str | Path, report: StageReport) -> None:
    Path(path).write_text(json.dumps(report.to_json_dict(), indent=2) + "\n",
                          encoding="utf-8")
