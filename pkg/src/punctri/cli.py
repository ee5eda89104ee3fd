"""Command-line interface.

Exit codes: 0 success, 1 validation or mathematical failure (including an
exhausted level cap), 2 usage errors (argparse default).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import canon, formats, generation, homotopy, pipeline
from .surface import InvalidTriangulation, classify


def _parse_lines(path: str):
    """Yield (line_no, label, parse result or error) per record line."""
    text = Path(path).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        label = stripped.split()[0] if stripped.split() else f"line{line_no}"
        try:
            yield line_no, label, formats.parse_record(stripped, line_no), None
        except (formats.TriFileError, InvalidTriangulation) as exc:
            yield line_no, label, None, exc


def cmd_validate(args) -> int:
    failures = 0
    for _, label, t, err in _parse_lines(args.input):
        if err is None:
            print(f"{label}: OK")
        else:
            failures += 1
            code = getattr(err, "code", "parse-error")
            print(f"{label}: INVALID ({code}) {err}")
    return 1 if failures else 0


def cmd_classify(args) -> int:
    for _, label, t, err in _parse_lines(args.input):
        if err is not None:
            print(f"{label}: INVALID {err}")
            return 1
        sc = classify(t)
        boundary = ("closed" if sc.is_closed else
                    "boundary " + " ".join(
                        "-".join(map(str, c)) for c in sc.boundary_cycles))
        print(f"{label}: {sc.name} chi={sc.euler_characteristic} "
              f"{'orientable' if sc.orientable else 'nonorientable'} {boundary}")
    return 0


def cmd_canon(args) -> int:
    tris = formats.read_tri_file(args.input)
    if args.dedupe:
        tris = canon.dedupe(tris)
    else:
        tris = [canon.canonical_form(t, label=t.label) for t in tris]
    text = formats.serialize_tri_text(tris)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"{len(tris)} records -> {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_expand(args) -> int:
    tris = formats.read_tri_file(args.input)
    for t in tris:
        if not classify(t).is_closed:
            print(f"record {t.label}: not closed", file=sys.stderr)
            return 1
    level = pipeline.make_level(0, canon.dedupe(tris), analyze=False)
    for step in range(args.steps):
        level = pipeline.expand(level, analyze=False)
        print(f"step {step + 1}: {len(level.members)} non-isomorphic "
              f"triangulations", file=sys.stderr)
    formats.write_tri_file(args.output, level.members,
                           header=f"{args.steps} splitting steps from "
                                  f"{args.input}")
    print(f"{len(level.members)} records -> {args.output}")
    return 0


def cmd_edges(args) -> int:
    tris = formats.read_tri_file(args.input)
    status = 0
    for t in tris:
        print(f"# {t.label} ({classify(t).name})")
        try:
            table = homotopy.classify_edges(t, args.mode)
        except homotopy.AgreementModeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = 1
            continue
        for ec in table:
            reasons = ",".join(ec.reasons) if ec.reasons else "-"
            print(f"{ec.edge[0]},{ec.edge[1]} {ec.verdict} {reasons}")
    return status


def cmd_enumerate(args) -> int:
    tris = generation.enumerate_closed(args.surface, args.max_vertices)
    if args.irreducible_only:
        tris = generation.irreducible_filter(tris)
    formats.write_tri_file(
        args.output, tris,
        header=f"closed {args.surface} triangulations, <= "
               f"{args.max_vertices} vertices"
               + (", irreducible" if args.irreducible_only else ""))
    print(f"{len(tris)} records -> {args.output}")
    return 0


def cmd_basis(args) -> int:
    inputs = formats.read_tri_file(args.input)
    mismatched = [t.label for t in inputs
                  if classify(t).name != args.surface]
    if mismatched:
        print(f"error: records {mismatched} do not classify as "
              f"{args.surface}", file=sys.stderr)
        return 1
    try:
        basis, report = pipeline.punctured_basis(
            inputs, level_cap=args.level_cap,
            progress=lambda msg: print(msg, file=sys.stderr))
    except pipeline.IncompleteExpansion as exc:
        print(f"error: incomplete: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    formats.write_tri_file(args.output, basis,
                           header=f"irreducible triangulations of "
                                  f"{args.surface}-D")
    if args.report:
        formats.write_report(args.report, report)
    print(f"{len(basis)} records -> {args.output}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="punctri",
        description="Irreducible triangulations of once-punctured surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", help="check every record's invariants")
    q.add_argument("input")
    q.set_defaults(fn=cmd_validate)

    q = sub.add_parser("classify", help="surface class per record")
    q.add_argument("input")
    q.set_defaults(fn=cmd_classify)

    q = sub.add_parser("canon", help="canonical serializations")
    q.add_argument("input")
    q.add_argument("-o", "--output")
    q.add_argument("--dedupe", action="store_true",
                   help="drop isomorphic duplicates")
    q.set_defaults(fn=cmd_canon)

    q = sub.add_parser("expand", help="repeated corner splitting with dedup")
    q.add_argument("input")
    q.add_argument("--steps", type=int, default=1)
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(fn=cmd_expand)

    q = sub.add_parser("edges", help="cable/rod table with reasons")
    q.add_argument("input")
    q.add_argument("--mode", choices=[homotopy.LITERAL, homotopy.AGREEMENT],
                   default=homotopy.AGREEMENT)
    q.set_defaults(fn=cmd_edges)

    q = sub.add_parser("enumerate",
                       help="brute-force closed triangulation census")
    q.add_argument("--surface", required=True,
                   choices=sorted(generation.TARGETS))
    q.add_argument("--max-vertices", type=int, required=True)
    q.add_argument("--irreducible-only", action="store_true")
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(fn=cmd_enumerate)

    q = sub.add_parser("basis",
                       help="basis of irreducible triangulations of S-D")
    q.add_argument("--surface", required=True, choices=["S1", "N1", "N2"])
    q.add_argument("--input", required=True)
    q.add_argument("-o", "--output", required=True)
    q.add_argument("--report")
    q.add_argument("--level-cap", type=int, default=None)
    q.set_defaults(fn=cmd_basis)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
