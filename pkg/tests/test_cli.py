import json

import pytest

from punctri.cli import main
from punctri.formats import read_tri_file, serialize_tri_text, write_tri_file

from conftest import k7_torus, single_triangle, tetrahedron


@pytest.fixture
def fixtures_file(tmp_path):
    path = tmp_path / "in.tri"
    write_tri_file(path, [tetrahedron(), single_triangle(), k7_torus()])
    return path


def test_validate_ok(fixtures_file, capsys):
    assert main(["validate", str(fixtures_file)]) == 0
    out = capsys.readouterr().out
    assert out.count("OK") == 3


def test_validate_doubled_face(tmp_path, capsys):
    path = tmp_path / "bad.tri"
    path.write_text("dup 4 0,1,2;0,1,3;0,2,3;1,2,3;0,1,2\n", encoding="utf-8")
    assert main(["validate", str(path)]) == 1
    out = capsys.readouterr().out
    assert "duplicate-face" in out
    assert "(0, 1, 2)" in out


def test_classify_records(fixtures_file, capsys):
    assert main(["classify", str(fixtures_file)]) == 0
    out = capsys.readouterr().out
    assert "S0 chi=2" in out
    assert "S0-D chi=1" in out
    assert "S1 chi=0" in out


def test_canon_dedupe(tmp_path, capsys):
    path = tmp_path / "in.tri"
    t = tetrahedron()
    write_tri_file(path, [t, t, k7_torus()])
    out_path = tmp_path / "out.tri"
    assert main(["canon", str(path), "--dedupe", "-o", str(out_path)]) == 0
    assert len(read_tri_file(out_path)) == 2
    # canonical output is a serialization fixpoint
    text = out_path.read_text(encoding="utf-8")
    assert serialize_tri_text(read_tri_file(out_path)) == text


def test_expand_steps(tmp_path, capsys):
    path = tmp_path / "in.tri"
    write_tri_file(path, [tetrahedron()])
    out_path = tmp_path / "out.tri"
    assert main(["expand", str(path), "--steps", "2", "-o", str(out_path)]) == 0
    out = read_tri_file(out_path)
    assert all(t.vertex_count == 6 for t in out)
    assert len(out) == 2  # the two 6-vertex spheres


def test_expand_rejects_bordered(tmp_path):
    path = tmp_path / "in.tri"
    write_tri_file(path, [single_triangle()])
    assert main(["expand", str(path), "--steps", "1",
                 "-o", str(path.with_suffix(".out"))]) == 1


def test_edges_table(tmp_path, capsys):
    path = tmp_path / "k7.tri"
    write_tri_file(path, [k7_torus()])
    assert main(["edges", str(path), "--mode", "agreement"]) == 0
    out = capsys.readouterr().out
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(rows) == 21
    assert all("rod" in row for row in rows)


def test_edges_agreement_rejected_on_sphere(tmp_path, capsys):
    path = tmp_path / "tetra.tri"
    write_tri_file(path, [tetrahedron()])
    assert main(["edges", str(path), "--mode", "agreement"]) == 1
    assert main(["edges", str(path), "--mode", "literal"]) == 0


def test_enumerate_and_basis_n1(tmp_path, capsys):
    irr = tmp_path / "n1.tri"
    assert main(["enumerate", "--surface", "N1", "--max-vertices", "7",
                 "--irreducible-only", "-o", str(irr)]) == 0
    assert len(read_tri_file(irr)) == 2

    basis = tmp_path / "basis.tri"
    report = tmp_path / "report.json"
    assert main(["basis", "--surface", "N1", "--input", str(irr),
                 "-o", str(basis), "--report", str(report)]) == 0
    assert len(read_tri_file(basis)) == 6
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["basis_count"] == 6
    assert data["surface"] == "N1"


def test_basis_surface_mismatch(tmp_path, capsys):
    path = tmp_path / "tetra.tri"
    write_tri_file(path, [k7_torus()])
    assert main(["basis", "--surface", "N1", "--input", str(path),
                 "-o", str(tmp_path / "b.tri")]) == 1


def test_basis_level_cap_exit(tmp_path):
    irr = tmp_path / "n1.tri"
    main(["enumerate", "--surface", "N1", "--max-vertices", "7",
          "--irreducible-only", "-o", str(irr)])
    assert main(["basis", "--surface", "N1", "--input", str(irr),
                 "-o", str(tmp_path / "b.tri"), "--level-cap", "0"]) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["enumerate", "--surface", "S1"])  # missing --max-vertices
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
