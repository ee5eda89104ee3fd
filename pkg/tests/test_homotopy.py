import pytest

from punctri.homotopy import (AGREEMENT, LITERAL, AgreementModeError,
                              cable_subgraph, cables, classify_edges,
                              graph_three_cycles, is_irreducible,
                              is_null_homotopic, is_pylonic,
                              no_common_vertex_certificate, pylonic_vertices,
                              three_cycles)
from punctri.surface import classify, face_edges
from punctri.transform import split_corner


def test_three_cycles_tetrahedron(tetra):
    verdicts = three_cycles(tetra)
    assert len(verdicts) == 4
    assert all(v.facial for v in verdicts)
    assert all(v.null_homotopic for v in verdicts)


def test_three_cycles_k7(k7):
    verdicts = three_cycles(k7)
    assert len(verdicts) == 35  # complete graph on 7 vertices
    assert sum(v.facial for v in verdicts) == 14
    nonfacial = [v for v in verdicts if not v.facial]
    assert len(nonfacial) == 21
    assert all(not v.null_homotopic for v in nonfacial)


def test_three_cycles_bipyramid(bipyr):
    verdicts = three_cycles(bipyr)
    assert len(verdicts) == 7
    nonfacial = [v for v in verdicts if not v.facial]
    assert [v.cycle for v in nonfacial] == [(0, 1, 2)]
    # everything on the sphere bounds a disk
    assert all(v.null_homotopic for v in verdicts)


def test_cut_sides_of_bipyramid_equator(bipyr):
    # both sides of the equator are one-vertex disks: chi = 4 - 6 + 3 = 1
    assert is_null_homotopic(bipyr, (0, 1, 2))


def test_cut_count_chi_identity(bipyr, k7):
    # for a separating 3-cycle, side characteristics (with the cycle
    # counted in both) sum to chi of the whole surface
    t = bipyr
    cyc = (0, 1, 2)
    cset = set(face_edges(cyc))
    sides = {}
    # split faces by which pole they touch
    for f in t.faces:
        sides.setdefault(3 in f, []).append(f)
    total = 0
    for fs in sides.values():
        verts = set(cyc)
        edges = set(cset)
        for f in fs:
            verts.update(f)
            edges.update(face_edges(f))
        total += len(verts) - len(edges) + len(fs)
    assert total == t.euler_characteristic


def test_not_a_cycle_raises(tetra):
    with pytest.raises(ValueError):
        is_null_homotopic(tetra, (0, 1, 4))


def test_classify_edges_k7_agreement(k7):
    table = classify_edges(k7, AGREEMENT)
    assert len(table) == 21
    assert all(ec.verdict == "rod" for ec in table)
    assert all("essential-3-cycle" in ec.reasons for ec in table)
    assert is_irreducible(k7, AGREEMENT)


def test_classify_edges_triangle_literal(triangle):
    table = classify_edges(triangle, LITERAL)
    assert all(ec.verdict == "rod" for ec in table)
    assert all(ec.reasons == ("boundary-3-cycle",) for ec in table)
    assert is_irreducible(triangle, LITERAL)


def test_classify_edges_moebius_agreement(moebius):
    table = {ec.edge: ec for ec in classify_edges(moebius, AGREEMENT)}
    for i in range(5):
        chord = tuple(sorted((i, (i + 1) % 5)))
        assert "chord" in table[chord].reasons
        boundary_edge = tuple(sorted((i, (i + 2) % 5)))
        assert "essential-3-cycle" in table[boundary_edge].reasons
    assert all(ec.verdict == "rod" for ec in table.values())
    assert is_irreducible(moebius, AGREEMENT)


def test_agreement_mode_rejected_on_sphere_and_disk(tetra, triangle, bipyr):
    for t in (tetra, triangle, bipyr):
        with pytest.raises(AgreementModeError):
            classify_edges(t, AGREEMENT)
    with pytest.raises(AgreementModeError):
        is_irreducible(bipyr, AGREEMENT)


def test_literal_rod_iff_three_plus_triangles_on_closed(k7, bipyr):
    # on a closed surface an edge is a literal rod exactly when it lies
    # in at least 3 triangles of the graph (2 facial + 1 nonfacial)
    for t in (k7, bipyr):
        triangles = graph_three_cycles(t)
        per_edge = {}
        for cyc in triangles:
            for e in face_edges(cyc):
                per_edge[e] = per_edge.get(e, 0) + 1
        table = classify_edges(t, LITERAL)
        for ec in table:
            assert (ec.verdict == "rod") == (per_edge[ec.edge] >= 3)


def test_agreement_rod_implies_literal_rod_on_closed(k7):
    lit = {ec.edge for ec in classify_edges(k7, LITERAL)
           if ec.verdict == "rod"}
    agr = {ec.edge for ec in classify_edges(k7, AGREEMENT)
           if ec.verdict == "rod"}
    assert agr <= lit


def test_pylonic_vertices_examples(k7):
    assert pylonic_vertices(k7) == frozenset()
    assert not is_pylonic(k7)
    # a split of an irreducible triangulation has the fresh edge as a
    # cable; when that cable is unique both its endpoints are pylonic
    s = split_corner(k7, (1, 0, 3))
    cs = cables(s, AGREEMENT)
    assert (0, 7) in cs
    pv = pylonic_vertices(s)
    if len(cs) == 1:
        assert pv == frozenset((0, 7))
    else:
        assert len(pv) <= 1


def test_pylonic_requires_closed(moebius):
    with pytest.raises(ValueError):
        pylonic_vertices(moebius)


def test_cable_subgraph(k7):
    sub = cable_subgraph(k7, AGREEMENT)
    assert sub.edges == frozenset()
    assert sub.vertices == frozenset()


def test_no_common_vertex_certificate():
    assert no_common_vertex_certificate([(0, 1), (2, 3)]) == ((0, 1), (2, 3))
    cert = no_common_vertex_certificate([(0, 1), (1, 2), (0, 2)])
    assert len(cert) == 3
    assert set().union(*(set(e) for e in cert)) == {0, 1, 2}
    cert = no_common_vertex_certificate([(0, 1), (1, 2), (0, 2), (0, 5)])
    assert len(cert) in (2, 3)
    with pytest.raises(ValueError):
        no_common_vertex_certificate([(0, 1), (0, 2), (0, 3)])


def test_pylonic_hint_edges_bias_only(k7):
    s = split_corner(k7, (1, 0, 3))
    plain = pylonic_vertices(s)
    hinted = pylonic_vertices(s, hint_edges=[(0, 7), (9, 9)])
    # a hint that is not an edge is ignored; result is unchanged
    assert plain == pylonic_vertices(s, hint_edges=[(0, 7)])
    assert plain == hinted


def test_boundary_three_cycle_is_essential_on_punctured_torus(k7):
    from punctri.transform import remove_face
    t = remove_face(k7, (0, 1, 3))
    sc = classify(t)
    assert sc.name == "S1-D"
    assert not is_null_homotopic(t, (0, 1, 3))
    table = {ec.edge: ec for ec in classify_edges(t, AGREEMENT)}
    for e in ((0, 1), (0, 3), (1, 3)):
        assert table[e].verdict == "rod"
