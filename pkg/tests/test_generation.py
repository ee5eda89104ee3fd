from collections import Counter

import pytest

from punctri.canon import are_isomorphic, canonical_key, dedupe
from punctri.generation import enumerate_closed, irreducible_filter
from punctri.homotopy import AGREEMENT, AgreementModeError
from punctri.surface import classify, validate
from punctri.transform import corners, split_corner

from conftest import brute_force_isomorphic


def test_sphere_census_to_five_vertices(tetra, bipyr):
    out = enumerate_closed("S0", 5)
    assert [t.vertex_count for t in out] == [4, 5]
    assert are_isomorphic(out[0], tetra)
    assert are_isomorphic(out[1], bipyr)


def test_sphere_census_matches_published_counts():
    # 1, 1, 2, 5, 14 triangulated spheres on 4..8 vertices
    out = enumerate_closed("S0", 8)
    assert Counter(t.vertex_count for t in out) == {4: 1, 5: 1, 6: 2,
                                                    7: 5, 8: 14}


def test_projective_plane_census(moebius):
    out = enumerate_closed("N1", 8)
    # 1, 3, 16 on 6..8 vertices
    assert Counter(t.vertex_count for t in out) == {6: 1, 7: 3, 8: 16}
    for t in out:
        sc = classify(t)
        assert (sc.euler_characteristic, sc.orientable, sc.is_closed) == \
            (1, False, True)
        validate(t)


def test_torus_census_to_eight(k7):
    out = enumerate_closed("S1", 8)
    assert Counter(t.vertex_count for t in out) == {7: 1, 8: 7}
    seven = [t for t in out if t.vertex_count == 7]
    assert are_isomorphic(seven[0], k7)


def test_klein_bottle_census_smoke():
    out = enumerate_closed("N2", 8)
    assert out, "the Klein bottle triangulates on 8 vertices"
    assert all(t.vertex_count == 8 for t in out)
    for t in out:
        sc = classify(t)
        assert (sc.euler_characteristic, sc.orientable) == (0, False)
        assert sc.name == "N2"


def test_census_has_no_isomorphic_duplicates():
    out = enumerate_closed("N1", 7)
    assert len({canonical_key(t) for t in out}) == len(out)
    for i, a in enumerate(out):
        for b in out[i + 1:]:
            assert not brute_force_isomorphic(a, b)


def test_census_is_deterministic():
    a = enumerate_closed("N1", 7)
    b = enumerate_closed("N1", 7)
    assert [t.faces for t in a] == [t.faces for t in b]
    assert dedupe(a) == dedupe(b)
    assert [t.faces for t in dedupe(a)] == [t.faces for t in a]


def test_irreducible_filter_projective_plane():
    out = irreducible_filter(enumerate_closed("N1", 7))
    assert len(out) == 2
    assert sorted(t.vertex_count for t in out) == [6, 7]


def test_irreducible_filter_rejects_spheres(tetra):
    with pytest.raises(AgreementModeError):
        irreducible_filter([tetra])


def test_splits_of_k7_are_reducible(k7):
    for corner in list(corners(k7))[:12]:
        s = split_corner(k7, corner)
        assert irreducible_filter([s], AGREEMENT) == []


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_closed("S9", 8)
    with pytest.raises(ValueError):
        enumerate_closed("S0", 3)
