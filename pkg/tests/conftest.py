from __future__ import annotations

from itertools import permutations

import pytest

from punctri.surface import Triangulation, build


def tetrahedron() -> Triangulation:
    return build(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
                 label="tetra")


def single_triangle() -> Triangulation:
    return build(3, [(0, 1, 2)], label="triangle")


def bipyramid() -> Triangulation:
    """Poles 3 and 4 over the equator 0, 1, 2: the 5-vertex sphere."""
    return build(5, [(0, 1, 3), (1, 2, 3), (0, 2, 3),
                     (0, 1, 4), (1, 2, 4), (0, 2, 4)], label="bipyr")


def fan_disk() -> Triangulation:
    """Boundary 0, 1, 2 around the center 3."""
    return build(4, [(0, 1, 3), (1, 2, 3), (2, 0, 3)], label="fan")


def k7_torus() -> Triangulation:
    faces = [(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    faces += [(i % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return build(7, faces, label="K7")


def moebius5() -> Triangulation:
    """K5 Moebius band: faces {i, i+1, i+2} mod 5."""
    return build(5, [(i % 5, (i + 1) % 5, (i + 2) % 5) for i in range(5)],
                 label="moebius5")


@pytest.fixture
def tetra():
    return tetrahedron()


@pytest.fixture
def triangle():
    return single_triangle()


@pytest.fixture
def bipyr():
    return bipyramid()


@pytest.fixture
def fan():
    return fan_disk()


@pytest.fixture
def k7():
    return k7_torus()


@pytest.fixture
def moebius():
    return moebius5()


def brute_force_isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    """Factorial-time bijection search, independent of canonical labeling."""
    if t1.vertex_count != t2.vertex_count or len(t1.faces) != len(t2.faces):
        return False
    target = t2.face_set
    for perm in permutations(range(t1.vertex_count)):
        for a, b, c in t1.faces:
            img = perm[a], perm[b], perm[c]
            lo, mid, hi = sorted(img)
            if (lo, mid, hi) not in target:
                break
        else:
            return True
    return False
