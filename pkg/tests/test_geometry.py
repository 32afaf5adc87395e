import itertools
import random
from fractions import Fraction

import pytest

from emptytet.geometry import (
    DegenerateTetrahedronError,
    PointLocation,
    Tetrahedron,
    bruteforce_verdicts,
    is_clean_bruteforce,
    is_empty_bruteforce,
    is_primitive_pair,
    lattice_points_in,
    locate,
    parallelepiped_interior_bruteforce,
    parallelepiped_interior_points,
    parallelogram_is_empty_bruteforce,
    standard_tetrahedron,
    triangle_is_empty_bruteforce,
    volume6,
)
from emptytet.intlin import cross, det3, gcd_vec, sub
from emptytet.verify import random_unimodular_map

UNIT = Tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def locate_oracle(t, p):
    """Independent point location: solve the barycentric system exactly."""
    v0, v1, v2, v3 = t.vertices()
    u1, u2, u3 = sub(v1, v0), sub(v2, v0), sub(v3, v0)
    den = det3((u1, u2, u3))
    rhs = sub(p, v0)
    lams = [
        Fraction(det3((rhs, u2, u3)), den),
        Fraction(det3((u1, rhs, u3)), den),
        Fraction(det3((u1, u2, rhs)), den),
    ]
    lams.insert(0, 1 - sum(lams))
    if any(lam < 0 for lam in lams):
        return PointLocation.OUTSIDE
    zeros = sum(lam == 0 for lam in lams)
    if zeros == 0:
        return PointLocation.INTERIOR
    if zeros == 3:
        return PointLocation.VERTEX
    return PointLocation.BOUNDARY_NON_VERTEX


def box_points(t, pad=1):
    verts = t.vertices()
    lo = [min(v[i] for v in verts) - pad for i in range(3)]
    hi = [max(v[i] for v in verts) + pad for i in range(3)]
    return itertools.product(
        range(lo[0], hi[0] + 1), range(lo[1], hi[1] + 1), range(lo[2], hi[2] + 1)
    )


def test_degenerate_rejected():
    with pytest.raises(DegenerateTetrahedronError):
        Tetrahedron((0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 0, 1))
    with pytest.raises(DegenerateTetrahedronError):
        Tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (3, -2, 0))


def test_volume6():
    assert volume6(UNIT) == 1
    assert volume6(standard_tetrahedron(1, 1, 2)) == 2
    for c in range(1, 9):
        for a in range(c):
            for b in range(c):
                assert volume6(standard_tetrahedron(a, b, c)) == c


def test_locate_frozen_cases():
    t = standard_tetrahedron(1, 1, 2)
    assert locate(t, (1, 1, 1)) == PointLocation.OUTSIDE
    assert locate(UNIT, (1, 1, 1)) == PointLocation.OUTSIDE
    for v in t.vertices():
        assert locate(t, v) == PointLocation.VERTEX
    big = Tetrahedron((0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4))
    assert locate(big, (1, 1, 1)) == PointLocation.INTERIOR
    assert locate(big, (2, 0, 0)) == PointLocation.BOUNDARY_NON_VERTEX
    assert locate(big, (1, 1, 2)) == PointLocation.BOUNDARY_NON_VERTEX  # on far face
    assert locate(big, (5, 0, 0)) == PointLocation.OUTSIDE


def test_locate_matches_barycentric_oracle():
    tets = [
        UNIT,
        standard_tetrahedron(1, 1, 2),
        standard_tetrahedron(2, 3, 7),
        Tetrahedron((-1, 2, 0), (3, 1, 1), (0, -2, 2), (1, 1, 5)),
    ]
    for t in tets:
        for p in box_points(t):
            assert locate(t, p) == locate_oracle(t, p), (t, p)


def test_locate_unimodular_invariance():
    rng = random.Random(19)
    t = standard_tetrahedron(2, 3, 7)
    pts = list(box_points(t))
    for _ in range(10):
        m = random_unimodular_map(rng)
        img = t.transformed(m)
        for p in pts:
            assert locate(img, m(p)) == locate(t, p)


def test_lattice_points_unit_tetrahedron():
    pts = lattice_points_in(UNIT)
    assert pts == [
        ((0, 0, 0), PointLocation.VERTEX),
        ((0, 0, 1), PointLocation.VERTEX),
        ((0, 1, 0), PointLocation.VERTEX),
        ((1, 0, 0), PointLocation.VERTEX),
    ]


def test_lattice_points_T115_vertices_only():
    pts = lattice_points_in(standard_tetrahedron(1, 1, 5))
    assert [p for p, _ in pts] == sorted([(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 5)])
    assert all(loc == PointLocation.VERTEX for _, loc in pts)


def test_lattice_points_lex_order_and_locations():
    t = standard_tetrahedron(2, 3, 7)
    pts = lattice_points_in(t)
    assert [p for p, _ in pts] == sorted(p for p, _ in pts)
    assert any(loc == PointLocation.INTERIOR for _, loc in pts)
    for p, loc in pts:
        assert locate(t, p) == loc


def test_oracle_frozen_verdicts():
    assert bruteforce_verdicts(standard_tetrahedron(1, 1, 5)) == (True, True)
    assert bruteforce_verdicts(standard_tetrahedron(2, 3, 7)) == (False, True)
    assert bruteforce_verdicts(standard_tetrahedron(2, 2, 3)) == (False, False)
    assert bruteforce_verdicts(standard_tetrahedron(0, 0, 2)) == (False, False)
    assert is_empty_bruteforce(UNIT) and is_clean_bruteforce(UNIT)


def test_oracle_components_agree():
    for c in range(1, 7):
        for a in range(c):
            for b in range(c):
                t = standard_tetrahedron(a, b, c)
                assert bruteforce_verdicts(t) == (
                    is_empty_bruteforce(t),
                    is_clean_bruteforce(t),
                ), (a, b, c)


def test_empty_implies_clean():
    for c in range(1, 9):
        for a in range(c):
            for b in range(c):
                empty, clean = bruteforce_verdicts(standard_tetrahedron(a, b, c))
                assert clean or not empty, (a, b, c)


def test_oracle_invariant_under_unimodular_maps():
    rng = random.Random(23)
    for a, b, c in [(1, 1, 2), (1, 2, 5), (2, 3, 7), (0, 0, 3)]:
        t = standard_tetrahedron(a, b, c)
        want = bruteforce_verdicts(t)
        for _ in range(3):
            m = random_unimodular_map(rng, min_factors=2, max_factors=4, shear_bound=2)
            assert bruteforce_verdicts(t.transformed(m)) == want, (a, b, c)


def test_primitive_pair_cases():
    assert is_primitive_pair((1, 0, 0), (0, 1, 0))
    assert not is_primitive_pair((2, 0, 0), (0, 1, 0))
    assert is_primitive_pair((1, 0, 0), (4, 2, 5))
    with pytest.raises(ValueError):
        is_primitive_pair((2, 4, 6), (1, 2, 3))
    with pytest.raises(ValueError):
        triangle_is_empty_bruteforce((0, 0, 0), (1, 2, 3))


def test_triangle_parallelogram_frozen():
    assert triangle_is_empty_bruteforce((1, 0, 0), (0, 1, 0))
    assert parallelogram_is_empty_bruteforce((1, 0, 0), (0, 1, 0))
    assert not triangle_is_empty_bruteforce((2, 0, 0), (0, 1, 0))
    assert not parallelogram_is_empty_bruteforce((2, 0, 0), (0, 1, 0))
    # non-primitive pair of primitive vectors: midpoint of the diagonal edge
    assert not triangle_is_empty_bruteforce((1, 2, 0), (1, 0, 2))


def test_three_way_equivalence_exhaustive_small():
    rng = range(-2, 3)
    vecs = list(itertools.product(rng, rng, rng))
    for u in vecs:
        for v in vecs:
            if cross(u, v) == (0, 0, 0):
                continue
            primitive = gcd_vec(cross(u, v)) == 1
            assert triangle_is_empty_bruteforce(u, v) == primitive, (u, v)
            assert parallelogram_is_empty_bruteforce(u, v) == primitive, (u, v)


def test_three_way_equivalence_seeded_sample():
    rng = random.Random(41)
    checked = 0
    while checked < 400:
        u = tuple(rng.randint(-6, 6) for _ in range(3))
        v = tuple(rng.randint(-6, 6) for _ in range(3))
        if cross(u, v) == (0, 0, 0):
            continue
        primitive = gcd_vec(cross(u, v)) == 1
        assert triangle_is_empty_bruteforce(u, v) == primitive, (u, v)
        assert parallelogram_is_empty_bruteforce(u, v) == primitive, (u, v)
        checked += 1


def test_parallelepiped_points_frozen():
    assert parallelepiped_interior_points(1, 1, 2) == [(1, 1, 1)]
    assert parallelepiped_interior_points(0, 0, 1) == []
    for c in (2, 3, 5, 8):
        pts = parallelepiped_interior_points(1, 1, c)
        assert [p[:2] for p in pts] == [(1, 1)] * (c - 1)
        assert [p[2] for p in pts] == list(range(1, c))


def test_parallelepiped_points_match_scan():
    import math

    for c in range(1, 13):
        for a in range(c):
            for b in range(c):
                if math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
                    continue
                pts = parallelepiped_interior_points(a, b, c)
                assert len(pts) == c - 1, (a, b, c)
                assert len(set(pts)) == c - 1, (a, b, c)
                assert sorted(pts) == parallelepiped_interior_bruteforce(a, b, c), (
                    a,
                    b,
                    c,
                )


def test_parallelepiped_points_errors():
    with pytest.raises(ValueError):
        parallelepiped_interior_points(2, 2, 4)  # gcd(2, 4) = 2
    with pytest.raises(ValueError):
        parallelepiped_interior_points(0, 1, 2)  # gcd(0, 2) = 2
    with pytest.raises(ValueError):
        parallelepiped_interior_points(3, 1, 2)  # a out of range
    with pytest.raises(ValueError):
        parallelepiped_interior_points(0, 0, 0)  # c < 1
