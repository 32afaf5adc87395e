"""Lattice tetrahedra, exact point location, and brute-force lattice-point oracles.

Every predicate is decided by signs of integer determinants; there is no
floating point and no division except exact ones guarded by asserts.  The
*_bruteforce functions scan an integer bounding box and serve as ground
truth for the fast number-theoretic criteria in `white`.

A tetrahedron is *empty* when its only lattice points are its four
vertices, and *clean* when its boundary carries no lattice points besides
the vertices (interior points are allowed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .intlin import (
    E1,
    E2,
    ZERO,
    AffineUnimodularMap,
    Vec3,
    cross,
    det3,
    dot,
    gcd_vec,
    neg,
    sub,
)


class DegenerateTetrahedronError(ValueError):
    """Vertices whose edge vectors have zero determinant."""


class PointLocation(Enum):
    OUTSIDE = "outside"
    VERTEX = "vertex"
    BOUNDARY_NON_VERTEX = "boundary-non-vertex"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Tetrahedron:
    """Nondegenerate lattice tetrahedron given by four integer vertices."""

    v0: Vec3
    v1: Vec3
    v2: Vec3
    v3: Vec3

    def __post_init__(self) -> None:
        for name in ("v0", "v1", "v2", "v3"):
            p = getattr(self, name)
            object.__setattr__(self, name, (int(p[0]), int(p[1]), int(p[2])))
        if det3(self.edge_vectors()) == 0:
            raise DegenerateTetrahedronError(
                f"degenerate tetrahedron (coplanar vertices): {self.vertices()}"
            )

    def vertices(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        return (self.v0, self.v1, self.v2, self.v3)

    def edge_vectors(self) -> tuple[Vec3, Vec3, Vec3]:
        """The three edge vectors based at v0."""
        return (sub(self.v1, self.v0), sub(self.v2, self.v0), sub(self.v3, self.v0))

    def transformed(self, m: AffineUnimodularMap) -> Tetrahedron:
        return Tetrahedron(m(self.v0), m(self.v1), m(self.v2), m(self.v3))


def standard_tetrahedron(a: int, b: int, c: int) -> Tetrahedron:
    """The tetrahedron with vertices 0, e1, e2 and (a, b, c)."""
    return Tetrahedron(ZERO, E1, E2, (a, b, c))


def volume6(t: Tetrahedron) -> int:
    """Six times the euclidean volume: |det| of the edge vectors at v0."""
    return abs(det3(t.edge_vectors()))


def _face_forms(t: Tetrahedron):
    """Affine forms whose signs locate a point against the four faces.

    Returns (total, ((n1, c1), (n2, c2), (n3, c3))) where
    d_i(p) = dot(n_i, p) + c_i for i = 1..3 and d_0(p) = total - d1 - d2 - d3
    are `total` times the barycentric coordinates of p, with `total` the
    positively-oriented determinant of the edge vectors.  p lies in the
    closed tetrahedron iff all four values are >= 0.
    """
    u1, u2, u3 = t.edge_vectors()
    total = det3((u1, u2, u3))
    n1, n2, n3 = cross(u2, u3), cross(u3, u1), cross(u1, u2)
    if total < 0:
        total, n1, n2, n3 = -total, neg(n1), neg(n2), neg(n3)
    return total, (
        (n1, -dot(n1, t.v0)),
        (n2, -dot(n2, t.v0)),
        (n3, -dot(n3, t.v0)),
    )


def _classify(d0: int, d1: int, d2: int, d3: int) -> PointLocation:
    if d0 < 0 or d1 < 0 or d2 < 0 or d3 < 0:
        return PointLocation.OUTSIDE
    zeros = (d0 == 0) + (d1 == 0) + (d2 == 0) + (d3 == 0)
    if zeros == 0:
        return PointLocation.INTERIOR
    if zeros == 3:
        return PointLocation.VERTEX
    # zeros == 4 would force total == 0, excluded by nondegeneracy.
    return PointLocation.BOUNDARY_NON_VERTEX


def locate(t: Tetrahedron, p: Vec3) -> PointLocation:
    """Exact location of p relative to t from four determinant signs."""
    total, ((n1, c1), (n2, c2), (n3, c3)) = _face_forms(t)
    d1 = dot(n1, p) + c1
    d2 = dot(n2, p) + c2
    d3 = dot(n3, p) + c3
    return _classify(total - d1 - d2 - d3, d1, d2, d3)


def _bounding_box(points) -> tuple[range, range, range]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    zs = [p[2] for p in points]
    return (
        range(min(xs), max(xs) + 1),
        range(min(ys), max(ys) + 1),
        range(min(zs), max(zs) + 1),
    )


def lattice_points_in(t: Tetrahedron) -> list[tuple[Vec3, PointLocation]]:
    """Every lattice point of the closed tetrahedron with its location.

    Scans the integer bounding box of the vertices; the result is in
    lexicographic (x, y, z) order.
    """
    total, ((n1, c1), (n2, c2), (n3, c3)) = _face_forms(t)
    xr, yr, zr = _bounding_box(t.vertices())
    found = []
    for x in xr:
        for y in yr:
            for z in zr:
                p = (x, y, z)
                d1 = dot(n1, p) + c1
                d2 = dot(n2, p) + c2
                d3 = dot(n3, p) + c3
                loc = _classify(total - d1 - d2 - d3, d1, d2, d3)
                if loc is not PointLocation.OUTSIDE:
                    found.append((p, loc))
    return found


def is_empty_bruteforce(t: Tetrahedron) -> bool:
    """Oracle: no lattice point besides the four vertices.

    Same bounding-box scan as lattice_points_in, but stops at the first
    non-vertex point.  The inner loop is unrolled into incremental affine
    evaluations because this runs over millions of points in the
    verification suites.
    """
    total, ((n1, c1), (n2, c2), (n3, c3)) = _face_forms(t)
    n1x, n1y, n1z = n1
    n2x, n2y, n2z = n2
    n3x, n3y, n3z = n3
    xr, yr, zr = _bounding_box(t.vertices())
    for x in xr:
        r1 = n1x * x + c1
        r2 = n2x * x + c2
        r3 = n3x * x + c3
        for y in yr:
            b1 = r1 + n1y * y
            b2 = r2 + n2y * y
            b3 = r3 + n3y * y
            for z in zr:
                d1 = b1 + n1z * z
                if d1 < 0:
                    continue
                d2 = b2 + n2z * z
                if d2 < 0:
                    continue
                d3 = b3 + n3z * z
                if d3 < 0:
                    continue
                d0 = total - d1 - d2 - d3
                if d0 < 0:
                    continue
                if ((d0 == 0) + (d1 == 0) + (d2 == 0) + (d3 == 0)) != 3:
                    return False
    return True


def bruteforce_verdicts(t: Tetrahedron) -> tuple[bool, bool]:
    """Oracle pair (empty, clean) decided in one bounding-box sweep.

    A boundary point that is not a vertex settles both verdicts at once,
    so the sweep stops there; an interior point only refutes emptiness and
    the sweep continues hunting for boundary points.
    """
    total, ((n1, c1), (n2, c2), (n3, c3)) = _face_forms(t)
    n1x, n1y, n1z = n1
    n2x, n2y, n2z = n2
    n3x, n3y, n3z = n3
    xr, yr, zr = _bounding_box(t.vertices())
    empty = True
    for x in xr:
        r1 = n1x * x + c1
        r2 = n2x * x + c2
        r3 = n3x * x + c3
        for y in yr:
            b1 = r1 + n1y * y
            b2 = r2 + n2y * y
            b3 = r3 + n3y * y
            for z in zr:
                d1 = b1 + n1z * z
                if d1 < 0:
                    continue
                d2 = b2 + n2z * z
                if d2 < 0:
                    continue
                d3 = b3 + n3z * z
                if d3 < 0:
                    continue
                d0 = total - d1 - d2 - d3
                if d0 < 0:
                    continue
                zeros = (d0 == 0) + (d1 == 0) + (d2 == 0) + (d3 == 0)
                if zeros == 0:
                    empty = False
                elif zeros != 3:
                    return False, False
    return empty, True


def is_clean_bruteforce(t: Tetrahedron) -> bool:
    """Oracle: no boundary lattice point besides the four vertices."""
    return bruteforce_verdicts(t)[1]


def _plane_coefficients(u: Vec3, v: Vec3) -> Vec3:
    n = cross(u, v)
    if n == ZERO:
        raise ValueError(f"linearly dependent pair: {u}, {v}")
    return n


def is_primitive_pair(u: Vec3, v: Vec3) -> bool:
    """True when independent u, v extend to a lattice basis (gcd of cross is 1)."""
    return gcd_vec(_plane_coefficients(u, v)) == 1


def triangle_is_empty_bruteforce(u: Vec3, v: Vec3) -> bool:
    """Oracle: the closed triangle {0, u, v} has no lattice point except its vertices.

    Membership of p is solved exactly: with n = cross(u, v), the scaled
    coordinates s = det(p, v, n) and t = det(u, p, n) satisfy
    p = (s*u + t*v) / dot(n, n) for in-plane p.
    """
    n = _plane_coefficients(u, v)
    nn = dot(n, n)
    sv = cross(v, n)  # s * nn = dot(p, sv)
    tu = cross(n, u)  # t * nn = dot(p, tu)
    corners = (ZERO, u, v)
    xr, yr, zr = _bounding_box(corners)
    for x in xr:
        for y in yr:
            for z in zr:
                p = (x, y, z)
                if dot(n, p) != 0:
                    continue
                s = dot(p, sv)
                if s < 0:
                    continue
                t = dot(p, tu)
                if t < 0 or s + t > nn:
                    continue
                if p not in corners:
                    return False
    return True


def parallelogram_is_empty_bruteforce(u: Vec3, v: Vec3) -> bool:
    """Oracle: the closed parallelogram spanned by u, v has only its 4 corners."""
    n = _plane_coefficients(u, v)
    nn = dot(n, n)
    sv = cross(v, n)
    tu = cross(n, u)
    corners = (ZERO, u, v, (u[0] + v[0], u[1] + v[1], u[2] + v[2]))
    xr, yr, zr = _bounding_box(corners)
    for x in xr:
        for y in yr:
            for z in zr:
                p = (x, y, z)
                if dot(n, p) != 0:
                    continue
                s = dot(p, sv)
                if s < 0 or s > nn:
                    continue
                t = dot(p, tu)
                if t < 0 or t > nn:
                    continue
                if p not in corners:
                    return False
    return True


def _check_height_params(a: int, b: int, c: int) -> None:
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if not (0 <= a < c and 0 <= b < c):
        raise ValueError(f"need 0 <= a, b < c, got a={a}, b={b}, c={c}")


def parallelepiped_interior_points(a: int, b: int, c: int) -> list[Vec3]:
    """The c - 1 interior lattice points of the parallelepiped spanned by
    e1, e2 and (a, b, c), in order of increasing height z = k.

    Point k (k = 1..c-1) is <k(c-a)/c> e1 + <k(c-b)/c> e2 + (k/c)(a, b, c)
    where <.> is the fractional part.  Each coordinate is assembled over
    the common denominator c and asserted integral rather than assumed.
    Requires gcd(a, c) = gcd(b, c) = 1; otherwise some of these points
    would degenerate onto the boundary.
    """
    _check_height_params(a, b, c)
    if math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        raise ValueError(
            f"need gcd(a, c) = gcd(b, c) = 1, got a={a}, b={b}, c={c}"
        )
    points = []
    for k in range(1, c):
        x_num = k * (c - a) % c + k * a
        y_num = k * (c - b) % c + k * b
        assert x_num % c == 0 and y_num % c == 0, (a, b, c, k)
        points.append((x_num // c, y_num // c, k))
    return points


def parallelepiped_interior_bruteforce(a: int, b: int, c: int) -> list[Vec3]:
    """Oracle: interior lattice points of the same parallelepiped by scanning.

    p = (x, y, z) is interior iff its coefficients over the spanning
    vectors lie strictly between 0 and 1, i.e. 0 < z < c,
    0 < x*c - z*a < c and 0 < y*c - z*b < c.  Lexicographic order.
    """
    _check_height_params(a, b, c)
    found = []
    for x in range(0, a + 2):
        for y in range(0, b + 2):
            for z in range(1, c):
                if 0 < x * c - z * a < c and 0 < y * c - z * b < c:
                    found.append((x, y, z))
    return found
