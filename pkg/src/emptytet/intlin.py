"""Exact integer linear algebra on Z^3.

Everything works on plain integer 3-tuples and row-major 3x3 tuples of
tuples.  Python integers are unbounded, so every determinant, cross
product and inverse below is exact; no floating point appears anywhere
in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Vec3 = tuple[int, int, int]
Mat3 = tuple[Vec3, Vec3, Vec3]

ZERO: Vec3 = (0, 0, 0)
E1: Vec3 = (1, 0, 0)
E2: Vec3 = (0, 1, 0)
E3: Vec3 = (0, 0, 1)

IDENTITY: Mat3 = (E1, E2, E3)


class NotPrimitiveError(ValueError):
    """A vector pair that must extend to a lattice basis does not."""


def add(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def neg(u: Vec3) -> Vec3:
    return (-u[0], -u[1], -u[2])


def dot(u: Vec3, v: Vec3) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Integer cross product; dot(cross(u, v), w) == det3((u, v, w))."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(m: Mat3) -> int:
    """Determinant of a 3x3 integer matrix given as rows."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def gcd_vec(u: Vec3) -> int:
    """Nonnegative gcd of the three components; gcd_vec((0, 0, 0)) == 0."""
    return math.gcd(*u)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def extended_gcd3(a: int, b: int, c: int) -> tuple[int, int, int, int]:
    """(g, x, y, z) with g = gcd(a, b, c) >= 0 and a*x + b*y + c*z == g.

    Coefficients are pinned by nesting gcd(gcd(a, b), c), so repeated runs
    give identical output.  All-zero input returns (0, 0, 0, 0).
    """
    if a == 0 and b == 0 and c == 0:
        return 0, 0, 0, 0
    g_ab, x_ab, y_ab = xgcd(a, b)
    g, s, z = xgcd(g_ab, c)
    return g, x_ab * s, y_ab * s, z


def extend_to_basis(u: Vec3, v: Vec3) -> Vec3:
    """Complete a primitive pair {u, v} to a basis of Z^3.

    Returns w with det3((u, v, w)) == +1.  The pair is primitive exactly
    when gcd of cross(u, v) is 1; a collinear or non-primitive pair raises
    NotPrimitiveError.
    """
    n = cross(u, v)
    if n == ZERO:
        raise NotPrimitiveError(f"collinear pair: {u}, {v}")
    g, x, y, z = extended_gcd3(*n)
    if g != 1:
        raise NotPrimitiveError(
            f"pair is not primitive (cross product has gcd {g}): {u}, {v}"
        )
    # det3((u, v, w)) equals dot(cross(u, v), w) == g == 1, so the
    # orientation is already the required +1.
    return (x, y, z)


def transpose(m: Mat3) -> Mat3:
    return (
        (m[0][0], m[1][0], m[2][0]),
        (m[0][1], m[1][1], m[2][1]),
        (m[0][2], m[1][2], m[2][2]),
    )


def columns_matrix(c0: Vec3, c1: Vec3, c2: Vec3) -> Mat3:
    """Matrix with the given columns."""
    return transpose((c0, c1, c2))


def mat_vec(m: Mat3, p: Vec3) -> Vec3:
    return (dot(m[0], p), dot(m[1], p), dot(m[2], p))


def mat_mul(m: Mat3, n: Mat3) -> Mat3:
    c0, c1, c2 = transpose(n)
    return (
        (dot(m[0], c0), dot(m[0], c1), dot(m[0], c2)),
        (dot(m[1], c0), dot(m[1], c1), dot(m[1], c2)),
        (dot(m[2], c0), dot(m[2], c1), dot(m[2], c2)),
    )


def adjugate(m: Mat3) -> Mat3:
    """Transposed cofactor matrix: mat_mul(m, adjugate(m)) == det3(m) * I."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


@dataclass(frozen=True)
class AffineUnimodularMap:
    """Affine map p -> matrix @ p + translation with det(matrix) = +-1.

    These are exactly the affine bijections of the lattice Z^3, so
    applying one never changes which lattice points a body contains,
    only where they sit.
    """

    matrix: Mat3
    translation: Vec3 = ZERO

    def __post_init__(self) -> None:
        d = det3(self.matrix)
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det = {d})")

    @classmethod
    def identity(cls) -> AffineUnimodularMap:
        return cls(IDENTITY, ZERO)

    def apply(self, p: Vec3) -> Vec3:
        return add(mat_vec(self.matrix, p), self.translation)

    __call__ = apply

    def compose(self, other: AffineUnimodularMap) -> AffineUnimodularMap:
        """Map applying `other` first: L1.compose(L2)(p) == L1(L2(p))."""
        return AffineUnimodularMap(
            mat_mul(self.matrix, other.matrix),
            add(mat_vec(self.matrix, other.translation), self.translation),
        )

    def invert(self) -> AffineUnimodularMap:
        """Exact inverse; integral because det = +-1 makes adjugate/det exact."""
        adj = adjugate(self.matrix)
        if det3(self.matrix) == -1:
            adj = (neg(adj[0]), neg(adj[1]), neg(adj[2]))
        return AffineUnimodularMap(adj, neg(mat_vec(adj, self.translation)))
