"""Canonical rays on the unit sphere, great circles, tripods, and rotations.

A ray stands for a one-dimensional subspace of R^3: the two antipodal unit
vectors spanning it are identified, and construction always picks the
canonical representative (z positive, breaking ties toward positive x and
then positive y on the equator). All predicates compare against an explicit
Tolerance; there is no exact-arithmetic mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AtPole, NotNorthern, NotOrthogonal, ZeroVector

Vec3 = tuple[float, float, float]

#: Fixed band for the canonical sign rule. Deliberately independent of the
#: caller's Tolerance so that whether a stored Ray is canonical never depends
#: on construction-site eps.
CANON_EPS = 1e-9

_UNIT_TOL = 1e-12

NORTH_POLE_VEC: Vec3 = (0.0, 0.0, 1.0)


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerance used by every geometric predicate."""

    eps: float = 1e-9

    def __post_init__(self) -> None:
        if not 0.0 < self.eps < 1e-3:
            raise ValueError(f"tolerance eps must lie in (0, 1e-3), got {self.eps!r}")


TOL = Tolerance()


def dot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def norm(a: Vec3) -> float:
    return math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def _is_canonical_sign(x: float, y: float, z: float) -> bool:
    if z > CANON_EPS:
        return True
    if abs(z) <= CANON_EPS:
        if x > CANON_EPS:
            return True
        if abs(x) <= CANON_EPS and y > 0.0:
            return True
    return False


@dataclass(frozen=True)
class Ray:
    """A one-dimensional subspace stored as its canonical unit vector.

    Invariants (checked at construction): the coordinates are unit within
    1e-12 and satisfy the canonical sign rule. Use canonicalize() to build
    a Ray from an arbitrary nonzero vector.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        n2 = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(n2 - 1.0) > 4.0 * _UNIT_TOL:
            raise ValueError(f"not a unit vector: {(self.x, self.y, self.z)!r}")
        if not _is_canonical_sign(self.x, self.y, self.z):
            raise ValueError(f"not in canonical sign form: {(self.x, self.y, self.z)!r}")

    @property
    def vec(self) -> Vec3:
        return (self.x, self.y, self.z)

    def dot(self, other: "Ray") -> float:
        return dot(self.vec, other.vec)

    def same_subspace(self, other: "Ray", tol: Tolerance = TOL) -> bool:
        """Subspace equality: |dot| within eps of 1."""
        return abs(self.dot(other)) >= 1.0 - tol.eps

    def is_orthogonal(self, other: "Ray", tol: Tolerance = TOL) -> bool:
        return abs(self.dot(other)) <= tol.eps

    def is_northern(self, tol: Tolerance = TOL) -> bool:
        return self.z > tol.eps

    def is_pole(self, tol: Tolerance = TOL) -> bool:
        return self.x * self.x + self.y * self.y <= tol.eps * tol.eps


NORTH_POLE = Ray(0.0, 0.0, 1.0)


def canonicalize(v: Vec3, tol: Tolerance = TOL) -> Ray:
    """Normalize v and pick the canonical antipodal representative.

    Raises ZeroVector when ||v|| <= eps. Exactly sign-invariant:
    canonicalize(v) == canonicalize(-v) down to the last bit.
    """
    n = norm(v)
    if n <= tol.eps:
        raise ZeroVector(f"vector norm {n!r} below tolerance")
    if abs(n - 1.0) <= 4e-13:
        n = 1.0  # near-unit input passes through bit-exactly: makes the map idempotent
    # Adding 0.0 normalizes -0.0 to +0.0 so both antipodes map to the same bits.
    x = v[0] / n + 0.0
    y = v[1] / n + 0.0
    z = v[2] / n + 0.0
    if not _is_canonical_sign(x, y, z):
        x, y, z = -x + 0.0, -y + 0.0, -z + 0.0
    return Ray(x, y, z)


@dataclass(frozen=True)
class GreatCircle:
    """A great circle stored by its unit pole; p is a member iff |p.pole| <= eps."""

    pole: Ray

    def contains(self, p: Ray, tol: Tolerance = TOL) -> bool:
        return abs(self.pole.dot(p)) <= tol.eps

    def residual(self, p: Ray) -> float:
        return abs(self.pole.dot(p))


@dataclass(frozen=True)
class Tripod:
    """Three pairwise orthogonal rays."""

    a: Ray
    b: Ray
    c: Ray

    def __post_init__(self) -> None:
        worst = self.worst_residual()
        if worst > 1e-6:
            raise NotOrthogonal(f"tripod members not pairwise orthogonal, residual {worst!r}")

    @property
    def members(self) -> tuple[Ray, Ray, Ray]:
        return (self.a, self.b, self.c)

    def worst_residual(self) -> float:
        return max(
            abs(self.a.dot(self.b)),
            abs(self.a.dot(self.c)),
            abs(self.b.dot(self.c)),
        )


@dataclass(frozen=True)
class Rotation:
    """Proper rotation of R^3, stored as row tuples."""

    rows: tuple[Vec3, Vec3, Vec3]

    def __post_init__(self) -> None:
        r = self.rows
        for i in range(3):
            for j in range(3):
                got = dot(r[i], r[j])
                want = 1.0 if i == j else 0.0
                if abs(got - want) > 1e-11:
                    raise ValueError("rotation rows not orthonormal")
        if abs(self.det() - 1.0) > 1e-11:
            raise ValueError("rotation determinant is not +1")

    @staticmethod
    def identity() -> "Rotation":
        return Rotation(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)))

    def det(self) -> float:
        r = self.rows
        return dot(r[0], cross(r[1], r[2]))

    def apply(self, v: Vec3) -> Vec3:
        r = self.rows
        return (dot(r[0], v), dot(r[1], v), dot(r[2], v))

    def apply_ray(self, ray: Ray, tol: Tolerance = TOL) -> Ray:
        return canonicalize(self.apply(ray.vec), tol)

    def transpose(self) -> "Rotation":
        r = self.rows
        return Rotation(
            (
                (r[0][0], r[1][0], r[2][0]),
                (r[0][1], r[1][1], r[2][1]),
                (r[0][2], r[1][2], r[2][2]),
            )
        )


def _require_northern_nonpole(q: Ray, tol: Tolerance) -> None:
    if not q.is_northern(tol):
        raise NotNorthern(f"point with z={q.z!r} is not northern")
    if q.is_pole(tol):
        raise AtPole("construction undefined at the north pole")


def equator_partner(q: Ray, tol: Tolerance = TOL) -> Ray:
    """The canonical equator point orthogonal to a northern non-pole ray q.

    Computed as (q_y, -q_x, 0) normalized; the antipodal choice is resolved
    by canonicalization, which is harmless because values attach to subspaces.
    """
    _require_northern_nonpole(q, tol)
    return canonicalize((q.y, -q.x, 0.0), tol)


def circle_of(q: Ray, tol: Tolerance = TOL) -> GreatCircle:
    """The great circle through q and its equator partners.

    q is its northern-most point; the pole is the normalized cross product
    of q with equator_partner(q).
    """
    e = equator_partner(q, tol)
    return GreatCircle(pole=canonicalize(cross(q.vec, e.vec), tol))


def third_point(q: Ray, tol: Tolerance = TOL) -> Ray:
    """The ray completing q and equator_partner(q) to a tripod.

    Formula (-q_x, -q_y, (q_x^2+q_y^2)/q_z), normalized; coincides with the
    pole of circle_of(q).
    """
    _require_northern_nonpole(q, tol)
    s = q.x * q.x + q.y * q.y
    return canonicalize((-q.x, -q.y, s / q.z), tol)


def complete_tripod(q: Ray, tol: Tolerance = TOL) -> Tripod:
    """Tripod (q, equator_partner(q), third_point(q))."""
    return Tripod(q, equator_partner(q, tol), third_point(q, tol))


def rotation_to_pole(q: Ray, tol: Tolerance = TOL) -> Rotation:
    """Proper rotation R with R q = (0,0,1), built about the axis q x N.

    Identity when q is already the pole; canonical rays never equal the
    south pole, so no 180-degree special case is reachable.
    """
    axis = cross(q.vec, NORTH_POLE_VEC)
    s = norm(axis)
    c = q.z
    if s <= tol.eps:
        return Rotation.identity()
    ux, uy, uz = axis[0] / s, axis[1] / s, axis[2] / s
    t = 1.0 - c
    rows = (
        (c + ux * ux * t, ux * uy * t - uz * s, ux * uz * t + uy * s),
        (uy * ux * t + uz * s, c + uy * uy * t, uy * uz * t - ux * s),
        (uz * ux * t - uy * s, uz * uy * t + ux * s, c + uz * uz * t),
    )
    return Rotation(rows)
