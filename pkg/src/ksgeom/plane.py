"""Central projection onto the tangent plane at the north pole.

The plane H = {z = 1} is coordinatized by (u, v) with the pole at the
origin; a northern point (x, y, z) projects to (x/z, y/z). Great circles
through northern points map to straight lines, and the "beyond" side of
such a line is the image of the region between the circle and the equator.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import AtPole, NotNorthern
from .sphere import TOL, Ray, Tolerance, canonicalize


@dataclass(frozen=True)
class PlanePoint:
    u: float
    v: float

    @property
    def xy(self) -> tuple[float, float]:
        return (self.u, self.v)

    def norm(self) -> float:
        return math.hypot(self.u, self.v)

    def dot(self, other: "PlanePoint") -> float:
        return self.u * other.u + self.v * other.v


@dataclass(frozen=True)
class PlaneLine:
    """Line given by its foot (closest point to the origin) and unit direction."""

    foot: PlanePoint
    dir: tuple[float, float]

    def __post_init__(self) -> None:
        d = math.hypot(*self.dir)
        if abs(d - 1.0) > 1e-12:
            raise ValueError("line direction is not unit")
        if abs(self.foot.u * self.dir[0] + self.foot.v * self.dir[1]) > 1e-9 * max(
            1.0, self.foot.norm()
        ):
            raise ValueError("line direction not orthogonal to its foot")


class Side(enum.Enum):
    POLE_SIDE = "pole_side"
    ON_CIRCLE = "on_circle"
    BEYOND = "beyond"


def project(q: Ray, tol: Tolerance = TOL) -> PlanePoint:
    """h(q) = (q_x/q_z, q_y/q_z); bijective from the open northern hemisphere."""
    if not q.is_northern(tol):
        raise NotNorthern(f"cannot project point with z={q.z!r}")
    return PlanePoint(q.x / q.z, q.y / q.z)


def unproject(p: PlanePoint, tol: Tolerance = TOL) -> Ray:
    """Inverse of project: the canonical ray through (u, v, 1)."""
    return canonicalize((p.u, p.v, 1.0), tol)


def circle_image_line(q: Ray, tol: Tolerance = TOL) -> PlaneLine:
    """The image line of circle_of(q): through h(q), orthogonal to the pole ray.

    The direction is the counterclockwise quarter turn of the foot.
    """
    if q.is_pole(tol):
        raise AtPole("circle image line undefined at the north pole")
    foot = project(q, tol)
    d = foot.norm()
    return PlaneLine(foot, (-foot.v / d, foot.u / d))


def _side_threshold(p_pt: PlanePoint, f_pt: PlanePoint, eps: float) -> float:
    # Exact sphere->plane tolerance conversion: with p = (P,1)/sqrt(1+|P|^2)
    # and pole(C(q)) = (-F, |F|^2)/(|F| sqrt(1+|F|^2)),
    #   P.F - |F|^2 = -(p . pole) * sqrt(1+|P|^2) * |F| * sqrt(1+|F|^2),
    # so comparing |P.F - |F|^2| against eps times that factor is exactly the
    # sphere-space membership test |p . pole| <= eps.
    pn2 = p_pt.u * p_pt.u + p_pt.v * p_pt.v
    fn = f_pt.norm()
    fn2 = fn * fn
    return eps * math.sqrt(1.0 + pn2) * fn * math.sqrt(1.0 + fn2)


def side_of(p: Ray, q: Ray, tol: Tolerance = TOL) -> Side:
    """Which side of circle_of(q) the point p falls on, in plane coordinates.

    BEYOND means p lies in the region between the circle and the equator
    (the half plane not containing the pole); ON_CIRCLE is membership within
    tolerance; POLE_SIDE is the rest of the hemisphere.
    """
    if q.is_pole(tol):
        raise AtPole("side_of undefined for the pole circle")
    p_pt = project(p, tol)
    f_pt = project(q, tol)
    s = p_pt.dot(f_pt) - f_pt.dot(f_pt)
    thr = _side_threshold(p_pt, f_pt, tol.eps)
    if abs(s) <= thr:
        return Side.ON_CIRCLE
    if s > thr:
        return Side.BEYOND
    return Side.POLE_SIDE
