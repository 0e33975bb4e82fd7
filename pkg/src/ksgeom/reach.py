"""Constructive reachability on the northern hemisphere.

A point p can be reached from q when a finite chain q = c_0, ..., c_k = p
exists with each c_i on the great circle of c_{i-1}. This module builds
such chains: a one-step construction when p is already beyond the circle
of q, and otherwise an outward spiral (the shell) whose circles eventually
put p on the reachable side. Certificates carry every chain point and are
re-checkable without trusting the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AtPole,
    BadN,
    NoSuchN,
    NotNorthern,
    NotReachableDirectly,
    PreconditionViolation,
    Unreachable,
)
from .plane import PlanePoint, Side, circle_image_line, project, side_of, unproject
from .sphere import TOL, Ray, Tolerance, Vec3, canonicalize, circle_of

#: Hard cap on shell size; hitting it means the height gap is below what the
#: construction can resolve numerically.
N_MAX = 10**6

MIN_SHELL_N = 5


@dataclass(frozen=True)
class ShellParams:
    """Shell step count and starting plane distance."""

    n: int
    d0: float

    def __post_init__(self) -> None:
        if self.n < MIN_SHELL_N:
            raise BadN(f"shell needs n >= {MIN_SHELL_N}, got {self.n}")
        if not self.d0 > 0.0:
            raise BadN(f"shell needs positive starting distance, got {self.d0!r}")

    @property
    def step_angle(self) -> float:
        return 2.0 * math.pi / self.n

    @property
    def growth(self) -> float:
        """Per-step radial growth 1/cos(2*pi/n)."""
        return 1.0 / math.cos(self.step_angle)


@dataclass(frozen=True)
class ReachCertificate:
    """Finite chain of points realizing reachability.

    points[0] is the source and points[-1] the target; consecutive points
    must satisfy the on-circle invariant and every point must be strictly
    northern. Points are stored as plain coordinate triples so that
    verify_certificate can judge documents produced elsewhere.
    """

    points: tuple[Vec3, ...]
    eps: float = TOL.eps
    shell_n: int | None = None


@dataclass(frozen=True)
class VerifyReport:
    accepted: bool
    link_residuals: tuple[float, ...]
    min_z: float
    failures: tuple[str, ...] = ()
    first_bad_link: int | None = None


def step_one(q: Ray, p: Ray, tol: Tolerance = TOL) -> Ray:
    """A point on circle_of(q) whose own circle passes through p.

    Requires p on or beyond circle_of(q). In plane coordinates the unknown
    foot x = F + t*dir must satisfy the right-angle condition x.(x - P) = 0,
    a quadratic with roots of opposite sign; the nonnegative root is taken,
    which makes the output deterministic (the other root is the mirror
    image and equally valid).
    """
    side = side_of(p, q, tol)
    if side is Side.POLE_SIDE:
        raise NotReachableDirectly("target is on the pole side of the circle")
    if side is Side.ON_CIRCLE:
        return q
    f_pt = project(q, tol)
    p_pt = project(p, tol)
    r = circle_image_line(q, tol).dir
    b = r[0] * p_pt.u + r[1] * p_pt.v
    c = f_pt.dot(f_pt) - f_pt.dot(p_pt)
    disc = b * b - 4.0 * c
    if disc < 0.0:  # only reachable via roundoff right at the circle
        disc = 0.0
    t = (b + math.sqrt(disc)) / 2.0
    if t < 0.0:
        t = (b - math.sqrt(disc)) / 2.0
    return unproject(PlanePoint(f_pt.u + t * r[0], f_pt.v + t * r[1]), tol)


def shell(q: Ray, n: int, tol: Tolerance = TOL) -> list[Ray]:
    """The outward spiral q_0 = q, ..., q_n with plane step angle 2*pi/n.

    Each step turns by 2*pi/n and grows the plane distance by 1/cos(2*pi/n),
    which keeps q_{i+1} exactly on the circle of q_i.
    """
    if q.is_pole(tol):
        raise AtPole("shell undefined at the north pole")
    params = ShellParams(n=n, d0=project(q, tol).norm())
    f = project(q, tol)
    phi = math.atan2(f.v, f.u)
    d = params.d0
    points = [q]
    for _ in range(n):
        phi += params.step_angle
        d *= params.growth
        points.append(unproject(PlanePoint(d * math.cos(phi), d * math.sin(phi)), tol))
    return points


def choose_shell_n(q: Ray, p: Ray, tol: Tolerance = TOL) -> int:
    """Smallest n >= 5 whose shell provably brings p beyond some shell circle.

    Criterion: d0 * cos(2*pi/n)^(-n) < ||h(p)|| * cos(pi/n). The cos(pi/n)
    factor absorbs the worst angular mismatch between h(p) and the nearest
    shell direction (directions advance by 2*pi/n, so some shell point is
    within pi/n of h(p)'s azimuth). Raises NoSuchN past N_MAX, which signals
    heights too close to separate numerically.
    """
    if q.is_pole(tol):
        raise AtPole("shell selection undefined at the north pole")
    if not (p.is_northern(tol) and q.is_northern(tol)):
        raise NotNorthern("both points must be northern")
    if not p.z < q.z:
        raise PreconditionViolation("target must be strictly lower than source")
    d0 = project(q, tol).norm()
    target = project(p, tol).norm()
    n = MIN_SHELL_N
    while n <= N_MAX:
        if d0 * math.cos(2.0 * math.pi / n) ** (-n) < target * math.cos(math.pi / n):
            return n
        n += 1
    raise NoSuchN(f"no admissible shell size up to {N_MAX}")


def _as_cert(points: list[Ray], tol: Tolerance, shell_n: int | None) -> ReachCertificate:
    return ReachCertificate(
        points=tuple(r.vec for r in points), eps=tol.eps, shell_n=shell_n
    )


def reach(q: Ray, p: Ray, tol: Tolerance = TOL) -> ReachCertificate:
    """Certificate that p can be reached from q, for northern p_z < q_z - eps."""
    if not (p.is_northern(tol) and q.is_northern(tol)):
        raise NotNorthern("both points must be northern")
    if q.is_pole(tol):
        raise AtPole("reach source must not be the pole")
    if not p.z < q.z - tol.eps:
        raise PreconditionViolation(
            f"need p_z < q_z - eps, got p_z={p.z!r}, q_z={q.z!r}"
        )
    side = side_of(p, q, tol)
    if side is Side.ON_CIRCLE:
        return _as_cert([q, p], tol, None)
    if side is Side.BEYOND:
        return _as_cert([q, step_one(q, p, tol), p], tol, None)

    n = choose_shell_n(q, p, tol)
    while True:
        points = shell(q, n, tol)
        for i, s_pt in enumerate(points):
            s = side_of(p, s_pt, tol)
            if s is Side.POLE_SIDE:
                continue
            prefix = points[: i + 1]
            if s is Side.ON_CIRCLE:
                return _as_cert(prefix + [p], tol, n)
            return _as_cert(prefix + [step_one(s_pt, p, tol), p], tol, n)
        if n >= N_MAX:
            raise Unreachable(f"shell scan found no index up to n={n}")
        n = min(2 * n, N_MAX)


def verify_certificate(cert: ReachCertificate, tol: Tolerance = TOL) -> VerifyReport:
    """Re-check every certificate invariant; failures are report entries.

    Checks, per point: near-unit norm and strictly positive z; per link
    (a, b): |b . pole(circle_of(a))| within tol. The first offending link
    or point index is reported.
    """
    pts = cert.points
    failures: list[str] = []
    first_bad: int | None = None

    def fail(idx: int, msg: str) -> None:
        nonlocal first_bad
        failures.append(f"[{idx}] {msg}")
        if first_bad is None:
            first_bad = idx

    if len(pts) < 1:
        return VerifyReport(
            accepted=False,
            link_residuals=(),
            min_z=math.nan,
            failures=("[0] certificate must contain at least one point",),
            first_bad_link=0,
        )

    min_z = math.inf
    rays: list[Ray | None] = []
    for i, v in enumerate(pts):
        n = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
        if abs(n - 1.0) > 1e-6:
            fail(i, f"point norm {n!r} not within 1e-6 of 1")
            rays.append(None)
            continue
        min_z = min(min_z, v[2])
        if not v[2] > tol.eps:
            fail(i, f"point z={v[2]!r} not strictly northern")
            rays.append(None)
            continue
        rays.append(canonicalize(v, tol))

    residuals: list[float] = []
    for i in range(len(pts) - 1):
        a, b = rays[i], rays[i + 1]
        if a is None or b is None:
            residuals.append(math.nan)
            continue
        if a.is_pole(tol):
            fail(i, "link source is the pole; its circle is undefined")
            residuals.append(math.nan)
            continue
        res = circle_of(a, tol).residual(b)
        residuals.append(res)
        if res > tol.eps:
            fail(i, f"link residual {res!r} exceeds tolerance")

    return VerifyReport(
        accepted=not failures,
        link_residuals=tuple(residuals),
        min_z=min_z if min_z is not math.inf else math.nan,
        failures=tuple(failures),
        first_bad_link=first_bad,
    )


def asymptotic_residual(n: int) -> float:
    """n*log(cos(2*pi/n)) + 2*pi^2/n; tends to 0 like -((2*pi)^4/12)/n^3."""
    if n < MIN_SHELL_N:
        raise BadN(f"need n >= {MIN_SHELL_N}, got {n}")
    return n * math.log(math.cos(2.0 * math.pi / n)) + 2.0 * math.pi * math.pi / n
