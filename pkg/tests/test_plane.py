import math

import pytest

from ksgeom.errors import AtPole, NotNorthern
from ksgeom.plane import PlanePoint, Side, circle_image_line, project, side_of, unproject
from ksgeom.sphere import NORTH_POLE, TOL, canonicalize, circle_of, equator_partner

from conftest import random_northern, random_northern_nonpole

R2 = math.sqrt(0.5)


class TestProject:
    def test_pole_maps_to_origin(self):
        assert project(NORTH_POLE).xy == (0.0, 0.0)

    def test_diagonal(self):
        assert project(canonicalize((R2, 0, R2))).xy == (1.0, 0.0)

    def test_three_four_five(self):
        h = project(canonicalize((0.6, 0, 0.8)))
        assert abs(h.u - 0.75) <= 1e-12 and h.v == 0.0

    def test_not_northern(self):
        with pytest.raises(NotNorthern):
            project(canonicalize((0, 1, 0)))


class TestUnproject:
    def test_origin(self):
        assert unproject(PlanePoint(0, 0)).vec == (0.0, 0.0, 1.0)

    def test_unit(self):
        r = unproject(PlanePoint(1, 0))
        assert abs(r.dot(canonicalize((R2, 0, R2)))) >= 1.0 - 1e-12

    def test_three_four(self):
        r = unproject(PlanePoint(3, 4))
        s = math.sqrt(26.0)
        assert abs(r.dot(canonicalize((3 / s, 4 / s, 1 / s)))) >= 1.0 - 1e-12

    def test_round_trip_bulk(self, rng):
        for _ in range(10_000):
            q = random_northern(rng)
            back = unproject(project(q))
            assert abs(back.dot(q)) >= 1.0 - 1e-12

    def test_plane_round_trip(self, rng):
        for _ in range(1000):
            p = PlanePoint(rng.uniform(-20, 20), rng.uniform(-20, 20))
            back = project(unproject(p))
            assert math.hypot(back.u - p.u, back.v - p.v) <= 1e-12 * max(1.0, p.norm())


class TestMonotonicity:
    def test_height_vs_plane_distance(self, rng):
        margin = 10 * TOL.eps
        for _ in range(10_000):
            p = random_northern(rng)
            q = random_northern(rng)
            if abs(p.z - q.z) < margin:
                continue
            assert (q.z > p.z) == (project(p).norm() > project(q).norm())


class TestCircleImageLine:
    def test_counterclockwise_dir(self):
        q = unproject(PlanePoint(1, 0))
        ln = circle_image_line(q)
        assert ln.foot.xy == (1.0, 0.0)
        assert ln.dir == (0.0, 1.0)

    def test_vertical_foot(self):
        q = unproject(PlanePoint(0, 2))
        ln = circle_image_line(q)
        assert ln.foot.xy == (0.0, 2.0)
        assert ln.dir == (-1.0, 0.0)

    def test_at_pole(self):
        with pytest.raises(AtPole):
            circle_image_line(NORTH_POLE)

    def test_circle_points_land_on_line(self, rng):
        # 100 sampled points of the circle project onto the image line.
        for _ in range(30):
            q = random_northern_nonpole(rng)
            e = equator_partner(q)
            ln = circle_image_line(q)
            f, d = ln.foot, ln.dir
            for i in range(100):
                a = math.cos(math.pi * (i / 100.0 - 0.5) * 0.98)
                b = math.sin(math.pi * (i / 100.0 - 0.5) * 0.98)
                v = tuple(a * qc + b * ec for qc, ec in zip(q.vec, e.vec))
                if v[2] <= 1e-6:
                    continue
                pt = project(canonicalize(v))
                # distance from pt to the line through f with direction d
                dist = abs((pt.u - f.u) * (-d[1]) + (pt.v - f.v) * d[0])
                assert dist <= 1e-9 * max(1.0, pt.norm())


class TestSideOf:
    def test_beyond(self):
        assert side_of(unproject(PlanePoint(2, 0)), unproject(PlanePoint(1, 0))) is Side.BEYOND

    def test_on_circle(self):
        assert side_of(unproject(PlanePoint(1, 5)), unproject(PlanePoint(1, 0))) is Side.ON_CIRCLE

    def test_pole_side(self):
        assert side_of(unproject(PlanePoint(0.5, 0)), unproject(PlanePoint(1, 0))) is Side.POLE_SIDE

    def test_at_pole(self):
        with pytest.raises(AtPole):
            side_of(unproject(PlanePoint(1, 0)), NORTH_POLE)

    def test_consistency_with_sphere_membership(self, rng):
        # ON_CIRCLE iff |p . pole(circle_of(q))| <= eps, exactly: the plane
        # threshold is the sphere test rescaled by sqrt(1+|P|^2)*|F|*sqrt(1+|F|^2).
        hits = 0
        for _ in range(5000):
            q = random_northern_nonpole(rng)
            p = random_northern(rng)
            on_plane = side_of(p, q) is Side.ON_CIRCLE
            on_sphere = abs(p.dot(circle_of(q).pole)) <= TOL.eps
            assert on_plane == on_sphere
            hits += on_plane
        # near-miss pairs rarely land on the circle; force some exact members
        for _ in range(200):
            q = random_northern_nonpole(rng)
            e = equator_partner(q)
            a, b = rng.uniform(-1, 1), rng.uniform(0.05, 1)
            n = math.hypot(a, b)
            v = tuple((a / n) * qc + (b / n) * ec for qc, ec in zip(q.vec, e.vec))
            if v[2] <= 1e-3:
                continue
            p = canonicalize(v)
            assert side_of(p, q) is Side.ON_CIRCLE
            assert abs(p.dot(circle_of(q).pole)) <= TOL.eps
