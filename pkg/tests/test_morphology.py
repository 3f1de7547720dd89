import math

import numpy as np
import pytest

from conftest import random_rounded_set
from shrinkset import (
    ConvexPolygon,
    EmptySetError,
    RoundedSet,
    contains,
    dilate,
    duality_gap,
    erode,
    hausdorff,
    inner_radius,
    opening,
    polygon_erode,
    rounded_area,
)
from shrinkset.geometry import polygon_area, polygon_perimeter
from shrinkset.morphology import ErosionProfile

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RECT = [(0, 0), (2, 0), (2, 1), (0, 1)]


def sq(radius=0.0):
    return RoundedSet.from_polygon(SQUARE, radius)


class TestDilate:
    def test_square(self):
        d = dilate(sq(), 1.0)
        assert d.radius == 1.0
        assert rounded_area(d) == pytest.approx(5 + math.pi)

    def test_semigroup(self, rng):
        s = random_rounded_set(rng)
        once = dilate(dilate(s, 0.4), 0.7)
        assert hausdorff(once, dilate(s, 1.1)) <= 1e-12

    def test_empty(self):
        assert dilate(RoundedSet.empty(), 1.0).is_empty


class TestPolygonErode:
    def test_square_interior(self):
        p = polygon_erode(ConvexPolygon(SQUARE), 0.2)
        assert np.allclose(
            sorted(map(tuple, p.vertices)),
            [(0.2, 0.2), (0.2, 0.8), (0.8, 0.2), (0.8, 0.8)],
        )

    def test_square_to_point(self):
        p = polygon_erode(ConvexPolygon(SQUARE), 0.5)
        assert len(p) == 1
        assert np.allclose(p.vertices[0], (0.5, 0.5))

    def test_rect_to_segment(self):
        p = polygon_erode(ConvexPolygon(RECT), 0.5)
        assert len(p) == 2
        assert np.allclose(sorted(map(tuple, p.vertices)), [(0.5, 0.5), (1.5, 0.5)])

    def test_past_depth_is_empty(self):
        assert len(polygon_erode(ConvexPolygon(SQUARE), 0.51)) == 0


class TestErode:
    def test_radius_roundtrip(self):
        e = erode(dilate(sq(), 1.0), 1.0)
        assert e.radius == 0.0
        assert hausdorff(e, sq()) == 0.0

    def test_polygon_shrink(self):
        e = erode(sq(), 0.3)
        assert rounded_area(e) == pytest.approx(0.16)

    def test_ball_to_empty(self):
        assert erode(RoundedSet.ball((0, 0), 1.0), 2.0).is_empty


class TestOpening:
    def test_square_corner_rounding(self):
        o = opening(sq(), 0.3)
        assert o.radius == 0.3
        assert rounded_area(o) == pytest.approx(1 - (4 - math.pi) * 0.09, rel=1e-12)

    def test_square_inscribed_ball(self):
        o = opening(sq(), 0.5)
        assert len(o.kernel) == 1
        assert np.allclose(o.kernel.vertices[0], (0.5, 0.5))
        assert o.radius == 0.5

    def test_below_radius_is_identity(self):
        s = sq(0.2)
        assert hausdorff(opening(s, 0.1), s) == 0.0

    def test_subset_and_idempotent(self, rng):
        for _ in range(20):
            s = random_rounded_set(rng)
            rho = float(rng.random() * 0.8 + 0.05)
            o = opening(s, rho)
            if o.is_empty:
                continue
            assert contains(s, o, 1e-9)
            assert hausdorff(opening(o, rho), o) <= 1e-9

    def test_monotone_in_rho(self, rng):
        for _ in range(20):
            s = random_rounded_set(rng)
            rbar, _ = inner_radius(s)
            r1, r2 = sorted(rng.random(2) * rbar * 0.98 + 1e-3)
            assert contains(opening(s, r1), opening(s, r2), 1e-9)

    def test_area_strictly_decreasing_past_radius(self):
        s = sq(0.1)
        rbar, _ = inner_radius(s)
        rhos = np.linspace(0.11, rbar, 20)
        areas = [rounded_area(opening(s, float(r))) for r in rhos]
        assert all(a1 > a2 for a1, a2 in zip(areas, areas[1:]))
        # constant plateau below the rounding radius
        assert rounded_area(opening(s, 0.05)) == rounded_area(s)


class TestInnerRadius:
    def test_square(self):
        rbar, locus = inner_radius(sq())
        assert rbar == pytest.approx(0.5, abs=1e-12)
        assert locus.half_length == 0.0
        assert (locus.center.x, locus.center.y) == pytest.approx((0.5, 0.5))

    def test_rectangle(self):
        rbar, locus = inner_radius(RoundedSet.from_polygon(RECT))
        assert rbar == pytest.approx(0.5)
        assert locus.half_length == pytest.approx(0.5)
        assert (locus.center.x, locus.center.y) == pytest.approx((1.0, 0.5))
        assert abs(locus.direction.x) == pytest.approx(1.0)

    def test_additive_under_dilation(self, rng):
        assert inner_radius(sq(0.25))[0] == pytest.approx(0.75)
        for _ in range(20):
            s = random_rounded_set(rng)
            t = float(rng.random())
            assert inner_radius(dilate(s, t))[0] == pytest.approx(
                inner_radius(s)[0] + t, abs=1e-12
            )

    def test_inscribed_balls_fit(self, rng):
        for _ in range(20):
            s = random_rounded_set(rng)
            rbar, locus = inner_radius(s)
            e = np.array(locus.direction)
            c = np.array(locus.center)
            for sign in (-1.0, 1.0):
                ball = RoundedSet.ball(c + sign * locus.half_length * e, rbar)
                assert contains(s, ball, 1e-9)

    def test_empty_raises(self):
        with pytest.raises(EmptySetError):
            inner_radius(RoundedSet.empty())


class TestDuality:
    def test_gap_small_everywhere(self, rng):
        for _ in range(20):
            s = random_rounded_set(rng)
            assert duality_gap(s, float(rng.random() * 3 + 0.01)) <= 1e-9

    def test_square_large_radius(self):
        assert duality_gap(sq(), 10.0) <= 1e-9

    def test_ball(self):
        assert duality_gap(RoundedSet.ball((0, 0), 1.0), 0.1) == 0.0

    def test_adjunction(self, rng):
        for _ in range(20):
            s = random_rounded_set(rng)
            r = float(rng.random() + 0.05)
            assert contains(s, dilate(erode(s, r), r), 1e-9)
            assert contains(erode(dilate(s, r), r), s, 1e-9)


class TestErosionProfile:
    def test_matches_direct_erosion(self, rng):
        for _ in range(10):
            s = random_rounded_set(rng, max_radius=0.0)
            prof = ErosionProfile(s.kernel)
            for d in np.linspace(0, prof.d_max * 0.999, 7):
                e = polygon_erode(s.kernel, float(d))
                assert prof.area_at(float(d)) == pytest.approx(
                    polygon_area(e), abs=1e-10
                )
                assert prof.perimeter_at(float(d)) == pytest.approx(
                    polygon_perimeter(e), abs=1e-10
                )
