"""Minkowski dilation, erosion, opening and inscribed-ball structure.

Erosion of a convex polygon by depth d is the intersection of its edge
half-planes moved inward by d.  Because the polygon is convex, the only
combinatorial events as d grows are edges vanishing, so the whole erosion
family can be precomputed once as a small piecewise-linear "profile".
The profile also yields the maximal erosion depth and the locus of centers
of maximal inscribed balls (a point or a segment), plus closed forms for
the area and perimeter of every eroded polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptySetError
from .geometry import (
    ConvexPolygon,
    _merge_close,
    cross2,
    Point2,
    RoundedSet,
    hausdorff,
    polygon_area,
    polygon_perimeter,
)

_DEPTH_REL_TOL = 1e-12


@dataclass(frozen=True)
class InnerBallLocus:
    """Centers of maximal inscribed balls: the segment center +- h*e,
    |h| <= half_length (half_length == 0 for a unique inscribed ball)."""

    radius: float
    center: Point2
    direction: Point2
    half_length: float


@dataclass(frozen=True)
class _Piece:
    """One combinatorial interval [d0, d1] of the erosion family."""

    d0: float
    d1: float
    vertices: np.ndarray  # polygon at depth d0
    velocities: np.ndarray  # inward vertex velocities (per unit depth)
    area0: float
    perim0: float
    tan_sum: float  # sum of tan(theta_i / 2) over exterior angles


class ErosionProfile:
    """Piecewise description of d -> erode(polygon, d) for d in [0, d_max]."""

    def __init__(self, poly: ConvexPolygon):
        if len(poly) < 3:
            raise ValueError("erosion profile needs a nondegenerate polygon")
        self.pieces: list[_Piece] = []
        scale = poly.diameter
        v = poly.vertices.copy()
        d = 0.0
        while True:
            n = len(v)
            normals = ConvexPolygon(v).edge_normals()
            nprev = np.roll(normals, 1, axis=0)
            theta = np.arctan2(cross2(nprev, normals), (nprev * normals).sum(axis=1))
            # vertex i slides so it stays on both adjacent offset lines
            w = np.empty_like(v)
            for i in range(n):
                a = np.array([nprev[i], normals[i]])
                w[i] = np.linalg.solve(a, np.ones(2))
            edges = np.roll(v, -1, axis=0) - v
            lengths = np.linalg.norm(edges, axis=1)
            units = edges / lengths[:, None]
            shrink = ((np.roll(w, -1, axis=0) - w) * units).sum(axis=1)
            with np.errstate(divide="ignore"):
                events = np.where(shrink > 1e-14, lengths / shrink, np.inf)
            step = float(events.min())
            self.pieces.append(
                _Piece(
                    d0=d,
                    d1=d + step,
                    vertices=v,
                    velocities=w,
                    area0=polygon_area(ConvexPolygon(v)),
                    perim0=polygon_perimeter(ConvexPolygon(v)),
                    tan_sum=float(np.tan(0.5 * theta).sum()),
                )
            )
            d += step
            # merge at the parent scale: a collapse event leaves clusters of
            # float noise that the polygon's own bbox tolerance cannot see
            nxt = ConvexPolygon(
                _merge_close(v - step * w, _DEPTH_REL_TOL * max(scale, 1.0))
            )
            if len(nxt) < 3:
                self.d_max = d
                self.locus = nxt
                break
            v = nxt.vertices.copy()

    def _piece_at(self, d: float) -> _Piece:
        for piece in self.pieces:
            if d <= piece.d1:
                return piece
        return self.pieces[-1]

    def polygon_at(self, d: float) -> ConvexPolygon:
        if d <= 0.0:
            return ConvexPolygon(self.pieces[0].vertices)
        if d >= self.d_max:
            return self.locus
        p = self._piece_at(d)
        return ConvexPolygon(p.vertices - (d - p.d0) * p.velocities)

    def area_at(self, d: float) -> float:
        if d >= self.d_max:
            return 0.0
        p = self._piece_at(d)
        x = d - p.d0
        return p.area0 - x * p.perim0 + x * x * p.tan_sum

    def perimeter_at(self, d: float) -> float:
        if d >= self.d_max:
            return polygon_perimeter(self.locus)
        p = self._piece_at(d)
        return p.perim0 - 2.0 * p.tan_sum * (d - p.d0)


def _profile(poly: ConvexPolygon) -> ErosionProfile:
    if poly._profile is None:
        poly._profile = ErosionProfile(poly)
    return poly._profile


def dilate(s: RoundedSet, r: float) -> RoundedSet:
    """Minkowski sum with the disk of radius r (kernel unchanged)."""
    if r < 0:
        raise ValueError("dilation radius must be nonnegative")
    if s.is_empty:
        return s
    return RoundedSet(s.kernel, s.radius + r)


def polygon_erode(poly: ConvexPolygon, d: float) -> ConvexPolygon:
    """Inward offset by d: the set of centers whose d-ball fits inside.

    The result may degenerate to a segment, a point, or the empty polygon.
    """
    if d < 0:
        raise ValueError("erosion depth must be nonnegative")
    if len(poly) < 3:
        raise ValueError("polygon_erode needs at least 3 vertices")
    prof = _profile(poly)
    tol = _DEPTH_REL_TOL * max(poly.diameter, 1.0)
    if d > prof.d_max + tol:
        return ConvexPolygon.empty()
    if d >= prof.d_max - tol:
        return prof.locus
    return prof.polygon_at(d)


def erode(s: RoundedSet, r: float) -> RoundedSet:
    """Adjoint of dilate: erode(s, r) = {x : B_r(x) inside s}."""
    if r < 0:
        raise ValueError("erosion radius must be nonnegative")
    if s.is_empty or r == 0.0:
        return s
    if r <= s.radius:
        return RoundedSet(s.kernel, s.radius - r)
    if len(s.kernel) < 3:
        # ball or stadium: nothing left of the kernel to erode into
        return RoundedSet.empty()
    return RoundedSet(polygon_erode(s.kernel, r - s.radius), 0.0)


def opening(s: RoundedSet, rho: float) -> RoundedSet:
    """Union of all rho-balls contained in s: erosion then dilation."""
    if rho <= 0:
        raise ValueError("opening radius must be positive")
    if s.is_empty:
        return s
    if rho <= s.radius:
        return s
    core = erode(s, rho)
    if core.is_empty:
        return core
    return dilate(core, rho)


def inner_radius(s: RoundedSet) -> tuple[float, InnerBallLocus]:
    """Radius of the largest inscribed ball and the locus of its centers."""
    if s.is_empty:
        raise EmptySetError("inner radius of empty set")
    if len(s.kernel) < 3:
        locus_poly = s.kernel
        depth = 0.0
    else:
        prof = _profile(s.kernel)
        locus_poly = prof.locus
        depth = prof.d_max
    rbar = s.radius + depth
    v = locus_poly.vertices
    if len(v) == 1:
        locus = InnerBallLocus(rbar, Point2(*v[0]), Point2(1.0, 0.0), 0.0)
    else:
        mid = 0.5 * (v[0] + v[1])
        e = v[1] - v[0]
        half = 0.5 * float(np.linalg.norm(e))
        e = e / (2.0 * half)
        locus = InnerBallLocus(rbar, Point2(*mid), Point2(*e), half)
    return rbar, locus


def duality_gap(s: RoundedSet, r: float) -> float:
    """Hausdorff gap of s vs erode(dilate(s, r), r); ~0 for convex sets."""
    return hausdorff(s, erode(dilate(s, r), r))
