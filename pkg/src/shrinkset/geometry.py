"""Disk-rounded convex polygons and their exact measurements.

Every set handled by the library is a ``RoundedSet``: a convex polygonal
kernel Minkowski-summed with a closed disk.  Kernels may be degenerate
(empty, a point, or a segment), which makes balls and stadiums ordinary
members of the same family instead of special cases.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import EmptySetError

# Relative tolerances for canonicalization (see ConvexPolygon).
MERGE_REL_TOL = 1e-12
COLLINEAR_REL_TOL = 1e-12

# Number of uniformly spaced angles added to the exact kernel normals when
# comparing support functions.
SUPPORT_GRID = 1024


class Point2(NamedTuple):
    x: float
    y: float


def cross2(a, b) -> np.ndarray:
    """z-component of the 2D cross product (vectorized)."""
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _bbox_scale(v: np.ndarray) -> float:
    """Cheap diameter proxy used to make tolerances scale-invariant."""
    if len(v) == 0:
        return 0.0
    span = v.max(axis=0) - v.min(axis=0)
    return float(math.hypot(span[0], span[1]))


def _merge_close(v: np.ndarray, tol: float) -> np.ndarray:
    """Merge cyclically-consecutive vertices closer than tol."""
    kept = []
    for p in v:
        if not kept or math.hypot(p[0] - kept[-1][0], p[1] - kept[-1][1]) > tol:
            kept.append(p)
    # wraparound
    while len(kept) > 1 and math.hypot(
        kept[0][0] - kept[-1][0], kept[0][1] - kept[-1][1]
    ) <= tol:
        kept.pop()
    return np.array(kept, float).reshape(-1, 2)


def _collinear_extremes(v: np.ndarray) -> np.ndarray:
    """Reduce a set of (nearly) collinear points to its extreme pair."""
    direction = v[np.argmax(np.linalg.norm(v - v[0], axis=1))] - v[0]
    norm = np.linalg.norm(direction)
    if norm == 0.0:
        return v[:1].copy()
    s = (v - v[0]) @ (direction / norm)
    return np.array([v[np.argmin(s)], v[np.argmax(s)]], float)


class ConvexPolygon:
    """Counterclockwise convex polygon; 0, 1 or 2 vertices mean empty /
    point / segment.

    Construction canonicalizes: vertices closer than 1e-12 of the diameter
    are merged and collinear vertices are dropped, so near-degenerate
    erosion outputs collapse to their true shape.
    """

    __slots__ = ("vertices", "_profile")

    def __init__(self, vertices):
        v = np.asarray(vertices, float).reshape(-1, 2)
        if not np.all(np.isfinite(v)):
            raise ValueError("vertices must be finite")
        v = self._canonicalize(v)
        v.setflags(write=False)
        self.vertices = v
        self._profile = None  # lazily filled by morphology

    @staticmethod
    def _canonicalize(v: np.ndarray) -> np.ndarray:
        if len(v) <= 1:
            return v.copy()
        scale = _bbox_scale(v)
        if scale == 0.0:
            return v[:1].copy()
        v = _merge_close(v, MERGE_REL_TOL * scale)
        if len(v) <= 2:
            return v
        area2 = float(cross2(v, np.roll(v, -1, axis=0)).sum())
        if area2 < 0:
            v = v[::-1].copy()
        cross_tol = COLLINEAR_REL_TOL * scale * scale
        # a globally collinear point set is a segment, not a thin polygon
        dvec = v - v[0]
        axis = dvec[np.argmax((dvec * dvec).sum(axis=1))]
        if np.all(np.abs(cross2(dvec, axis)) <= cross_tol):
            return _collinear_extremes(v)
        merged = v
        # drop collinear vertices until stable
        changed = True
        while changed and len(v) >= 3:
            prev = np.roll(v, 1, axis=0)
            nxt = np.roll(v, -1, axis=0)
            cr = cross2(v - prev, nxt - v)
            if np.any(cr < -cross_tol):
                raise ValueError("vertices do not describe a convex polygon")
            keep = cr > cross_tol
            changed = not keep.all()
            v = v[keep]
        if len(v) < 3:
            return _collinear_extremes(merged)
        return v

    # -- constructors ---------------------------------------------------

    @classmethod
    def empty(cls) -> "ConvexPolygon":
        return cls(np.zeros((0, 2)))

    @classmethod
    def point(cls, p) -> "ConvexPolygon":
        return cls(np.asarray(p, float).reshape(1, 2))

    @classmethod
    def segment(cls, p, q) -> "ConvexPolygon":
        return cls(np.array([p, q], float))

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({self.vertices.tolist()!r})"

    @property
    def diameter(self) -> float:
        v = self.vertices
        if len(v) <= 1:
            return 0.0
        d = v[:, None, :] - v[None, :, :]
        return float(np.sqrt((d * d).sum(-1)).max())

    def edge_normals(self) -> np.ndarray:
        """Unit outward normals, one per edge (both directions for a segment)."""
        v = self.vertices
        if len(v) == 2:
            d = v[1] - v[0]
            n = np.array([d[1], -d[0]]) / np.linalg.norm(d)
            return np.array([n, -n])
        if len(v) < 3:
            return np.zeros((0, 2))
        d = np.roll(v, -1, axis=0) - v
        n = np.stack([d[:, 1], -d[:, 0]], axis=1)
        return n / np.linalg.norm(n, axis=1, keepdims=True)

    def exterior_angles(self) -> np.ndarray:
        """Turning angle at each vertex, in (0, pi); degenerate kernels give
        pi per endpoint (segment) or 2*pi (point)."""
        v = self.vertices
        if len(v) == 0:
            return np.zeros(0)
        if len(v) == 1:
            return np.array([2.0 * math.pi])
        if len(v) == 2:
            return np.array([math.pi, math.pi])
        n = self.edge_normals()
        nprev = np.roll(n, 1, axis=0)
        return np.arctan2(cross2(nprev, n), (nprev * n).sum(axis=1))


def polygon_area(p: ConvexPolygon) -> float:
    """Shoelace area; 0 for degenerate polygons."""
    v = p.vertices
    if len(v) < 3:
        return 0.0
    return 0.5 * float(cross2(v, np.roll(v, -1, axis=0)).sum())


def polygon_perimeter(p: ConvexPolygon) -> float:
    """Boundary length.  A segment counts twice its length (the boundary is
    traversed on both sides), which keeps the Steiner formulas exact for
    stadiums."""
    v = p.vertices
    if len(v) < 2:
        return 0.0
    if len(v) == 2:
        return 2.0 * float(np.linalg.norm(v[1] - v[0]))
    return float(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1).sum())


def polygon_centroid(p: ConvexPolygon) -> np.ndarray:
    v = p.vertices
    if len(v) == 0:
        raise EmptySetError("centroid of empty polygon")
    if len(v) < 3:
        return v.mean(axis=0)
    nxt = np.roll(v, -1, axis=0)
    cr = cross2(v, nxt)
    return (v + nxt).T @ cr / (3.0 * cr.sum())


class RoundedSet:
    """A convex kernel polygon dilated by a disk of radius >= 0."""

    __slots__ = ("kernel", "radius")

    def __init__(self, kernel: ConvexPolygon, radius: float):
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        self.kernel = kernel
        self.radius = float(radius)

    @classmethod
    def empty(cls) -> "RoundedSet":
        return cls(ConvexPolygon.empty(), 0.0)

    @classmethod
    def ball(cls, center, radius: float) -> "RoundedSet":
        return cls(ConvexPolygon.point(center), radius)

    @classmethod
    def stadium(cls, p, q, radius: float) -> "RoundedSet":
        return cls(ConvexPolygon.segment(p, q), radius)

    @classmethod
    def from_polygon(cls, vertices, radius: float = 0.0) -> "RoundedSet":
        return cls(ConvexPolygon(vertices), radius)

    @property
    def is_empty(self) -> bool:
        return len(self.kernel) == 0

    @property
    def diameter(self) -> float:
        return self.kernel.diameter + 2.0 * self.radius

    def __repr__(self) -> str:
        return f"RoundedSet(kernel={self.kernel!r}, radius={self.radius!r})"


def rounded_area(s: RoundedSet) -> float:
    """Steiner formula: kernel area + r * kernel perimeter + pi r^2."""
    if s.is_empty:
        return 0.0
    return (
        polygon_area(s.kernel)
        + s.radius * polygon_perimeter(s.kernel)
        + math.pi * s.radius**2
    )


def rounded_perimeter(s: RoundedSet) -> float:
    """Kernel perimeter plus one full turn of arcs (2 pi r)."""
    if s.is_empty:
        return 0.0
    return polygon_perimeter(s.kernel) + 2.0 * math.pi * s.radius


def boundary_pieces(s: RoundedSet):
    """Decompose the boundary into straight edges and circular arcs.

    Returns a list of ("seg", p0, p1) and ("arc", center, r, a0, a1) items
    with a0 < a1; arcs are centered at kernel vertices.
    """
    if s.is_empty:
        return []
    v = s.kernel.vertices
    r = s.radius
    pieces = []
    if len(v) == 1:
        if r > 0:
            pieces.append(("arc", v[0], r, 0.0, 2.0 * math.pi))
        return pieces
    normals = s.kernel.edge_normals()
    if len(v) == 2:
        # edges v0->v1 (normal n) and v1->v0 (normal -n), arcs of pi between
        n = normals[0]
        pieces.append(("seg", v[0] + r * n, v[1] + r * n))
        a0 = math.atan2(n[1], n[0])
        if r > 0:
            pieces.append(("arc", v[1], r, a0, a0 + math.pi))
        pieces.append(("seg", v[1] - r * n, v[0] - r * n))
        if r > 0:
            pieces.append(("arc", v[0], r, a0 + math.pi, a0 + 2.0 * math.pi))
        return pieces
    nxt = np.roll(v, -1, axis=0)
    for i in range(len(v)):
        n = normals[i]
        pieces.append(("seg", v[i] + r * n, nxt[i] + r * n))
        if r > 0:
            n2 = normals[(i + 1) % len(v)]
            a0 = math.atan2(n[1], n[0])
            turn = math.atan2(float(cross2(n, n2)), float(np.dot(n, n2)))
            pieces.append(("arc", nxt[i], r, a0, a0 + turn))
    return pieces


def rounded_centroid(s: RoundedSet) -> Point2:
    """Area-weighted centroid from the exact decomposition into the kernel,
    edge strips, and vertex sectors."""
    if s.is_empty:
        raise EmptySetError("centroid of empty set")
    v = s.kernel.vertices
    r = s.radius
    if r == 0.0 and len(v) < 3:
        c = v.mean(axis=0)
        return Point2(float(c[0]), float(c[1]))
    total_area = 0.0
    moment = np.zeros(2)
    if len(v) >= 3:
        a = polygon_area(s.kernel)
        total_area += a
        moment += a * polygon_centroid(s.kernel)
    # edge strips
    if len(v) >= 2:
        normals = s.kernel.edge_normals()
        if len(v) == 2:
            edge_list = [(v[0], v[1], normals[0]), (v[1], v[0], normals[1])]
        else:
            nxt = np.roll(v, -1, axis=0)
            edge_list = [(v[i], nxt[i], normals[i]) for i in range(len(v))]
        for p0, p1, n in edge_list:
            length = float(np.linalg.norm(p1 - p0))
            a = length * r
            total_area += a
            moment += a * (0.5 * (p0 + p1) + 0.5 * r * n)
    # vertex sectors
    angles = s.kernel.exterior_angles()
    if len(v) == 1:
        starts = np.zeros(1)
    elif len(v) == 2:
        n = s.kernel.edge_normals()[0]
        a0 = math.atan2(n[1], n[0])
        starts = np.array([a0 + math.pi, a0])  # sector at v[0], then v[1]
    else:
        n = s.kernel.edge_normals()
        nprev = np.roll(n, 1, axis=0)
        starts = np.arctan2(nprev[:, 1], nprev[:, 0])
    for i in range(len(v)):
        theta = float(angles[i])
        if theta <= 0:
            continue
        a = 0.5 * theta * r * r
        bis = starts[i] + 0.5 * theta
        dist = (4.0 * r * math.sin(0.5 * theta)) / (3.0 * theta)
        total_area += a
        moment += a * (v[i] + dist * np.array([math.cos(bis), math.sin(bis)]))
    c = moment / total_area
    return Point2(float(c[0]), float(c[1]))


def support(s: RoundedSet, theta: float) -> float:
    """Support function h(theta) = max over the set of p . (cos, sin)."""
    if s.is_empty:
        raise EmptySetError("support of empty set")
    u = np.array([math.cos(theta), math.sin(theta)])
    return float((s.kernel.vertices @ u).max()) + s.radius


def _support_values(s: RoundedSet, dirs: np.ndarray) -> np.ndarray:
    return (s.kernel.vertices @ dirs.T).max(axis=0) + s.radius


def _probe_directions(a: RoundedSet, b: RoundedSet, grid: int) -> np.ndarray:
    angles = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    dirs = [np.stack([np.cos(angles), np.sin(angles)], axis=1)]
    for s in (a, b):
        n = s.kernel.edge_normals()
        if len(n):
            dirs.append(n)
    return np.concatenate(dirs)


def contains(a: RoundedSet, b: RoundedSet, tol: float, grid: int = SUPPORT_GRID) -> bool:
    """b subset of a, up to tol, tested on support functions at the kernels'
    edge normals plus a uniform angular grid."""
    if b.is_empty:
        return True
    if a.is_empty:
        return False
    dirs = _probe_directions(a, b, grid)
    return bool(np.all(_support_values(b, dirs) <= _support_values(a, dirs) + tol))


def hausdorff(a: RoundedSet, b: RoundedSet, grid: int = SUPPORT_GRID) -> float:
    """Hausdorff distance of convex bodies: sup-norm of the support gap,
    sampled at kernel normals plus a uniform angular grid."""
    if a.is_empty or b.is_empty:
        raise EmptySetError("hausdorff of empty set")
    dirs = _probe_directions(a, b, grid)
    return float(np.abs(_support_values(a, dirs) - _support_values(b, dirs)).max())


def _segment_length_in_disk(p0, p1, center, r) -> float:
    d = p1 - p0
    length = float(np.linalg.norm(d))
    if length == 0.0:
        return 0.0
    f = p0 - center
    a = length * length
    b = 2.0 * float(f @ d)
    c = float(f @ f) - r * r
    disc = b * b - 4.0 * a * c
    if disc <= 0.0:
        return 0.0
    sq = math.sqrt(disc)
    t0 = max(0.0, (-b - sq) / (2.0 * a))
    t1 = min(1.0, (-b + sq) / (2.0 * a))
    return max(0.0, t1 - t0) * length


def _arc_length_in_disk(c, rho, a0, a1, center, r) -> float:
    d = np.asarray(center, float) - c
    dist = float(np.linalg.norm(d))
    if dist == 0.0:
        return (a1 - a0) * rho if rho <= r else 0.0
    # point on arc inside disk iff cos(phi - psi) >= q
    q = (rho * rho + dist * dist - r * r) / (2.0 * rho * dist)
    if q <= -1.0:
        return (a1 - a0) * rho
    if q >= 1.0:
        return 0.0
    psi = math.atan2(d[1], d[0])
    half = math.acos(q)
    lo, hi = psi - half, psi + half
    total = 0.0
    for k in (-1, 0, 1, 2):
        s = max(a0, lo + 2.0 * math.pi * k)
        e = min(a1, hi + 2.0 * math.pi * k)
        if e > s:
            total += e - s
    return total * rho


def boundary_length_in_disk(s: RoundedSet, center, r: float) -> float:
    """Exact length of the part of the boundary of s inside the disk
    B_r(center) (segment/arc vs circle clipping)."""
    center = np.asarray(center, float)
    total = 0.0
    for piece in boundary_pieces(s):
        if piece[0] == "seg":
            total += _segment_length_in_disk(piece[1], piece[2], center, r)
        else:
            _, c, rho, a0, a1 = piece
            total += _arc_length_in_disk(c, rho, a0, a1, center, r)
    return total
