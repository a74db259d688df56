"""Triangle frame, upward ray-side intersection, and the closed-form limit angle.

The frame places the origin at the midpoint of the base, the x axis along the
base toward vertex A, and the apex B on the positive y axis.  A point on the
base is identified by its abscissa x in [-base/2, base/2]; a ray from it is
identified by its angle theta in (0, pi) measured counterclockwise from the
positive x axis, so every admissible ray points into the upper half plane.

``limit_angle`` is specific to the unit configuration (base = height = 1 with
a unit chord cutoff): it gives the total angular measure of ray directions
whose chord to the boundary is longer than 1.  General configurations go
through :mod:`trichord.directions` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateDirectionError, OutOfBaseError

SQRT5 = math.sqrt(5.0)

# Distance from the apex below which a hit is labeled APEX.  Affects the side
# label only, never the returned point or distance.
APEX_TOLERANCE = 1e-12

# Slack accepted at segment ends when testing the intersection parameter, so
# hits that land on a vertex survive roundoff.
SEGMENT_SLACK = 1e-12

Point = tuple[float, float]


class Side(Enum):
    """Part of the upper boundary an upward ray strikes."""

    AB = "AB"
    CB = "CB"
    APEX = "APEX"


@dataclass(frozen=True)
class IsoscelesTriangle:
    """Isosceles triangle with horizontal base and apex above its midpoint.

    Vertices sit at A = (base/2, 0), B = (0, height), C = (-base/2, 0).
    The unit configuration (base = height = 1) is the default of the command
    line tools and the only configuration with a closed-form limit angle.
    """

    base: float = 1.0
    height: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.base) and self.base > 0.0):
            raise ValueError(f"base must be a positive finite length, got {self.base}")
        if not (math.isfinite(self.height) and self.height > 0.0):
            raise ValueError(f"height must be a positive finite length, got {self.height}")

    def vertices(self) -> tuple[Point, Point, Point]:
        """Vertices (A, B, C): base endpoints A, C and apex B."""
        half = self.base / 2.0
        return (half, 0.0), (0.0, self.height), (-half, 0.0)

    def base_angle(self) -> float:
        """Interior angle at each base vertex, in radians."""
        return math.atan2(2.0 * self.height, self.base)


@dataclass(frozen=True)
class RayHit:
    """Where an upward ray first meets the upper boundary.

    ``distance`` is the chord length from the base point to ``point``; ``side``
    tells which side was struck, or APEX when the hit lands on the apex.
    """

    side: Side
    point: Point
    distance: float


@dataclass(frozen=True)
class LimitAngleBreakdown:
    """Angles assembling the limit angle at one base abscissa (unit configuration).

    ``hit_angle_ab`` and ``hit_angle_cb`` are the angles subtended at the two
    unit-distance boundary points on sides AB and CB; ``base_angle_a`` and
    ``base_angle_c`` are the triangle's base angles.  They combine as
    ``alpha = hit_angle_ab + hit_angle_cb + base_angle_a + base_angle_c - pi``.
    """

    hit_angle_ab: float
    hit_angle_cb: float
    base_angle_a: float
    base_angle_c: float
    alpha: float


def require_on_base(triangle: IsoscelesTriangle, x: float) -> None:
    """Raise OutOfBaseError unless x lies on the closed base interval."""
    half = triangle.base / 2.0
    if not (math.isfinite(x) and -half <= x <= half):
        raise OutOfBaseError(f"x={x} lies outside the base [{-half}, {half}]")


def side_hit(triangle: IsoscelesTriangle, x: float, theta: float) -> RayHit:
    """First intersection of the upward ray from (x, 0) with the upper sides.

    Args:
        triangle: the containing triangle.
        x: base abscissa of the ray origin, in [-base/2, base/2].
        theta: ray angle in (0, pi), from the positive x axis.

    Returns:
        RayHit naming the struck side (AB toward vertex A, CB toward vertex C,
        or APEX within ``APEX_TOLERANCE`` of the apex), the hit point, and the
        chord length.

    Raises:
        OutOfBaseError: x lies outside the base.
        DegenerateDirectionError: theta falls outside the open interval (0, pi).

    From a base endpoint, rays that do not enter the triangle meet the
    boundary at the endpoint itself: the hit degenerates to the origin with
    distance 0 on the side containing that endpoint.
    """
    require_on_base(triangle, x)
    if not (math.isfinite(theta) and 0.0 < theta < math.pi):
        raise DegenerateDirectionError(
            f"ray angle must lie strictly inside (0, pi), got {theta}"
        )

    half = triangle.base / 2.0
    a, b, c = triangle.vertices()
    dir_x, dir_y = math.cos(theta), math.sin(theta)

    best: tuple[float, Side] | None = None
    for side, e0, e1 in ((Side.AB, a, b), (Side.CB, c, b)):
        seg_x, seg_y = e1[0] - e0[0], e1[1] - e0[1]
        denom = dir_x * seg_y - dir_y * seg_x
        if denom == 0.0:
            continue  # parallel ray; the other side catches it
        w_x, w_y = e0[0] - x, e0[1]
        t = (w_x * seg_y - w_y * seg_x) / denom
        u = (dir_y * w_x - dir_x * w_y) / denom
        if t > 0.0 and -SEGMENT_SLACK <= u <= 1.0 + SEGMENT_SLACK:
            if best is None or t < best[0]:
                best = (t, side)

    if best is None:
        # Only reachable from a base endpoint with a non-entering ray.
        if x >= half:
            return RayHit(Side.AB, (x, 0.0), 0.0)
        if x <= -half:
            return RayHit(Side.CB, (x, 0.0), 0.0)
        raise RuntimeError(
            f"no boundary intersection for x={x}, theta={theta}; this should be unreachable"
        )

    t, side = best
    point = (x + t * dir_x, t * dir_y)
    if math.dist(point, b) <= APEX_TOLERANCE:
        side = Side.APEX
    return RayHit(side, point, t)


def limit_angle_components(x: float) -> LimitAngleBreakdown:
    """Decompose the unit-configuration limit angle at abscissa x.

    The two unit-distance boundary points on sides AB and CB subtend angles
    asin((1 - 2x)/sqrt(5)) and asin((1 + 2x)/sqrt(5)) below the respective
    sides; together with the two base angles atan(2) they leave an angular
    gap of ``alpha`` radians in the half-turn at (x, 0).  Rays inside that gap
    reach the boundary at distance greater than 1.

    Raises:
        OutOfBaseError: x lies outside [-1/2, 1/2].
    """
    if not (math.isfinite(x) and -0.5 <= x <= 0.5):
        raise OutOfBaseError(f"x={x} lies outside the unit base [-0.5, 0.5]")
    hit_ab = math.asin((1.0 - 2.0 * x) / SQRT5)
    hit_cb = math.asin((1.0 + 2.0 * x) / SQRT5)
    base = math.atan(2.0)
    alpha = hit_ab + hit_cb + 2.0 * base - math.pi
    return LimitAngleBreakdown(
        hit_angle_ab=hit_ab,
        hit_angle_cb=hit_cb,
        base_angle_a=base,
        base_angle_c=base,
        alpha=alpha,
    )


def limit_angle(x: float) -> float:
    """Angular measure of directions whose chord exceeds 1 (unit configuration).

    Equals asin((1-2x)/sqrt(5)) + asin((1+2x)/sqrt(5)) + 2*atan(2) - pi, which
    is 0 at x = 0 and rises to 3*atan(2) - pi at the base endpoints.

    Raises:
        OutOfBaseError: x lies outside [-1/2, 1/2].
    """
    return limit_angle_components(x).alpha
