"""Rational plane geometry for the n-gon embedding.

Vertices of the regular n-gon are stored as Fractions obtained by rounding
sin/cos at 48 fractional bits, symmetrized so that the reflection a -> n-a
and (for even n) the antipode a -> a+n/2 act exactly.  All orientation and
sorting decisions are exact rational arithmetic on these coordinates; the
rounding error (~1e-14) is far below the geometric gaps of the embeddings
used here (n <= 24), so sign decisions agree with the ideal n-gon.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Point = tuple[Fraction, Fraction]

_SCALE = 1 << 48

# Collision detection threshold: genuinely distinct vertex sums of the
# ideal n-gon are separated by much more than this for the sizes in play.
COLLISION_EPS = Fraction(1, 1 << 20)


def _round(x: float) -> Fraction:
    return Fraction(round(x * _SCALE), _SCALE)


@lru_cache(maxsize=None)
def ngon(n: int) -> tuple[Point, ...]:
    """Vertices v_1..v_n of the unit n-gon, labelled clockwise from north.

    v_a sits at compass angle 2*pi*a/n, i.e. increasing labels run
    clockwise; v_n is at the top of the circle.  Only one arc is rounded
    from floats; the rest is produced by exact reflections, so a -> n-a
    mirrors coordinates exactly and (for even n) antipodes cancel exactly.
    """
    pts: list[Point | None] = [None] * n
    if n % 2 == 0:
        half = n // 2
        quarter = half // 2
        for a in range(quarter + 1):
            theta = 2.0 * math.pi * a / n
            pts[a] = (_round(math.sin(theta)), _round(math.cos(theta)))
        for a in range(quarter + 1, half + 1):
            x, y = pts[half - a]
            pts[a] = (x, -y)
        for a in range(half + 1, n):
            x, y = pts[a - half]
            pts[a] = (-x, -y)
    else:
        half = (n - 1) // 2
        for a in range(half + 1):
            theta = 2.0 * math.pi * a / n
            pts[a] = (_round(math.sin(theta)), _round(math.cos(theta)))
        for a in range(half + 1, n):
            x, y = pts[n - a]
            pts[a] = (-x, y)
    return tuple(pts[a % n] for a in range(1, n + 1))


def vertex(a: int, n: int) -> Point:
    """v_a for a in 1..n."""
    return ngon(n)[(a - 1) % n]


def point_sum(residues, n: int) -> Point:
    x = Fraction(0)
    y = Fraction(0)
    for a in residues:
        vx, vy = vertex(a, n)
        x += vx
        y += vy
    return (x, y)


def close(p: Point, q: Point, eps: Fraction = COLLISION_EPS) -> bool:
    return abs(p[0] - q[0]) < eps and abs(p[1] - q[1]) < eps


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area(points: list[Point]) -> Fraction:
    """Shoelace area; positive for counterclockwise polygons (y up)."""
    total = Fraction(0)
    m = len(points)
    for i in range(m):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % m]
        total += x0 * y1 - x1 * y0
    return total / 2


def angle_key(center: Point, p: Point):
    """Sort key giving counterclockwise order around center, starting at
    the positive x axis.  Exact: half-plane index then cross products."""
    dx = p[0] - center[0]
    dy = p[1] - center[1]
    if dy > 0 or (dy == 0 and dx > 0):
        half = 0
    else:
        half = 1
    return (half, _AngleInHalf(dx, dy))


class _AngleInHalf:
    """Comparable wrapper: within one half-plane, ccw order is by cross product."""

    __slots__ = ("dx", "dy")

    def __init__(self, dx: Fraction, dy: Fraction):
        self.dx = dx
        self.dy = dy

    def __lt__(self, other: "_AngleInHalf") -> bool:
        return self.dx * other.dy - self.dy * other.dx > 0

    def __eq__(self, other) -> bool:
        return self.dx * other.dy - self.dy * other.dx == 0


def sort_ccw(center: Point, items, key=lambda item: item):
    """Sort items whose positions (via key) wind counterclockwise around center."""
    return sorted(items, key=lambda item: angle_key(center, key(item)))


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper interior crossing of two closed segments with distinct endpoints."""
    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and 0 not in (d1, d2, d3, d4)
