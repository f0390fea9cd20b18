"""Scalar 2-D geometry shared by covers and objects.

Coordinates are pixels; y grows downward (screen convention), so "top"
means the smaller y. Points are plain ``(x, y)`` tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]


def dist(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def segment_distance(pt: Point, p1: Point, p2: Point) -> float:
    """Distance from pt to the closed segment p1-p2 (coincident ends allowed)."""
    vx, vy = p2[0] - p1[0], p2[1] - p1[1]
    wx, wy = pt[0] - p1[0], pt[1] - p1[1]
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return math.hypot(wx, wy)
    t = (wx * vx + wy * vy) / vv
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(wx - t * vx, wy - t * vy)


def turn(a: Point, b: Point, c: Point) -> float:
    """Cross product of (b - a) x (c - b); sign gives the turn direction at b."""
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])


def signed_area(points) -> float:
    """Shoelace area; positive for counterclockwise winding."""
    total = 0.0
    n = len(points)
    for i in range(n):
        ax, ay = points[i]
        bx, by = points[(i + 1) % n]
        total += ax * by - bx * ay
    return 0.5 * total


def rotate_point(pt: Point, pivot: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = pt[0] - pivot[0], pt[1] - pivot[1]
    return (pivot[0] + c * dx - s * dy, pivot[1] + s * dx + c * dy)


def translate(pt: Point, dx: float, dy: float) -> Point:
    return (pt[0] + dx, pt[1] + dy)


@dataclass
class Rect:
    """Mutable axis-aligned rectangle: origin (x, y) plus size (w, h)."""

    x: float
    y: float
    w: float
    h: float

    @property
    def left(self) -> float:
        return self.x

    @property
    def top(self) -> float:
        return self.y

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    @property
    def center(self) -> Point:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Corner points in TL, TR, BR, BL order."""
        return (
            (self.left, self.top),
            (self.right, self.top),
            (self.right, self.bottom),
            (self.left, self.bottom),
        )

    def contains(self, pt: Point) -> bool:
        return self.left <= pt[0] <= self.right and self.top <= pt[1] <= self.bottom

    def shift(self, dx: float, dy: float) -> None:
        self.x += dx
        self.y += dy

    def copy(self) -> "Rect":
        return Rect(self.x, self.y, self.w, self.h)
