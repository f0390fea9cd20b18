"""Sensitive-area covers.

A cover is an ordered sequence of nodes; the order IS the hit-test priority
(first containing node wins). Nodes come in three shapes: circles, strictly
convex polygons, and strips (capsules: a segment dilated by a radius). A
transparent node makes the whole owning object yield the pick to whatever
lies beneath it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadCountError,
    BadDimensionsError,
    BadRadiiError,
    DegenerateError,
    NonConvexError,
    TooFewPointsError,
)
from .geometry import Point, Rect, dist, segment_distance, signed_area, turn

# Area below which a polygon node is rejected as degenerate, and the
# |cross| threshold for dropping collinear apexes.
_DEGENERATE_AREA = 1e-9


class MovementType(Enum):
    """Individual movement a node allows: nothing, vertical, horizontal, free."""

    NONE = "None"
    NS = "NS"
    WE = "WE"
    ANY = "Any"


class CursorTag(Enum):
    ARROW = "Arrow"
    HAND = "Hand"
    SIZE_NS = "SizeNS"
    SIZE_WE = "SizeWE"
    SIZE_NWSE = "SizeNWSE"
    SIZE_NESW = "SizeNESW"
    SIZE_ALL = "SizeAll"


class Resizing(Enum):
    """Which rectangle sides may be dragged: none, vertical, horizontal, all."""

    NONE = "None"
    NS = "NS"
    WE = "WE"
    ANY = "Any"


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float


@dataclass(frozen=True, slots=True)
class Polygon:
    """Strictly convex apexes in counterclockwise order (use make_polygon_node)."""

    apexes: tuple[Point, ...]


@dataclass(frozen=True, slots=True)
class Strip:
    """Capsule: the segment p1-p2 dilated by radius, with semicircular caps."""

    p1: Point
    p2: Point
    radius: float


NodeShape = Circle | Polygon | Strip


@dataclass(frozen=True, slots=True)
class CoverNode:
    """One sensitive area: id equals its index within the owning cover."""

    id: int
    shape: NodeShape
    movement: MovementType = MovementType.ANY
    cursor: CursorTag = CursorTag.HAND
    transparent: bool = False


@dataclass(frozen=True, slots=True)
class Cover:
    nodes: tuple[CoverNode, ...]

    def __len__(self) -> int:
        return len(self.nodes)


class _FallThrough:
    """Sentinel: hit landed on a transparent node, the object yields the pick."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "FALL_THROUGH"


FALL_THROUGH = _FallThrough()


def shape_contains(shape: NodeShape, pt: Point) -> bool:
    """Closed containment test; boundary points count as inside."""
    if isinstance(shape, Circle):
        return dist(shape.center, pt) <= shape.radius
    if isinstance(shape, Strip):
        return segment_distance(pt, shape.p1, shape.p2) <= shape.radius
    apexes = shape.apexes
    n = len(apexes)
    x, y = pt
    for i in range(n):
        ax, ay = apexes[i]
        bx, by = apexes[(i + 1) % n]
        # counterclockwise winding: inside means never strictly right of an edge
        if (bx - ax) * (y - ay) - (by - ay) * (x - ax) < 0.0:
            return False
    return True


def node_contains(node: CoverNode, pt: Point) -> bool:
    return shape_contains(node.shape, pt)


def hit_index(cover: Cover, pt: Point):
    """Index of the first node containing pt, FALL_THROUGH if that node is
    transparent, None if no node contains pt."""
    for i, node in enumerate(cover.nodes):
        if shape_contains(node.shape, pt):
            return FALL_THROUGH if node.transparent else i
    return None


def _drop_collinear(points) -> list[Point]:
    pts = [tuple(map(float, p)) for p in points]
    # drop exact consecutive duplicates first
    dedup: list[Point] = []
    for p in pts:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    changed = True
    while changed and len(dedup) >= 3:
        changed = False
        for i in range(len(dedup)):
            a = dedup[i - 1]
            b = dedup[i]
            c = dedup[(i + 1) % len(dedup)]
            if abs(turn(a, b, c)) <= _DEGENERATE_AREA:
                del dedup[i]
                changed = True
                break
    return dedup


def make_polygon_node(
    node_id: int,
    apexes,
    movement: MovementType = MovementType.ANY,
    cursor: CursorTag = CursorTag.SIZE_ALL,
    transparent: bool = False,
) -> CoverNode:
    """Build a convex polygon node; winding is normalized to counterclockwise.

    Raises NonConvexError on a reflex apex, DegenerateError when the cleaned
    polygon has fewer than three apexes or (nearly) zero area.
    """
    pts = _drop_collinear(apexes)
    if len(pts) < 3:
        raise DegenerateError(f"polygon collapses to {len(pts)} apex(es)")
    signs = 0
    n = len(pts)
    for i in range(n):
        t = turn(pts[i - 1], pts[i], pts[(i + 1) % n])
        signs |= 1 if t > 0.0 else 2
    if signs == 3:
        raise NonConvexError("polygon apexes contain a reflex corner")
    area = signed_area(pts)
    if abs(area) < _DEGENERATE_AREA:
        raise DegenerateError("polygon area below threshold")
    if area < 0.0:
        pts.reverse()
    return CoverNode(node_id, Polygon(tuple(pts)), movement, cursor, transparent)


def make_circle_node(
    node_id: int,
    center: Point,
    radius: float,
    movement: MovementType = MovementType.ANY,
    cursor: CursorTag = CursorTag.HAND,
    transparent: bool = False,
) -> CoverNode:
    if radius <= 0.0:
        raise BadRadiiError("circle node radius must be positive")
    return CoverNode(node_id, Circle((float(center[0]), float(center[1])), float(radius)),
                     movement, cursor, transparent)


def make_strip_node(
    node_id: int,
    p1: Point,
    p2: Point,
    radius: float,
    movement: MovementType = MovementType.ANY,
    cursor: CursorTag = CursorTag.SIZE_ALL,
) -> CoverNode:
    if radius <= 0.0:
        raise BadRadiiError("strip node radius must be positive")
    return CoverNode(
        node_id,
        Strip((float(p1[0]), float(p1[1])), (float(p2[0]), float(p2[1])), float(radius)),
        movement,
        cursor,
    )


def _rect_apexes(left: float, top: float, right: float, bottom: float):
    return ((left, top), (right, top), (right, bottom), (left, bottom))


_CORNER_CURSORS = {
    "tl": CursorTag.SIZE_NWSE,
    "br": CursorTag.SIZE_NWSE,
    "tr": CursorTag.SIZE_NESW,
    "bl": CursorTag.SIZE_NESW,
}


def rectangle_cover(rect: Rect, resizing: Resizing, corner_radius: float, half_width: float) -> Cover:
    """Standard rectangle cover.

    Node order is fixed so ids stay meaningful to moveNode: for full
    resizing, 4 corner circles (TL, TR, BR, BL), then 4 side rectangles
    (top, bottom, left, right), then the body polygon. NS keeps only the
    top/bottom sides, WE only left/right, and a non-resizable rectangle is
    just its body. Side nodes span the full side and overlap the corner
    circles; priority order resolves the overlap.
    """
    if not (rect.w > 2.0 * half_width and rect.h > 2.0 * half_width):
        raise BadDimensionsError("rectangle too small for its side node width")
    if corner_radius < half_width:
        raise BadDimensionsError("corner radius must be at least the side half-width")
    l, t, r, b = rect.left, rect.top, rect.right, rect.bottom
    nodes: list[CoverNode] = []

    def corner(tag: str, cx: float, cy: float) -> None:
        nodes.append(make_circle_node(len(nodes), (cx, cy), corner_radius,
                                      MovementType.ANY, _CORNER_CURSORS[tag]))

    def side(which: str) -> None:
        if which == "top":
            apexes = _rect_apexes(l, t - half_width, r, t + half_width)
        elif which == "bottom":
            apexes = _rect_apexes(l, b - half_width, r, b + half_width)
        elif which == "left":
            apexes = _rect_apexes(l - half_width, t, l + half_width, b)
        else:
            apexes = _rect_apexes(r - half_width, t, r + half_width, b)
        vertical = which in ("top", "bottom")
        nodes.append(make_polygon_node(
            len(nodes), apexes,
            MovementType.NS if vertical else MovementType.WE,
            CursorTag.SIZE_NS if vertical else CursorTag.SIZE_WE,
        ))

    if resizing is Resizing.ANY:
        corner("tl", l, t)
        corner("tr", r, t)
        corner("br", r, b)
        corner("bl", l, b)
        for which in ("top", "bottom", "left", "right"):
            side(which)
    elif resizing is Resizing.NS:
        side("top")
        side("bottom")
    elif resizing is Resizing.WE:
        side("left")
        side("right")
    nodes.append(make_polygon_node(len(nodes), _rect_apexes(l, t, r, b),
                                   MovementType.ANY, CursorTag.SIZE_ALL))
    return Cover(tuple(nodes))


def loop_cover(points, node_radius: float, half_width: float) -> Cover:
    """Cover for a closed loop of points: N circles on the points, then N
    strips on the consecutive segments (including the closing one)."""
    pts = [tuple(map(float, p)) for p in points]
    if len(pts) < 2:
        raise TooFewPointsError("a loop needs at least two points")
    nodes: list[CoverNode] = []
    for p in pts:
        nodes.append(make_circle_node(len(nodes), p, node_radius,
                                      MovementType.ANY, CursorTag.HAND))
    n = len(pts)
    for i in range(n):
        nodes.append(make_strip_node(len(nodes), pts[i], pts[(i + 1) % n], half_width,
                                     MovementType.ANY, CursorTag.SIZE_ALL))
    return Cover(tuple(nodes))


def border_circle_count(radius: float, node_radius: float) -> int:
    """Circles needed to cover a border of the given radius gap-free when
    consecutive centers are spaced node_radius apart along the arc."""
    return int(math.ceil(2.0 * math.pi * radius / node_radius))


def annulus_cover(
    center: Point,
    r_outer: float,
    r_inner: float,
    node_radius: float,
    counts: tuple[int, int] | None = None,
) -> Cover:
    """Many-circle cover for a ring: circles along the outer border, circles
    along the inner border, then quadrilateral sectors between the borders.

    Center spacing along each border equals node_radius, so consecutive
    circles overlap by at least half. `counts` pins (outer, inner) circle
    counts for callers that freeze the layout during a drag.
    """
    if not (r_outer > r_inner + node_radius):
        raise BadRadiiError("outer radius must exceed inner radius by the node radius")
    if not (r_inner > node_radius):
        raise BadRadiiError("inner radius must exceed the node radius")
    return annulus_nodes(center, r_outer, r_inner, node_radius, counts)


def annulus_nodes(
    center: Point,
    r_outer: float,
    r_inner: float,
    node_radius: float,
    counts: tuple[int, int] | None = None,
) -> Cover:
    """annulus_cover without the constructor preconditions: ring objects may
    legitimately be squeezed to a border gap smaller than the node radius."""
    if not (r_outer > r_inner > 0.0):
        raise BadRadiiError("annulus radii must satisfy r_outer > r_inner > 0")
    cx, cy = float(center[0]), float(center[1])
    if counts is None:
        k_out = border_circle_count(r_outer, node_radius)
        k_in = border_circle_count(r_inner, node_radius)
    else:
        k_out, k_in = counts

    out_angles = [2.0 * math.pi * k / k_out for k in range(k_out + 1)]
    in_angles = [2.0 * math.pi * k / k_in for k in range(k_in)]
    outer_pts = [(cx + r_outer * math.cos(a), cy + r_outer * math.sin(a)) for a in out_angles]
    # sector quads reuse the outer angular grid on the inner radius
    inner_grid = [(cx + r_inner * math.cos(a), cy + r_inner * math.sin(a)) for a in out_angles]

    nodes: list[CoverNode] = []
    for pt in outer_pts[:-1]:
        nodes.append(CoverNode(len(nodes), Circle(pt, node_radius),
                               MovementType.ANY, CursorTag.HAND))
    for a in in_angles:
        nodes.append(CoverNode(len(nodes), Circle((cx + r_inner * math.cos(a),
                                                   cy + r_inner * math.sin(a)), node_radius),
                               MovementType.ANY, CursorTag.HAND))
    for k in range(k_out):
        # counterclockwise by construction (angles increase), strictly convex
        # for any k_out >= 7, which the count formula guarantees; skipping the
        # general polygon validation keeps drag-time rebuilds cheap
        quad = (inner_grid[k], outer_pts[k], outer_pts[k + 1], inner_grid[k + 1])
        nodes.append(CoverNode(len(nodes), Polygon(quad),
                               MovementType.ANY, CursorTag.SIZE_ALL))
    return Cover(tuple(nodes))


def regular_apexes(n: int, center: Point, circumradius: float, phase: float = 0.0) -> tuple[Point, ...]:
    """Apexes of a regular n-gon: center + R * (cos(phase + 2*pi*k/n), sin(...))."""
    if n < 3:
        raise BadCountError("a regular polygon needs at least three apexes")
    if circumradius <= 0.0:
        raise BadRadiiError("circumradius must be positive")
    cx, cy = float(center[0]), float(center[1])
    step = 2.0 * math.pi / n
    return tuple(
        (cx + circumradius * math.cos(phase + step * k),
         cy + circumradius * math.sin(phase + step * k))
        for k in range(n)
    )


def translate_shape(shape: NodeShape, dx: float, dy: float) -> NodeShape:
    if isinstance(shape, Circle):
        return Circle((shape.center[0] + dx, shape.center[1] + dy), shape.radius)
    if isinstance(shape, Strip):
        return Strip((shape.p1[0] + dx, shape.p1[1] + dy),
                     (shape.p2[0] + dx, shape.p2[1] + dy), shape.radius)
    return Polygon(tuple((x + dx, y + dy) for x, y in shape.apexes))


def translate_cover(cover: Cover, dx: float, dy: float) -> Cover:
    return Cover(tuple(
        CoverNode(n.id, translate_shape(n.shape, dx, dy), n.movement, n.cursor, n.transparent)
        for n in cover.nodes
    ))


def shape_bounds(shape: NodeShape) -> tuple[float, float, float, float]:
    if isinstance(shape, Circle):
        cx, cy = shape.center
        return (cx - shape.radius, cy - shape.radius, cx + shape.radius, cy + shape.radius)
    if isinstance(shape, Strip):
        xs = (shape.p1[0], shape.p2[0])
        ys = (shape.p1[1], shape.p2[1])
        return (min(xs) - shape.radius, min(ys) - shape.radius,
                max(xs) + shape.radius, max(ys) + shape.radius)
    xs = [p[0] for p in shape.apexes]
    ys = [p[1] for p in shape.apexes]
    return (min(xs), min(ys), max(xs), max(ys))


def cover_bounds(cover: Cover) -> tuple[float, float, float, float] | None:
    if not cover.nodes:
        return None
    boxes = [shape_bounds(n.shape) for n in cover.nodes]
    return (min(b[0] for b in boxes), min(b[1] for b in boxes),
            max(b[2] for b in boxes), max(b[3] for b in boxes))
