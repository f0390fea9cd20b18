"""Moveable scene objects.

Every object honors the same three-method contract: define_cover() rebuilds
the cover from the current geometry (and returns it), move(dx, dy)
translates the whole object, and move_node(i, dx, dy, pt_mouse, button)
moves one node, returning True only when geometry actually changed. The
cover is rebuilt inside every mutating call so it is never stale.
"""

from __future__ import annotations

import itertools
import math
from enum import Enum

from .cover import (
    Cover,
    CursorTag,
    MovementType,
    Resizing,
    annulus_nodes,
    border_circle_count,
    loop_cover,
    make_circle_node,
    make_polygon_node,
    make_strip_node,
    rectangle_cover,
    regular_apexes,
)
from .errors import BadNodeIndexError, BadRadiiError
from .geometry import Point, Rect, dist, rotate_point

_MIN_LEG = 1e-9  # a rotation/zoom leg shorter than this is treated as singular


class ButtonTag(Enum):
    LEFT = "Left"
    RIGHT = "Right"


# MoveRange is just an optional Rect constraining the reference point;
# absent means unbounded.
MoveRange = Rect

_id_counters: dict[str, itertools.count] = {}


def _auto_id(kind: str) -> str:
    counter = _id_counters.setdefault(kind, itertools.count(1))
    return f"{kind}-{next(counter)}"


def rotation_delta(pivot: Point, pt_prev: Point, pt_mouse: Point) -> float | None:
    """Angle swept from pt_prev to pt_mouse about pivot; None when either leg
    is too short to define a bearing."""
    ax, ay = pt_prev[0] - pivot[0], pt_prev[1] - pivot[1]
    bx, by = pt_mouse[0] - pivot[0], pt_mouse[1] - pivot[1]
    if math.hypot(ax, ay) <= _MIN_LEG or math.hypot(bx, by) <= _MIN_LEG:
        return None
    return math.atan2(by, bx) - math.atan2(ay, ax)


def move_rect_edge(rect: Rect, edge: str, delta: float, min_w: float, min_h: float) -> bool:
    """Move one rectangle edge by delta, clamped so sizes stay at or above
    the minima; returns True when the edge actually moved."""
    if edge == "left":
        new = min(rect.left + delta, rect.right - min_w)
        if new == rect.left:
            return False
        rect.w = rect.right - new
        rect.x = new
    elif edge == "right":
        new = max(rect.right + delta, rect.left + min_w)
        if new == rect.right:
            return False
        rect.w = new - rect.left
    elif edge == "top":
        new = min(rect.top + delta, rect.bottom - min_h)
        if new == rect.top:
            return False
        rect.h = rect.bottom - new
        rect.y = new
    elif edge == "bottom":
        new = max(rect.bottom + delta, rect.top + min_h)
        if new == rect.bottom:
            return False
        rect.h = new - rect.top
    else:
        raise ValueError(f"unknown edge {edge!r}")
    return True


# node roles that move the whole object (the mover applies MoveRange
# clamping only to these)
_WHOLE_MOVE_ROLES = frozenset({"body", "segment", "triangle", "sector", "frame"})


class SceneObject:
    """Base contract for anything the mover can drag."""

    kind = "object"

    def __init__(self, object_id: str | None = None, move_range: Rect | None = None,
                 fill: str = "none"):
        self.object_id = object_id if object_id else _auto_id(self.kind)
        self.move_range = move_range
        self.fill = fill
        self.cover = Cover(())
        self._roles: tuple[tuple[str, object], ...] = ()

    # --- contract -----------------------------------------------------
    def define_cover(self) -> Cover:
        nodes, roles = self._build_cover()
        self.cover = Cover(tuple(nodes))
        self._roles = tuple(roles)
        return self.cover

    def _build_cover(self):
        raise NotImplementedError

    def move(self, dx: float, dy: float) -> None:
        raise NotImplementedError

    def move_node(self, i: int, dx: float, dy: float, pt_mouse: Point | None = None,
                  button: ButtonTag = ButtonTag.LEFT) -> bool:
        raise NotImplementedError

    # --- mover support --------------------------------------------------
    def reference_point(self) -> Point:
        raise NotImplementedError

    def node_role(self, i: int) -> tuple[str, object]:
        if not 0 <= i < len(self._roles):
            raise BadNodeIndexError(f"{self.object_id}: node {i} of {len(self._roles)}")
        return self._roles[i]

    def is_whole_move_node(self, i: int) -> bool:
        return self.node_role(i)[0] in _WHOLE_MOVE_ROLES

    def on_catch(self, i: int) -> None:
        """Called by the mover when a drag starts on node i."""

    def on_release(self) -> None:
        """Called by the mover when the drag ends; deferred recomputation."""


_RECT_ROLES = {
    Resizing.ANY: (
        ("corner", "tl"), ("corner", "tr"), ("corner", "br"), ("corner", "bl"),
        ("side", "top"), ("side", "bottom"), ("side", "left"), ("side", "right"),
        ("body", None),
    ),
    Resizing.NS: (("side", "top"), ("side", "bottom"), ("body", None)),
    Resizing.WE: (("side", "left"), ("side", "right"), ("body", None)),
    Resizing.NONE: (("body", None),),
}

_CORNER_EDGES = {"tl": ("left", "top"), "tr": ("right", "top"),
                 "br": ("right", "bottom"), "bl": ("left", "bottom")}


class RectangleObject(SceneObject):
    """Axis-aligned rectangle, resizable per its Resizing mode."""

    kind = "rectangle"

    def __init__(self, rect: Rect, resizing: Resizing = Resizing.ANY,
                 corner_radius: float = 8.0, half_width: float = 3.0,
                 min_width: float = 10.0, min_height: float = 10.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.rect = rect
        self.resizing = resizing
        self.corner_radius = float(corner_radius)
        self.half_width = float(half_width)
        self.min_width = float(min_width)
        self.min_height = float(min_height)
        self.define_cover()

    def _build_cover(self):
        cover = rectangle_cover(self.rect, self.resizing, self.corner_radius, self.half_width)
        return cover.nodes, _RECT_ROLES[self.resizing]

    def move(self, dx: float, dy: float) -> None:
        self.rect.shift(dx, dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, which = self.node_role(i)
        if role == "body":
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        moved = False
        if role == "corner":
            x_edge, y_edge = _CORNER_EDGES[which]
            moved |= move_rect_edge(self.rect, x_edge, dx, self.min_width, self.min_height)
            moved |= move_rect_edge(self.rect, y_edge, dy, self.min_width, self.min_height)
        else:  # side: only its own edge, along its own axis
            delta = dy if which in ("top", "bottom") else dx
            moved = move_rect_edge(self.rect, which, delta, self.min_width, self.min_height)
        if moved:
            self.define_cover()
        return moved

    def reference_point(self) -> Point:
        return self.rect.center


class LoopObject(SceneObject):
    """Closed loop of points: each point moves individually, any connecting
    strip moves the whole loop."""

    kind = "loop"

    def __init__(self, points, node_radius: float = 6.0, half_width: float = 3.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.points: list[Point] = [tuple(map(float, p)) for p in points]
        self.node_radius = float(node_radius)
        self.half_width = float(half_width)
        self.define_cover()

    def _build_cover(self):
        cover = loop_cover(self.points, self.node_radius, self.half_width)
        n = len(self.points)
        roles = [("point", i) for i in range(n)] + [("segment", i) for i in range(n)]
        return cover.nodes, roles

    def move(self, dx: float, dy: float) -> None:
        self.points = [(x + dx, y + dy) for x, y in self.points]
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, k = self.node_role(i)
        if dx == 0.0 and dy == 0.0:
            return False
        if role == "point":
            x, y = self.points[k]
            self.points[k] = (x + dx, y + dy)
            self.define_cover()
        else:
            self.move(dx, dy)
        return True

    def reference_point(self) -> Point:
        n = len(self.points)
        return (sum(p[0] for p in self.points) / n, sum(p[1] for p in self.points) / n)


class PolygonVariant(Enum):
    FIXED = "Fixed"
    BY_APEX = "ByApex"
    BY_BORDER = "ByBorder"


class RegularPolygonObject(SceneObject):
    """Regular polygon; depending on its variant it is nonresizable, zoomed
    by dragging any apex, or zoomed by dragging any border point."""

    kind = "regular-polygon"

    def __init__(self, center: Point, circumradius: float, n_apexes: int,
                 phase: float = 0.0, variant: PolygonVariant = PolygonVariant.BY_APEX,
                 min_radius: float = 10.0, apex_radius: float = 5.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.center = (float(center[0]), float(center[1]))
        self.circumradius = float(circumradius)
        self.n_apexes = int(n_apexes)
        self.phase = float(phase)
        self.variant = variant
        self.min_radius = float(min_radius)
        self.apex_radius = float(apex_radius)
        self.define_cover()

    @property
    def apexes(self) -> tuple[Point, ...]:
        return regular_apexes(self.n_apexes, self.center, self.circumradius, self.phase)

    def _build_cover(self):
        pts = self.apexes
        nodes = []
        roles = []
        if self.variant is PolygonVariant.BY_APEX:
            for i, p in enumerate(pts):
                nodes.append(make_circle_node(i, p, self.apex_radius,
                                              MovementType.ANY, CursorTag.HAND))
                roles.append(("apex", i))
        elif self.variant is PolygonVariant.BY_BORDER:
            for i in range(self.n_apexes):
                nodes.append(make_strip_node(i, pts[i], pts[(i + 1) % self.n_apexes],
                                             self.apex_radius, MovementType.ANY,
                                             CursorTag.HAND))
                roles.append(("edge", i))
        nodes.append(make_polygon_node(len(nodes), pts, MovementType.ANY, CursorTag.SIZE_ALL))
        roles.append(("body", None))
        return nodes, roles

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, k = self.node_role(i)
        if role == "body":
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        new_radius = self.circumradius
        if role == "apex":
            new_radius = max(dist(pt_mouse, self.center), self.min_radius)
        elif role == "edge":
            # project the mouse on the grabbed edge's outward normal (the
            # apothem direction) and rescale so the edge tracks the cursor
            pts = self.apexes
            mid = ((pts[k][0] + pts[(k + 1) % self.n_apexes][0]) / 2.0,
                   (pts[k][1] + pts[(k + 1) % self.n_apexes][1]) / 2.0)
            apothem = dist(mid, self.center)
            ux = (mid[0] - self.center[0]) / apothem
            uy = (mid[1] - self.center[1]) / apothem
            reach = (pt_mouse[0] - self.center[0]) * ux + (pt_mouse[1] - self.center[1]) * uy
            new_radius = max(reach / math.cos(math.pi / self.n_apexes), self.min_radius)
        if new_radius == self.circumradius:
            return False
        self.circumradius = new_radius
        self.define_cover()
        return True

    def reference_point(self) -> Point:
        return self.center


class ChatoyantPolygonObject(SceneObject):
    """Free-form polygon fanned into triangles about a center point: apexes
    and the center reshape it, border strips zoom it, the triangles move or
    rotate the whole object by button."""

    kind = "chatoyant-polygon"

    def __init__(self, center: Point, apexes, apex_radius: float = 5.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.center = (float(center[0]), float(center[1]))
        self.apexes: list[Point] = [tuple(map(float, p)) for p in apexes]
        self.apex_radius = float(apex_radius)
        self.define_cover()

    def _build_cover(self):
        n = len(self.apexes)
        nodes = []
        roles = []
        for i, p in enumerate(self.apexes):
            nodes.append(make_circle_node(len(nodes), p, self.apex_radius,
                                          MovementType.ANY, CursorTag.HAND))
            roles.append(("apex", i))
        nodes.append(make_circle_node(len(nodes), self.center, self.apex_radius,
                                      MovementType.ANY, CursorTag.HAND))
        roles.append(("center", None))
        for i in range(n):
            nodes.append(make_strip_node(len(nodes), self.apexes[i], self.apexes[(i + 1) % n],
                                         self.apex_radius, MovementType.ANY, CursorTag.HAND))
            roles.append(("edge", i))
        for i in range(n):
            a, b = self.apexes[i], self.apexes[(i + 1) % n]
            area = abs((a[0] - self.center[0]) * (b[1] - self.center[1])
                       - (a[1] - self.center[1]) * (b[0] - self.center[0])) / 2.0
            if area < 1e-6:
                continue  # triangles collapsed to a line are not hit-testable
            nodes.append(make_polygon_node(len(nodes), (self.center, a, b),
                                           MovementType.ANY, CursorTag.SIZE_ALL))
            roles.append(("triangle", i))
        return nodes, roles

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.apexes = [(x + dx, y + dy) for x, y in self.apexes]
        self.define_cover()

    def rotate_about_center(self, pt_prev: Point, pt_mouse: Point) -> bool:
        delta = rotation_delta(self.center, pt_prev, pt_mouse)
        if delta is None or delta == 0.0:
            return False
        self.apexes = [rotate_point(p, self.center, delta) for p in self.apexes]
        self.define_cover()
        return True

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, k = self.node_role(i)
        if role == "apex":
            if dx == 0.0 and dy == 0.0:
                return False
            x, y = self.apexes[k]
            self.apexes[k] = (x + dx, y + dy)
            self.define_cover()
            return True
        if role == "center":
            if dx == 0.0 and dy == 0.0:
                return False
            self.center = (self.center[0] + dx, self.center[1] + dy)
            self.define_cover()
            return True
        pt_prev = (pt_mouse[0] - dx, pt_mouse[1] - dy)
        if role == "edge":
            d_prev = dist(pt_prev, self.center)
            d_now = dist(pt_mouse, self.center)
            if d_prev <= _MIN_LEG or d_now <= _MIN_LEG:
                return False  # anchor on the center gives no usable scale
            scale = d_now / d_prev
            if scale == 1.0:
                return False
            cx, cy = self.center
            self.apexes = [(cx + (x - cx) * scale, cy + (y - cy) * scale)
                           for x, y in self.apexes]
            self.define_cover()
            return True
        # triangle: move forward or rotate, by button
        if button is ButtonTag.RIGHT:
            return self.rotate_about_center(pt_prev, pt_mouse)
        if dx == 0.0 and dy == 0.0:
            return False
        self.move(dx, dy)
        return True

    def reference_point(self) -> Point:
        return self.center


class RingObject(SceneObject):
    """Annulus moved by any inner point and resized by any border point.

    The border-circle counts are frozen while a drag is active so the caught
    node index stays meaningful; they are re-derived on release.
    """

    kind = "ring"

    def __init__(self, center: Point, r_outer: float, r_inner: float,
                 node_radius: float = 5.0, min_gap: float = 2.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        if not (r_inner + min_gap <= r_outer):
            raise BadRadiiError("ring needs r_inner + min_gap <= r_outer")
        if not (r_inner > node_radius):
            raise BadRadiiError("ring inner radius must exceed the node radius")
        self.center = (float(center[0]), float(center[1]))
        self.r_outer = float(r_outer)
        self.r_inner = float(r_inner)
        self.node_radius = float(node_radius)
        self.min_gap = float(min_gap)
        self._frozen_counts: tuple[int, int] | None = None
        self.define_cover()

    def _build_cover(self):
        counts = self._frozen_counts
        if counts is None:
            counts = (border_circle_count(self.r_outer, self.node_radius),
                      border_circle_count(self.r_inner, self.node_radius))
        cover = annulus_nodes(self.center, self.r_outer, self.r_inner,
                              self.node_radius, counts)
        k_out, k_in = counts
        roles = ([("outer", k) for k in range(k_out)]
                 + [("inner", k) for k in range(k_in)]
                 + [("sector", k) for k in range(k_out)])
        return cover.nodes, roles

    def on_catch(self, i: int) -> None:
        self._frozen_counts = (border_circle_count(self.r_outer, self.node_radius),
                               border_circle_count(self.r_inner, self.node_radius))

    def on_release(self) -> None:
        self._frozen_counts = None
        self.define_cover()

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, _ = self.node_role(i)
        if role == "sector":
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        reach = dist(pt_mouse, self.center)
        if role == "outer":
            new = max(reach, self.r_inner + self.min_gap)
            if new == self.r_outer:
                return False
            self.r_outer = new
        else:
            new = max(reach, self.node_radius + 1e-6)
            new = min(new, self.r_outer - self.min_gap)
            # float rounding of r_outer - min_gap may overshoot; keep the
            # ordering invariant exact
            while new + self.min_gap > self.r_outer:
                new = math.nextafter(new, -math.inf)
            if new == self.r_inner:
                return False
            self.r_inner = new
        self.define_cover()
        return True

    def reference_point(self) -> Point:
        return self.center
