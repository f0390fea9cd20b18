"""Control frames and groups.

Controls own their inner area, so the only place to grab them is the frame
around their borders: corner circles and mid-side nodes resize, the frame
band moves. Groups are titled frames around a set of anchored children;
they move by any inner point and resize by the sides marked resizable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import (
    CursorTag,
    MovementType,
    Resizing,
    make_circle_node,
    make_polygon_node,
)
from .errors import BadDimensionsError, NotMoveableError
from .geometry import Point, Rect
from .objects import ButtonTag, SceneObject, move_rect_edge

_CORNER_CURSORS = {
    Resizing.ANY: {"tl": CursorTag.SIZE_NWSE, "br": CursorTag.SIZE_NWSE,
                   "tr": CursorTag.SIZE_NESW, "bl": CursorTag.SIZE_NESW},
    Resizing.NS: {c: CursorTag.SIZE_NS for c in ("tl", "tr", "br", "bl")},
    Resizing.WE: {c: CursorTag.SIZE_WE for c in ("tl", "tr", "br", "bl")},
}

_CORNER_EDGES = {"tl": ("left", "top"), "tr": ("right", "top"),
                 "br": ("right", "bottom"), "bl": ("left", "bottom")}


def mid_node_length(side: float, corner_radius: float) -> float:
    """Mid-side node length: a third of the side, at least 16 px, but always
    leaving a gap to the corner nodes (floored so tiny controls keep a node)."""
    upper = side - 2.0 * (corner_radius + 4.0)
    return max(min(max(side / 3.0, 16.0), upper), 2.0)


class ControlProxy(SceneObject):
    """Frame wrapped around a host control so it can be moved and resized
    like any graphical object; the host repositions the real control from
    the proxy's bounds after each change."""

    kind = "control-frame"

    def __init__(self, bounds: Rect, resizing: Resizing = Resizing.ANY,
                 moveable: bool = True, frame_width: float = 6.0,
                 corner_radius: float = 8.0, min_size: tuple[float, float] = (24.0, 24.0),
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        if frame_width <= 0.0:
            raise BadDimensionsError("frame width must be positive")
        if corner_radius < frame_width / 2.0:
            raise BadDimensionsError("corner radius must be at least half the frame width")
        self.bounds = bounds
        self.resizing = resizing
        self.moveable = bool(moveable)
        self.frame_width = float(frame_width)
        self.corner_radius = float(corner_radius)
        self.min_size = (float(min_size[0]), float(min_size[1]))
        self.define_cover()

    @property
    def control_id(self) -> str:
        return self.object_id

    def _build_cover(self):
        l, t, r, b = self.bounds.left, self.bounds.top, self.bounds.right, self.bounds.bottom
        fw = self.frame_width
        rad = self.corner_radius
        nodes = []
        roles = []

        def add_poly(apexes, movement, cursor, role):
            nodes.append(make_polygon_node(len(nodes), apexes, movement, cursor))
            roles.append(role)

        if self.resizing is not Resizing.NONE:
            # corner circles sit diagonally outward, tangent at the corner,
            # so they never cover the control's interior
            off = rad / math.sqrt(2.0)
            movement = {Resizing.ANY: MovementType.ANY, Resizing.NS: MovementType.NS,
                        Resizing.WE: MovementType.WE}[self.resizing]
            cursors = _CORNER_CURSORS[self.resizing]
            for tag, (cx, cy), (sx, sy) in (
                ("tl", (l, t), (-1, -1)), ("tr", (r, t), (1, -1)),
                ("br", (r, b), (1, 1)), ("bl", (l, b), (-1, 1)),
            ):
                nodes.append(make_circle_node(len(nodes), (cx + sx * off, cy + sy * off),
                                              rad, movement, cursors[tag]))
                roles.append(("corner", tag))
            mid_w = mid_node_length(self.bounds.w, rad)
            mid_h = mid_node_length(self.bounds.h, rad)
            cx, cy = self.bounds.center
            if self.resizing in (Resizing.ANY, Resizing.NS):
                add_poly(((cx - mid_w / 2, t - fw), (cx + mid_w / 2, t - fw),
                          (cx + mid_w / 2, t), (cx - mid_w / 2, t)),
                         MovementType.NS, CursorTag.SIZE_NS, ("mid", "top"))
                add_poly(((cx - mid_w / 2, b), (cx + mid_w / 2, b),
                          (cx + mid_w / 2, b + fw), (cx - mid_w / 2, b + fw)),
                         MovementType.NS, CursorTag.SIZE_NS, ("mid", "bottom"))
            if self.resizing in (Resizing.ANY, Resizing.WE):
                add_poly(((l - fw, cy - mid_h / 2), (l, cy - mid_h / 2),
                          (l, cy + mid_h / 2), (l - fw, cy + mid_h / 2)),
                         MovementType.WE, CursorTag.SIZE_WE, ("mid", "left"))
                add_poly(((r, cy - mid_h / 2), (r + fw, cy - mid_h / 2),
                          (r + fw, cy + mid_h / 2), (r, cy + mid_h / 2)),
                         MovementType.WE, CursorTag.SIZE_WE, ("mid", "right"))
        if self.moveable:
            # the frame band is always last: resizing is checked before moving
            add_poly(((l - fw, t - fw), (r + fw, t - fw), (r + fw, t), (l - fw, t)),
                     MovementType.ANY, CursorTag.SIZE_ALL, ("frame", "top"))
            add_poly(((l - fw, b), (r + fw, b), (r + fw, b + fw), (l - fw, b + fw)),
                     MovementType.ANY, CursorTag.SIZE_ALL, ("frame", "bottom"))
            add_poly(((l - fw, t), (l, t), (l, b), (l - fw, b)),
                     MovementType.ANY, CursorTag.SIZE_ALL, ("frame", "left"))
            add_poly(((r, t), (r + fw, t), (r + fw, b), (r, b)),
                     MovementType.ANY, CursorTag.SIZE_ALL, ("frame", "right"))
        return nodes, roles

    def move(self, dx: float, dy: float) -> None:
        self.bounds.shift(dx, dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, which = self.node_role(i)
        min_w, min_h = self.min_size
        if role == "frame":
            if not self.moveable:
                raise NotMoveableError(f"{self.object_id} has no frame nodes")
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        moved = False
        if role == "corner":
            x_edge, y_edge = _CORNER_EDGES[which]
            if self.resizing in (Resizing.ANY, Resizing.WE):
                moved |= move_rect_edge(self.bounds, x_edge, dx, min_w, min_h)
            if self.resizing in (Resizing.ANY, Resizing.NS):
                moved |= move_rect_edge(self.bounds, y_edge, dy, min_w, min_h)
        else:  # mid-side
            delta = dy if which in ("top", "bottom") else dx
            moved = move_rect_edge(self.bounds, which, delta, min_w, min_h)
        if moved:
            self.define_cover()
        return moved

    def reference_point(self) -> Point:
        return self.bounds.center


@dataclass
class GroupChild:
    """A hosted control: fractional anchor in the group frame, fixed size."""

    control_id: str
    anchor: tuple[float, float]
    size: tuple[float, float]


# resizable_sides order, matching the side-node order of rectangle covers
SIDE_ORDER = ("top", "bottom", "left", "right")


class GroupObject(SceneObject):
    """Titled frame grouping controls; moved by any inner point, resized by
    the sides marked resizable; children keep their fractional anchors."""

    kind = "group"

    def __init__(self, frame: Rect, title: str = "",
                 resizable_sides: tuple[bool, bool, bool, bool] = (True, True, True, True),
                 children: list[GroupChild] | None = None, padding: float = 6.0,
                 corner_radius: float = 8.0, half_width: float = 3.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.frame = frame
        self.title = title
        self.resizable_sides = tuple(bool(s) for s in resizable_sides)
        self.children = list(children or [])
        self.padding = float(padding)
        self.corner_radius = float(corner_radius)
        self.half_width = float(half_width)
        for child in self.children:
            ax, ay = child.anchor
            if not (0.0 <= ax <= 1.0 and 0.0 <= ay <= 1.0):
                raise BadDimensionsError(f"child {child.control_id}: anchor outside [0,1]^2")
        if not self._contains_children(self.frame.w, self.frame.h):
            raise BadDimensionsError("group frame does not contain its children plus padding")
        self.define_cover()

    def _side_resizable(self, which: str) -> bool:
        return self.resizable_sides[SIDE_ORDER.index(which)]

    def _contains_children(self, w: float, h: float) -> bool:
        for child in self.children:
            ax, ay = child.anchor
            cw, ch = child.size
            if ax * w < self.padding or ax * w + cw > w - self.padding:
                return False
            if ay * h < self.padding or ay * h + ch > h - self.padding:
                return False
        return True

    def _min_extent(self, horizontal: bool) -> float:
        """Smallest frame extent keeping every anchored child inside the
        padded frame (construction guarantees the constraints are feasible)."""
        need = 2.0 * self.half_width + 1e-6
        for child in self.children:
            a = child.anchor[0] if horizontal else child.anchor[1]
            c = child.size[0] if horizontal else child.size[1]
            if a > 0.0:
                need = max(need, self.padding / a)
            if a < 1.0:
                need = max(need, (c + self.padding) / (1.0 - a))
        return need

    def child_position(self, child: GroupChild) -> Point:
        return (self.frame.x + child.anchor[0] * self.frame.w,
                self.frame.y + child.anchor[1] * self.frame.h)

    def child_updates(self) -> list[tuple[str, Point]]:
        """(controlId, top-left) for every child — the host repositions the
        real controls from this list."""
        return [(c.control_id, self.child_position(c)) for c in self.children]

    def _build_cover(self):
        l, t, r, b = self.frame.left, self.frame.top, self.frame.right, self.frame.bottom
        rad, hw = self.corner_radius, self.half_width
        nodes = []
        roles = []
        corner_pos = {"tl": (l, t), "tr": (r, t), "br": (r, b), "bl": (l, b)}
        corner_sides = {"tl": ("top", "left"), "tr": ("top", "right"),
                        "br": ("bottom", "right"), "bl": ("bottom", "left")}
        for tag in ("tl", "tr", "br", "bl"):
            s1, s2 = corner_sides[tag]
            if self._side_resizable(s1) and self._side_resizable(s2):
                nodes.append(make_circle_node(len(nodes), corner_pos[tag], rad,
                                              MovementType.ANY,
                                              _CORNER_CURSORS[Resizing.ANY][tag]))
                roles.append(("corner", tag))
        side_boxes = {
            "top": ((l, t - hw), (r, t - hw), (r, t + hw), (l, t + hw)),
            "bottom": ((l, b - hw), (r, b - hw), (r, b + hw), (l, b + hw)),
            "left": ((l - hw, t), (l + hw, t), (l + hw, b), (l - hw, b)),
            "right": ((r - hw, t), (r + hw, t), (r + hw, b), (r - hw, b)),
        }
        for which in SIDE_ORDER:
            if not self._side_resizable(which):
                continue
            vertical = which in ("top", "bottom")
            nodes.append(make_polygon_node(len(nodes), side_boxes[which],
                                           MovementType.NS if vertical else MovementType.WE,
                                           CursorTag.SIZE_NS if vertical else CursorTag.SIZE_WE))
            roles.append(("side", which))
        nodes.append(make_polygon_node(len(nodes), ((l, t), (r, t), (r, b), (l, b)),
                                       MovementType.ANY, CursorTag.SIZE_ALL))
        roles.append(("body", None))
        return nodes, roles

    def move(self, dx: float, dy: float) -> None:
        self.frame.shift(dx, dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, which = self.node_role(i)
        if role == "body":
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        min_w = self._min_extent(horizontal=True)
        min_h = self._min_extent(horizontal=False)
        moved = False
        if role == "corner":
            x_edge, y_edge = _CORNER_EDGES[which]
            moved |= move_rect_edge(self.frame, x_edge, dx, min_w, min_h)
            moved |= move_rect_edge(self.frame, y_edge, dy, min_w, min_h)
        else:
            delta = dy if which in ("top", "bottom") else dx
            moved = move_rect_edge(self.frame, which, delta, min_w, min_h)
        if moved:
            self.define_cover()
        return moved

    def reference_point(self) -> Point:
        return self.frame.center


def group_move_node(group: GroupObject, i: int, dx: float, dy: float):
    """Move one group node; returns (moved, childUpdates) so hosts can
    reposition the real controls."""
    moved = group.move_node(i, dx, dy)
    return moved, group.child_updates()
