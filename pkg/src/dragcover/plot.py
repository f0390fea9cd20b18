"""Plot assemblies: a resizable plotting area with attached scales and
rotatable comments.

All parts are individually moveable objects; the assembly coordinates their
synchronous and related movements. Moving the area body moves everything;
resizing the area re-lengths each scale and repositions every comment from
its fractional anchor in its parent's new frame. Scale covers get
transparent "windows" over the area corners they overlap, so the area stays
resizable by all four corners no matter where the scales sit.
"""

from __future__ import annotations

from enum import Enum

from .cover import CursorTag, MovementType, make_circle_node, make_polygon_node
from .errors import BadTargetError
from .geometry import Point, Rect, rotate_point
from .objects import ButtonTag, RectangleObject, Resizing, SceneObject, rotation_delta


class Orientation(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class CommentObject(SceneObject):
    """Short text attached to a plot area or a scale; moved freely and
    rotated about its own center, its cover a single rotated rectangle."""

    kind = "comment"

    def __init__(self, text: str, center: Point, extent: tuple[float, float],
                 angle: float = 0.0, parent_id: str = "", anchor: tuple[float, float] = (0.5, 0.5),
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.text = text
        self.center = (float(center[0]), float(center[1]))
        self.extent = (float(extent[0]), float(extent[1]))
        self.angle = float(angle)
        self.parent_id = parent_id
        self.anchor = (float(anchor[0]), float(anchor[1]))
        self.assembly: "PlotAssembly | None" = None
        self.define_cover()

    def _build_cover(self):
        w2, h2 = self.extent[0] / 2.0, self.extent[1] / 2.0
        cx, cy = self.center
        corners = [rotate_point((cx + sx * w2, cy + sy * h2), self.center, self.angle)
                   for sx, sy in ((-1, -1), (1, -1), (1, 1), (-1, 1))]
        node = make_polygon_node(0, corners, MovementType.ANY, CursorTag.SIZE_ALL)
        return [node], [("body", None)]

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.define_cover()

    def rotate_about_center(self, pt_prev: Point, pt_mouse: Point) -> bool:
        delta = rotation_delta(self.center, pt_prev, pt_mouse)
        if delta is None or delta == 0.0:
            return False
        self.angle += delta
        self.define_cover()
        return True

    def reposition_from_anchor(self, frame: Rect) -> None:
        self.center = (frame.x + self.anchor[0] * frame.w,
                       frame.y + self.anchor[1] * frame.h)
        self.define_cover()

    def recompute_anchor(self, frame: Rect) -> None:
        self.anchor = ((self.center[0] - frame.x) / frame.w if frame.w else 0.0,
                       (self.center[1] - frame.y) / frame.h if frame.h else 0.0)

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        self.node_role(i)
        if button is ButtonTag.RIGHT:
            return self.rotate_about_center((pt_mouse[0] - dx, pt_mouse[1] - dy), pt_mouse)
        if dx == 0.0 and dy == 0.0:
            return False
        self.move(dx, dy)
        if self.assembly is not None:
            self.recompute_anchor(self.assembly.frame_of(self.parent_id))
        return True

    def reference_point(self) -> Point:
        return self.center


class ScaleObject(SceneObject):
    """Scale strip attached to a plot area. Users only move it; its length
    is resynced to the matching area side whenever the area resizes."""

    kind = "scale"

    def __init__(self, rect: Rect, orientation: Orientation,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        super().__init__(object_id, move_range, fill)
        self.rect = rect
        self.orientation = orientation
        # pixel offsets from the area, refreshed whenever the scale itself
        # moves: along the orientation from the area origin, perpendicular
        # from the classic axis edge (bottom for horizontal, left for vertical)
        self._along_offset = 0.0
        self._perp_offset = 0.0
        # window count changes with corner overlap; freeze it during a drag
        # so the caught node index stays meaningful (same rule as the ring)
        self._frozen_windows: tuple[int, ...] | None = None
        self.assembly: "PlotAssembly | None" = None
        self.define_cover()

    @property
    def area_offset(self) -> float:
        return self._perp_offset

    def capture_offsets(self, area_rect: Rect) -> None:
        if self.orientation is Orientation.HORIZONTAL:
            self._along_offset = self.rect.x - area_rect.x
            self._perp_offset = self.rect.y - area_rect.bottom
        else:
            self._along_offset = self.rect.y - area_rect.y
            self._perp_offset = self.rect.x - area_rect.left

    def sync_to_area(self, area_rect: Rect) -> None:
        """Length equals the matching area side; both offsets are preserved."""
        if self.orientation is Orientation.HORIZONTAL:
            self.rect.x = area_rect.x + self._along_offset
            self.rect.w = area_rect.w
            self.rect.y = area_rect.bottom + self._perp_offset
        else:
            self.rect.y = area_rect.y + self._along_offset
            self.rect.h = area_rect.h
            self.rect.x = area_rect.left + self._perp_offset
        self.define_cover()

    def _window_corners(self) -> tuple[int, ...]:
        area = self.assembly.area
        return tuple(k for k, corner in enumerate(area.rect.corners())
                     if self.rect.contains(corner))

    def _build_cover(self):
        nodes = []
        roles = []
        if self.assembly is not None:
            corners = self.assembly.area.rect.corners()
            which = self._frozen_windows
            if which is None:
                which = self._window_corners()
            for k in which:
                # window: the area corner "looks out" through the scale
                nodes.append(make_circle_node(len(nodes), corners[k],
                                              self.assembly.area.corner_radius,
                                              MovementType.ANY, CursorTag.ARROW,
                                              transparent=True))
                roles.append(("window", k))
        nodes.append(make_polygon_node(len(nodes), self.rect.corners(),
                                       MovementType.ANY, CursorTag.SIZE_ALL))
        roles.append(("body", None))
        return nodes, roles

    def on_catch(self, i: int) -> None:
        if self.assembly is not None:
            self._frozen_windows = self._window_corners()

    def on_release(self) -> None:
        self._frozen_windows = None
        self.define_cover()

    def move(self, dx: float, dy: float) -> None:
        self.rect.shift(dx, dy)
        self.define_cover()

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, _ = self.node_role(i)
        if role == "window":
            return False  # transparent nodes are never caught
        if dx == 0.0 and dy == 0.0:
            return False
        self.move(dx, dy)
        if self.assembly is not None:
            self.capture_offsets(self.assembly.area.rect)
            self.assembly.translate_comments_of(self.object_id, dx, dy)
        return True

    def reference_point(self) -> Point:
        return self.rect.center


class PlotArea(RectangleObject):
    """The fully resizable main area; its body drag moves the whole
    assembly, a resize ripples to scales and comments."""

    kind = "plot-area"

    def __init__(self, rect: Rect, corner_radius: float = 8.0, half_width: float = 3.0,
                 min_width: float = 40.0, min_height: float = 40.0,
                 fill: str = "none", object_id: str | None = None,
                 move_range: Rect | None = None):
        self.assembly: "PlotAssembly | None" = None
        super().__init__(rect, Resizing.ANY, corner_radius, half_width,
                         min_width, min_height, fill, object_id, move_range)

    def move_node(self, i, dx, dy, pt_mouse=None, button=ButtonTag.LEFT) -> bool:
        role, _ = self.node_role(i)
        if role == "body":
            if dx == 0.0 and dy == 0.0:
                return False
            if self.assembly is not None:
                self.assembly.translate_all(dx, dy)
            else:
                self.move(dx, dy)
            return True
        moved = super().move_node(i, dx, dy, pt_mouse, button)
        if moved and self.assembly is not None:
            self.assembly.after_area_resize()
        return moved


class PlotAssembly:
    """One plotting area plus its scales and comments, registered with the
    mover as a unit (comments topmost, then scales, then the area)."""

    def __init__(self, area: PlotArea, object_id: str | None = None):
        self.object_id = object_id if object_id else area.object_id + "-assembly"
        self.area = area
        area.assembly = self
        self.scales: list[ScaleObject] = []
        self.comments: list[CommentObject] = []

    # --- construction -----------------------------------------------------
    def add_scale(self, scale: ScaleObject) -> ScaleObject:
        scale.assembly = self
        scale.capture_offsets(self.area.rect)
        # enforce the length invariant at attach; a conforming rect is untouched
        scale.sync_to_area(self.area.rect)
        self.scales.append(scale)
        return scale

    def add_comment(self, comment: CommentObject) -> CommentObject:
        comment.assembly = self
        if not comment.parent_id:
            comment.parent_id = self.area.object_id
        comment.recompute_anchor(self.frame_of(comment.parent_id))
        self.comments.append(comment)
        return comment

    # --- registration -------------------------------------------------------
    def parts(self) -> list[SceneObject]:
        """All parts, topmost first: comments, scales, area."""
        return [*self.comments, *self.scales, self.area]

    def into_mover(self, mover, index: int) -> None:
        """Register the assembly starting at index, parts in pick order."""
        for offset, part in enumerate(self.parts()):
            mover.insert(index + offset, part)

    # --- coordinated movement -----------------------------------------------
    def frame_of(self, parent_id: str) -> Rect:
        if parent_id == self.area.object_id:
            return self.area.rect
        for scale in self.scales:
            if scale.object_id == parent_id:
                return scale.rect
        raise BadTargetError(f"no part {parent_id!r} in assembly {self.object_id}")

    def translate_all(self, dx: float, dy: float) -> None:
        self.area.move(dx, dy)
        for scale in self.scales:
            scale.move(dx, dy)  # offsets stay valid: area moved by the same delta
        for comment in self.comments:
            comment.move(dx, dy)

    def after_area_resize(self) -> None:
        for scale in self.scales:
            scale.sync_to_area(self.area.rect)
        for comment in self.comments:
            comment.reposition_from_anchor(self.frame_of(comment.parent_id))

    def translate_comments_of(self, scale_id: str, dx: float, dy: float) -> None:
        for comment in self.comments:
            if comment.parent_id == scale_id:
                comment.move(dx, dy)


def assembly_move_node(assembly: PlotAssembly, target: SceneObject, i: int,
                       dx: float, dy: float, pt_mouse=None,
                       button: ButtonTag = ButtonTag.LEFT) -> bool:
    """Move one node of one assembly part, with all related movement applied."""
    if target not in assembly.parts():
        raise BadTargetError(f"{target.object_id} is not part of {assembly.object_id}")
    return target.move_node(i, dx, dy, pt_mouse, button)
