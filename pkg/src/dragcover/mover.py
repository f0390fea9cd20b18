"""The supervising interaction state machine.

One mover per scene registers objects in picking order (index 0 is topmost;
rendering order is the reverse) and routes pointer events: catch() grabs the
first opaque node under the point, move_to() masks the delta by the caught
node's movement type, clamps whole-object moves to the object's range, and
dispatches move_node(); release() ends the drag. The mover reads nothing
from an object except its cover, its range, and its node-role metadata.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import FALL_THROUGH, CursorTag, MovementType, hit_index
from .errors import BadIndexError, DragInProgressError, DuplicateObjectError
from .geometry import Point, Rect
from .objects import ButtonTag, SceneObject


@dataclass
class MoveResult:
    moved: bool
    cursor: CursorTag


@dataclass
class ReleaseInfo:
    object_index: int
    node_index: int
    button: ButtonTag


@dataclass
class _DragState:
    obj: SceneObject
    node_index: int
    button: ButtonTag
    anchor: Point
    movement: MovementType  # frozen at catch, like the node index
    cursor: CursorTag


def _clamp_to_range(ref: Point, bounds: Rect, dx: float, dy: float) -> tuple[float, float]:
    tx = min(max(ref[0] + dx, bounds.left), bounds.right)
    ty = min(max(ref[1] + dy, bounds.top), bounds.bottom)
    return (tx - ref[0], ty - ref[1])


class Mover:
    """Registry of moveable objects plus the single active drag."""

    def __init__(self, rotation_button: ButtonTag = ButtonTag.RIGHT):
        self.entries: list[SceneObject] = []
        self.drag: _DragState | None = None
        # the one configuration value for button roles: this button starts
        # rotation, the other one forward movement
        self.rotation_button = rotation_button

    # --- registration ---------------------------------------------------
    def add(self, obj: SceneObject) -> None:
        self._check_new(obj)
        self.entries.append(obj)

    def insert(self, index: int, obj: SceneObject) -> None:
        if not 0 <= index <= len(self.entries):
            raise BadIndexError(f"insert index {index} of {len(self.entries)}")
        self._check_new(obj)
        self.entries.insert(index, obj)

    def _check_new(self, obj: SceneObject) -> None:
        if any(entry is obj for entry in self.entries):
            raise DuplicateObjectError(f"{obj.object_id} is already registered")

    # --- pointer protocol -------------------------------------------------
    def catch(self, pt: Point, button: ButtonTag = ButtonTag.LEFT) -> bool:
        """Grab the topmost opaque node under pt; transparent hits make the
        whole object yield to the objects beneath it."""
        if self.drag is not None:
            raise DragInProgressError("catch while a drag is active")
        for obj in self.entries:
            found = hit_index(obj.cover, pt)
            if found is None or found is FALL_THROUGH:
                continue
            node = obj.cover.nodes[found]
            self.drag = _DragState(obj, found, self._semantic_button(button), pt,
                                   node.movement, node.cursor)
            obj.on_catch(found)
            return True
        return False

    def move_to(self, pt: Point) -> MoveResult:
        if self.drag is None:
            return MoveResult(False, self.sense_cursor(pt))
        d = self.drag
        if d.node_index >= len(d.obj.cover.nodes):
            # the caught node vanished in a cover rebuild (e.g. a fan
            # triangle collapsed); the drag stays inert until release
            return MoveResult(False, d.cursor)
        dx = pt[0] - d.anchor[0]
        dy = pt[1] - d.anchor[1]
        if d.movement is MovementType.NS:
            dx = 0.0
        elif d.movement is MovementType.WE:
            dy = 0.0
        elif d.movement is MovementType.NONE:
            dx = dy = 0.0
        if d.obj.move_range is not None and d.obj.is_whole_move_node(d.node_index):
            dx, dy = _clamp_to_range(d.obj.reference_point(), d.obj.move_range, dx, dy)
        moved = d.obj.move_node(d.node_index, dx, dy, pt, d.button)
        if moved:
            d.anchor = pt  # a rejected move keeps the original grab offset
        return MoveResult(moved, d.cursor)

    def release(self) -> ReleaseInfo | None:
        if self.drag is None:
            return None
        d = self.drag
        self.drag = None
        d.obj.on_release()
        return ReleaseInfo(self.entries.index(d.obj), d.node_index, d.button)

    def sense_cursor(self, pt: Point) -> CursorTag:
        """Cursor of the topmost opaque node under pt, Arrow over empty space."""
        for obj in self.entries:
            found = hit_index(obj.cover, pt)
            if found is None or found is FALL_THROUGH:
                continue
            return obj.cover.nodes[found].cursor
        return CursorTag.ARROW

    # --- stacking ---------------------------------------------------------
    def restack(self, object_index: int, to: str) -> None:
        """Move an entry to the top or bottom of the pick order."""
        if not 0 <= object_index < len(self.entries):
            raise BadIndexError(f"restack index {object_index} of {len(self.entries)}")
        if to not in ("top", "bottom"):
            raise ValueError(f"restack target must be 'top' or 'bottom', not {to!r}")
        obj = self.entries[object_index]
        if self.drag is not None and self.drag.obj is obj:
            raise DragInProgressError("cannot restack the dragged object")
        self.entries.pop(object_index)
        if to == "top":
            self.entries.insert(0, obj)
        else:
            self.entries.append(obj)

    def _semantic_button(self, button: ButtonTag) -> ButtonTag:
        return ButtonTag.RIGHT if button is self.rotation_button else ButtonTag.LEFT
