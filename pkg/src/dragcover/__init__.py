"""dragcover: a rendering-agnostic direct-manipulation engine.

Any 2-D object becomes moveable, resizable, reconfigurable, and rotatable by
attaching an ordered cover of sensitive nodes; a Mover supervises the
catch/move/release protocol. Scenes, pointer traces, and snapshots are plain
text files with deterministic replay.
"""

from .cover import (
    FALL_THROUGH,
    Circle,
    Cover,
    CoverNode,
    CursorTag,
    MovementType,
    Polygon,
    Resizing,
    Strip,
    annulus_cover,
    hit_index,
    loop_cover,
    make_circle_node,
    make_polygon_node,
    make_strip_node,
    node_contains,
    rectangle_cover,
    regular_apexes,
)
from .errors import (
    BadCountError,
    BadDimensionsError,
    BadIndexError,
    BadNodeIndexError,
    BadRadiiError,
    BadTargetError,
    DegenerateError,
    DragCoverError,
    DragInProgressError,
    DuplicateObjectError,
    MalformedSceneError,
    MalformedTraceError,
    NonConvexError,
    NotMoveableError,
    NotResizableError,
    TooFewPointsError,
    UnknownKindError,
)
from .fuzz import check_invariants, fuzz
from .geometry import Point, Rect
from .mover import Mover, MoveResult, ReleaseInfo
from .objects import (
    ButtonTag,
    ChatoyantPolygonObject,
    LoopObject,
    PolygonVariant,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
    SceneObject,
    rotation_delta,
)
from .plot import (
    CommentObject,
    Orientation,
    PlotArea,
    PlotAssembly,
    ScaleObject,
    assembly_move_node,
)
from .render import render_list, render_svg
from .replay import Trace, TraceEvent, load_trace, replay, save_trace
from .scene import Scene, load_scene, round_trip, save_scene, scenes_equal
from .widgets import ControlProxy, GroupChild, GroupObject, group_move_node

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
