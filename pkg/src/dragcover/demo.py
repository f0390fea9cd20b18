"""Demo scene corpus, also the fixture set for round-trip and replay tests.

Run ``python -m dragcover.demo <dir>`` to (re)write the scene files.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

from .cover import Resizing
from .geometry import Rect
from .objects import (
    ChatoyantPolygonObject,
    LoopObject,
    PolygonVariant,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
)
from .plot import CommentObject, Orientation, PlotArea, PlotAssembly, ScaleObject
from .scene import Scene, save_scene
from .widgets import ControlProxy, GroupChild, GroupObject


def rectangles_scene() -> Scene:
    """The four resizing modes side by side; the fully resizable one is
    confined to a movement range."""
    return Scene([
        RectangleObject(Rect(40, 40, 120, 70), Resizing.NONE, fill="#9fc5e8",
                        object_id="rect-none"),
        RectangleObject(Rect(220, 40, 120, 70), Resizing.WE, fill="#ffe599",
                        object_id="rect-we"),
        RectangleObject(Rect(40, 160, 120, 70), Resizing.NS, fill="#b6d7a8",
                        object_id="rect-ns"),
        RectangleObject(Rect(220, 160, 120, 70), Resizing.ANY, fill="#d5a6bd",
                        object_id="rect-any", move_range=Rect(0, 0, 640, 480)),
    ])


def loop_scene() -> Scene:
    points = [(80, 60), (200, 40), (300, 110), (260, 220), (130, 240), (50, 150)]
    return Scene([LoopObject(points, node_radius=6, half_width=3,
                             fill="#3d6b99", object_id="loop-1")])


def regular_polygons_scene() -> Scene:
    return Scene([
        RegularPolygonObject((110, 110), 70, 5, phase=-math.pi / 2,
                             variant=PolygonVariant.FIXED, fill="#a2c4c9",
                             object_id="poly-fixed"),
        RegularPolygonObject((300, 110), 70, 6, phase=0.0,
                             variant=PolygonVariant.BY_APEX, fill="#d9ead3",
                             object_id="poly-apex"),
        RegularPolygonObject((490, 110), 70, 7, phase=math.pi / 7,
                             variant=PolygonVariant.BY_BORDER, fill="#fff2cc",
                             object_id="poly-border"),
    ])


def chatoyant_scene() -> Scene:
    hexagon = RegularPolygonObject((160, 150), 90, 6, variant=PolygonVariant.FIXED)
    return Scene([
        ChatoyantPolygonObject((160, 150), hexagon.apexes, fill="#e06666",
                               object_id="chat-hex"),
        ChatoyantPolygonObject((420, 150), [(420, 60), (500, 130), (470, 230),
                                            (370, 230), (340, 130)],
                               fill="#76a5af", object_id="chat-pent"),
    ])


def ring_scene() -> Scene:
    return Scene([RingObject((160, 160), 110, 55, node_radius=7, min_gap=4,
                             fill="#b4a7d6", object_id="ring-1")])


def control_frames_scene() -> Scene:
    return Scene([
        ControlProxy(Rect(40, 40, 150, 48), Resizing.NONE, moveable=True,
                     fill="#cccccc", object_id="ctl-none"),
        ControlProxy(Rect(260, 40, 150, 48), Resizing.NS, moveable=True,
                     fill="#cccccc", object_id="ctl-ns"),
        ControlProxy(Rect(40, 150, 150, 48), Resizing.WE, moveable=True,
                     fill="#cccccc", object_id="ctl-we"),
        ControlProxy(Rect(260, 150, 150, 48), Resizing.ANY, moveable=True,
                     fill="#cccccc", object_id="ctl-any"),
        ControlProxy(Rect(150, 260, 150, 48), Resizing.ANY, moveable=False,
                     fill="#cccccc", object_id="ctl-caterpillar"),
    ])


def groups_scene() -> Scene:
    return Scene([
        GroupObject(Rect(40, 40, 240, 140), title="Borders",
                    resizable_sides=(True, True, True, True),
                    children=[GroupChild("chk-top", (0.1, 0.15), (90, 22)),
                              GroupChild("chk-left", (0.1, 0.5), (90, 22)),
                              GroupChild("btn-apply", (0.55, 0.3), (80, 28))],
                    padding=6, fill="#f3f3f3", object_id="grp-borders"),
        GroupObject(Rect(340, 40, 220, 140), title="Grids",
                    resizable_sides=(False, False, True, True),
                    children=[GroupChild("cmb-style", (0.12, 0.2), (120, 24))],
                    padding=6, fill="#f3f3f3", object_id="grp-grids"),
    ])


def plot_scene() -> Scene:
    area = PlotArea(Rect(120, 80, 320, 200), corner_radius=10, half_width=3,
                    fill="#fdf6e3", object_id="plot-area")
    assembly = PlotAssembly(area, object_id="plot-1")
    # the vertical scale overlaps the top-left area corner and the horizontal
    # one both bottom corners: their windows keep those corners grabbable
    assembly.add_scale(ScaleObject(Rect(90, 60, 44, 200), Orientation.VERTICAL,
                                   fill="#eee8d5", object_id="scale-y"))
    assembly.add_scale(ScaleObject(Rect(120, 270, 320, 36), Orientation.HORIZONTAL,
                                   fill="#eee8d5", object_id="scale-x"))
    assembly.add_comment(CommentObject("signal power", (280, 110), (110, 16),
                                       parent_id="plot-area", fill="#586e75",
                                       object_id="cmt-title"))
    assembly.add_comment(CommentObject("phase", (200, 240), (60, 14),
                                       angle=-math.pi / 12, parent_id="plot-area",
                                       fill="#586e75", object_id="cmt-phase"))
    assembly.add_comment(CommentObject("t, ms", (400, 310), (44, 12),
                                       parent_id="scale-x", fill="#586e75",
                                       object_id="cmt-axis"))
    return Scene([assembly])


def medley_scene() -> Scene:
    """Overlapping stack exercising pick priority across objects."""
    ring = RingObject((210, 170), 90, 45, node_radius=6, min_gap=3,
                      fill="#b4a7d6", object_id="med-ring")
    rect = RectangleObject(Rect(120, 120, 220, 130), Resizing.ANY,
                           fill="#9fc5e8", object_id="med-rect")
    loop = LoopObject([(380, 90), (470, 130), (450, 240), (350, 220)],
                      fill="#3d6b99", object_id="med-loop")
    chat = ChatoyantPolygonObject((430, 300), [(430, 250), (480, 300),
                                               (430, 350), (380, 300)],
                                  fill="#e06666", object_id="med-chat")
    return Scene([ring, rect, loop, chat])


DEMO_SCENES = {
    "rectangles": rectangles_scene,
    "loop": loop_scene,
    "regular-polygons": regular_polygons_scene,
    "chatoyant": chatoyant_scene,
    "ring": ring_scene,
    "control-frames": control_frames_scene,
    "groups": groups_scene,
    "plot": plot_scene,
    "medley": medley_scene,
}


def write_demo_scenes(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in DEMO_SCENES.items():
        path = out / f"{name}.scene"
        path.write_text(save_scene(build()), encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "scenes"
    for path in write_demo_scenes(target):
        print(path)
