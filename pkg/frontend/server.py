"""HTTP bridge hosting the dragcover engine for the browser demo.

The browser owns no geometry: every pointer event is forwarded to the
mover's catch/move_to/release, and every mutation comes back as a render
list. Pointer events are recorded as a trace; structural commands
(add/delete/restack/load) re-baseline the recording so that replaying the
exported trace against the saved baseline scene always reproduces the
current state.

Run: python3 server.py [--port 8765] [--scene path.scene]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import uvicorn
from fastapi import FastAPI
from fastapi.responses import HTMLResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from dragcover import (
    ButtonTag,
    CursorTag,
    MalformedSceneError,
    Scene,
    UnknownKindError,
    load_scene,
    render_list,
    save_scene,
    save_trace,
)
from dragcover.demo import DEMO_SCENES
from dragcover.geometry import Rect
from dragcover.objects import (
    ChatoyantPolygonObject,
    LoopObject,
    PolygonVariant,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
)
from dragcover.plot import CommentObject, Orientation, PlotArea, PlotAssembly, ScaleObject
from dragcover.cover import Resizing
from dragcover.replay import Trace, TraceEvent
from dragcover.widgets import ControlProxy, GroupChild, GroupObject


class Session:
    """One live scene with its mover, cover toggle, and pointer recording."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.mover = scene.build_mover()
        self.covers_visible = False
        self.baseline = save_scene(scene)
        self.events: list[TraceEvent] = []
        self.seq = 0
        self.last_point = (0.0, 0.0)

    def rebaseline(self) -> None:
        self.baseline = save_scene(self.scene)
        self.events = []
        self.seq = 0

    def record(self, kind: str, button: ButtonTag | None, x: float, y: float) -> None:
        self.events.append(TraceEvent(self.seq, kind, button, x, y))
        self.seq += 1

    def cursor(self) -> CursorTag:
        if self.mover.drag is not None:
            return self.mover.drag.cursor
        return self.mover.sense_cursor(self.last_point)

    def frame(self, moved: bool = False, error: str = "") -> dict:
        return {
            "shapes": render_list(self.scene, show_covers=self.covers_visible),
            "cursor": self.cursor().value,
            "coversVisible": self.covers_visible,
            "moved": moved,
            "objects": [{"id": obj.object_id, "kind": obj.kind}
                        for obj in self.scene.all_objects()],
            "error": error,
        }


def _occupied_ids(scene: Scene) -> set[str]:
    return {obj.object_id for obj in scene.all_objects()}


def _fresh_id(scene: Scene, prefix: str) -> str:
    taken = _occupied_ids(scene)
    k = 1
    while f"{prefix}-{k}" in taken:
        k += 1
    return f"{prefix}-{k}"


def make_object(scene: Scene, kind: str):
    """Palette defaults; every supported kind appears here."""
    if kind.startswith("rectangle"):
        mode = {"rectangle-none": Resizing.NONE, "rectangle-ns": Resizing.NS,
                "rectangle-we": Resizing.WE}.get(kind, Resizing.ANY)
        return RectangleObject(Rect(60, 60, 140, 80), mode, fill="#9fc5e8",
                               object_id=_fresh_id(scene, "rect"))
    if kind == "loop":
        return LoopObject([(80, 80), (220, 60), (260, 170), (140, 200)],
                          fill="#3d6b99", object_id=_fresh_id(scene, "loop"))
    if kind.startswith("regular-polygon"):
        variant = {"regular-polygon-fixed": PolygonVariant.FIXED,
                   "regular-polygon-border": PolygonVariant.BY_BORDER}.get(
                       kind, PolygonVariant.BY_APEX)
        return RegularPolygonObject((160, 140), 70, 6, variant=variant,
                                    fill="#d9ead3",
                                    object_id=_fresh_id(scene, "poly"))
    if kind == "chatoyant-polygon":
        base = RegularPolygonObject((160, 140), 80, 5, variant=PolygonVariant.FIXED)
        return ChatoyantPolygonObject((160, 140), base.apexes, fill="#e06666",
                                      object_id=_fresh_id(scene, "chat"))
    if kind == "ring":
        return RingObject((180, 160), 100, 50, node_radius=7, min_gap=4,
                          fill="#b4a7d6", object_id=_fresh_id(scene, "ring"))
    if kind == "group":
        return GroupObject(Rect(80, 80, 220, 130), title="Group",
                           children=[GroupChild("child-a", (0.12, 0.2), (80, 24)),
                                     GroupChild("child-b", (0.55, 0.55), (70, 28))],
                           padding=6, fill="#f3f3f3",
                           object_id=_fresh_id(scene, "grp"))
    if kind == "control-frame":
        return ControlProxy(Rect(100, 100, 150, 48), Resizing.ANY, moveable=True,
                            fill="#cccccc", object_id=_fresh_id(scene, "ctl"))
    if kind == "plot":
        plot_id = _fresh_id(scene, "plot")
        area = PlotArea(Rect(120, 90, 280, 180), corner_radius=10,
                        fill="#fdf6e3", object_id=plot_id + "-area")
        assembly = PlotAssembly(area, object_id=plot_id)
        assembly.add_scale(ScaleObject(Rect(90, 70, 40, 180), Orientation.VERTICAL,
                                       fill="#eee8d5", object_id=plot_id + "-sy"))
        assembly.add_scale(ScaleObject(Rect(120, 280, 280, 32), Orientation.HORIZONTAL,
                                       fill="#eee8d5", object_id=plot_id + "-sx"))
        assembly.add_comment(CommentObject("comment", (260, 130), (80, 16),
                                           parent_id=plot_id + "-area",
                                           fill="#586e75",
                                           object_id=plot_id + "-c1"))
        return assembly
    raise UnknownKindError(f"no palette entry for kind {kind!r}")


class PointerBody(BaseModel):
    kind: str  # pointerDown | pointerMove | pointerUp
    button: str = "Left"
    x: float = 0.0
    y: float = 0.0


class CommandBody(BaseModel):
    command: str
    kind: str | None = None
    button: str | None = None
    x: float | None = None
    y: float | None = None
    objectId: str | None = None
    to: str | None = None
    payload: str | None = None


class SessionBody(BaseModel):
    scene: str | None = None
    demo: str | None = None


def build_app() -> FastAPI:
    app = FastAPI(title="dragcover bridge")
    state: dict[str, Session | None] = {"session": None}

    def session() -> Session | None:
        return state["session"]

    @app.post("/session")
    def new_session(body: SessionBody):
        if body.scene is not None:
            try:
                scene = load_scene(body.scene)
            except MalformedSceneError as exc:
                return {"error": str(exc)}
        elif body.demo is not None and body.demo in DEMO_SCENES:
            scene = DEMO_SCENES[body.demo]()
        else:
            scene = Scene([])
        state["session"] = Session(scene)
        return state["session"].frame()

    @app.get("/demos")
    def demos():
        return {"demos": sorted(DEMO_SCENES)}

    @app.post("/command")
    def command(body: CommandBody):
        live = session()
        if live is None:
            return {"error": "SessionLost: no active session"}
        name = body.command
        if name in ("pointerDown", "pointerMove", "pointerUp"):
            return _pointer(live, name, body)
        if name == "addObject":
            try:
                entry = make_object(live.scene, body.kind or "")
            except UnknownKindError as exc:
                return live.frame(error=f"UnknownKind: {exc}")
            live.scene.entries.insert(0, entry)
            if isinstance(entry, PlotAssembly):
                entry.into_mover(live.mover, 0)
            else:
                live.mover.insert(0, entry)
            live.rebaseline()
            return live.frame(moved=True)
        if name == "restack":
            index = next((i for i, e in enumerate(live.scene.entries)
                          if getattr(e, "object_id", None) == body.objectId), None)
            if index is None:
                return live.frame(error=f"unknown object {body.objectId!r}")
            entry = live.scene.entries.pop(index)
            if body.to == "top":
                live.scene.entries.insert(0, entry)
            else:
                live.scene.entries.append(entry)
            live.mover = live.scene.build_mover()
            live.rebaseline()
            return live.frame(moved=True)
        if name == "deleteObject":
            before = len(live.scene.entries)
            live.scene.entries = [e for e in live.scene.entries
                                  if getattr(e, "object_id", None) != body.objectId]
            if len(live.scene.entries) == before:
                return live.frame(error=f"unknown object {body.objectId!r}")
            live.mover = live.scene.build_mover()
            live.rebaseline()
            return live.frame(moved=True)
        if name == "toggleCovers":
            live.covers_visible = not live.covers_visible
            return live.frame(moved=True)
        if name == "saveScene":
            frame = live.frame()
            frame["scene"] = save_scene(live.scene)
            return frame
        if name == "loadScene":
            try:
                scene = load_scene(body.payload or "")
            except MalformedSceneError as exc:
                return live.frame(error=str(exc))
            state["session"] = Session(scene)
            return state["session"].frame(moved=True)
        return live.frame(error=f"unknown command {name!r}")

    def _pointer(live: Session, name: str, body: CommandBody):
        x = float(body.x or 0.0)
        y = float(body.y or 0.0)
        live.last_point = (x, y)
        if name == "pointerDown":
            button = ButtonTag.RIGHT if body.button == "Right" else ButtonTag.LEFT
            live.record("down", button, x, y)
            caught = live.mover.catch((x, y), button)
            return live.frame(moved=caught)
        if name == "pointerMove":
            live.record("move", None, x, y)
            result = live.mover.move_to((x, y))
            return live.frame(moved=result.moved)
        live.record("up", None, x, y)
        live.mover.release()
        return live.frame(moved=True)

    @app.get("/scene", response_class=PlainTextResponse)
    def scene_text():
        live = session()
        return save_scene(live.scene) if live else ""

    @app.get("/baseline", response_class=PlainTextResponse)
    def baseline_text():
        live = session()
        return live.baseline if live else ""

    @app.get("/trace", response_class=PlainTextResponse)
    def trace_text():
        live = session()
        return save_trace(Trace(live.events)) if live else "dragcover-trace 1\n"

    dist = Path(__file__).parent / "dist"
    index = Path(__file__).parent / "index.html"

    @app.get("/", response_class=HTMLResponse)
    def root():
        return index.read_text(encoding="utf-8")

    if dist.is_dir():
        app.mount("/dist", StaticFiles(directory=dist), name="dist")
    return app


app = build_app()


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--port", type=int, default=8765)
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args()
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
