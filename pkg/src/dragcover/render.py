"""Deterministic scene rendering.

render_list() turns a scene into plain draw operations (bottom to top, with
optional cover-node outlines above each object); render_svg() maps those to
a hand-assembled SVG document so the bytes depend on nothing but the scene.
"""

from __future__ import annotations

import math

from .cover import Circle, Strip, cover_bounds
from .objects import (
    ChatoyantPolygonObject,
    LoopObject,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
)
from .plot import CommentObject, ScaleObject
from .scene import Scene, fmt
from .widgets import ControlProxy, GroupObject

COVER_STROKE = "#d03030"


def _shape_op(obj) -> list[dict]:
    if isinstance(obj, ScaleObject):
        r = obj.rect
        return [{"op": "rect", "x": r.x, "y": r.y, "w": r.w, "h": r.h,
                 "fill": obj.fill, "stroke": "#555555"}]
    if isinstance(obj, RectangleObject):  # covers PlotArea too
        r = obj.rect
        return [{"op": "rect", "x": r.x, "y": r.y, "w": r.w, "h": r.h,
                 "fill": obj.fill, "stroke": "#333333"}]
    if isinstance(obj, CommentObject):
        return [{"op": "text", "x": obj.center[0], "y": obj.center[1],
                 "angle": obj.angle, "text": obj.text, "fill": obj.fill}]
    if isinstance(obj, LoopObject):
        return [{"op": "polygon", "points": list(obj.points),
                 "fill": "none", "stroke": obj.fill}]
    if isinstance(obj, (RegularPolygonObject, ChatoyantPolygonObject)):
        return [{"op": "polygon", "points": list(obj.apexes),
                 "fill": obj.fill, "stroke": "#333333"}]
    if isinstance(obj, RingObject):
        return [{"op": "annulus", "cx": obj.center[0], "cy": obj.center[1],
                 "r_outer": obj.r_outer, "r_inner": obj.r_inner, "fill": obj.fill}]
    if isinstance(obj, ControlProxy):
        b = obj.bounds
        return [{"op": "rect", "x": b.x, "y": b.y, "w": b.w, "h": b.h,
                 "fill": obj.fill, "stroke": "#333333"}]
    if isinstance(obj, GroupObject):
        f = obj.frame
        ops = [{"op": "rect", "x": f.x, "y": f.y, "w": f.w, "h": f.h,
                "fill": obj.fill, "stroke": "#333333"}]
        if obj.title:
            ops.append({"op": "text", "x": f.x + 8.0, "y": f.y - 4.0,
                        "angle": 0.0, "text": obj.title, "fill": "#333333"})
        return ops
    raise TypeError(f"no renderer for {type(obj).__name__}")


def _node_ops(obj) -> list[dict]:
    ops = []
    for node in obj.cover.nodes:
        shape = node.shape
        if isinstance(shape, Circle):
            ops.append({"op": "node-circle", "cx": shape.center[0], "cy": shape.center[1],
                        "r": shape.radius, "transparent": node.transparent})
        elif isinstance(shape, Strip):
            ops.append({"op": "node-capsule", "p1": shape.p1, "p2": shape.p2,
                        "r": shape.radius, "transparent": node.transparent})
        else:
            ops.append({"op": "node-polygon", "points": list(shape.apexes),
                        "transparent": node.transparent})
    return ops


def render_list(scene: Scene, show_covers: bool = False) -> list[dict]:
    """Draw operations bottom to top; node outlines come right above the
    object they belong to."""
    ops: list[dict] = []
    for obj in reversed(scene.all_objects()):
        ops.extend(_shape_op(obj))
        if show_covers:
            ops.extend(_node_ops(obj))
    return ops


def scene_view_box(scene: Scene, margin: float = 12.0) -> tuple[float, float, float, float]:
    boxes = [cover_bounds(obj.cover) for obj in scene.all_objects()]
    boxes = [b for b in boxes if b is not None]
    if not boxes:
        return (0.0, 0.0, 100.0, 100.0)
    x0 = min(b[0] for b in boxes) - margin
    y0 = min(b[1] for b in boxes) - margin
    x1 = max(b[2] for b in boxes) + margin
    y1 = max(b[3] for b in boxes) + margin
    return (x0, y0, x1 - x0, y1 - y0)


def _points_attr(points) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)


def _capsule_path(p1, p2, r) -> str:
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    length = math.hypot(dx, dy)
    if length == 0.0:
        # degenerate strip renders as its cap circle
        return (f"M {fmt(p1[0] - r)} {fmt(p1[1])} "
                f"A {fmt(r)} {fmt(r)} 0 1 0 {fmt(p1[0] + r)} {fmt(p1[1])} "
                f"A {fmt(r)} {fmt(r)} 0 1 0 {fmt(p1[0] - r)} {fmt(p1[1])} Z")
    nx, ny = -dy / length * r, dx / length * r
    return (f"M {fmt(p1[0] + nx)} {fmt(p1[1] + ny)} "
            f"L {fmt(p2[0] + nx)} {fmt(p2[1] + ny)} "
            f"A {fmt(r)} {fmt(r)} 0 0 1 {fmt(p2[0] - nx)} {fmt(p2[1] - ny)} "
            f"L {fmt(p1[0] - nx)} {fmt(p1[1] - ny)} "
            f"A {fmt(r)} {fmt(r)} 0 0 1 {fmt(p1[0] + nx)} {fmt(p1[1] + ny)} Z")


def _escape_xml(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            .replace('"', "&quot;"))


def _svg_element(op: dict) -> str:
    kind = op["op"]
    if kind == "rect":
        return (f'<rect x="{fmt(op["x"])}" y="{fmt(op["y"])}" width="{fmt(op["w"])}" '
                f'height="{fmt(op["h"])}" fill="{op["fill"]}" stroke="{op["stroke"]}" />')
    if kind == "polygon":
        return (f'<polygon points="{_points_attr(op["points"])}" fill="{op["fill"]}" '
                f'stroke="{op["stroke"]}" />')
    if kind == "annulus":
        cx, cy, ro, ri = op["cx"], op["cy"], op["r_outer"], op["r_inner"]
        path = (f"M {fmt(cx - ro)} {fmt(cy)} "
                f"A {fmt(ro)} {fmt(ro)} 0 1 0 {fmt(cx + ro)} {fmt(cy)} "
                f"A {fmt(ro)} {fmt(ro)} 0 1 0 {fmt(cx - ro)} {fmt(cy)} Z "
                f"M {fmt(cx - ri)} {fmt(cy)} "
                f"A {fmt(ri)} {fmt(ri)} 0 1 0 {fmt(cx + ri)} {fmt(cy)} "
                f"A {fmt(ri)} {fmt(ri)} 0 1 0 {fmt(cx - ri)} {fmt(cy)} Z")
        return f'<path d="{path}" fill="{op["fill"]}" fill-rule="evenodd" stroke="#333333" />'
    if kind == "text":
        transform = ""
        if op["angle"] != 0.0:
            degrees = math.degrees(op["angle"])
            transform = f' transform="rotate({fmt(degrees)} {fmt(op["x"])} {fmt(op["y"])})"'
        return (f'<text x="{fmt(op["x"])}" y="{fmt(op["y"])}" fill="{op["fill"]}" '
                f'text-anchor="middle"{transform}>{_escape_xml(op["text"])}</text>')
    dash = ' stroke-dasharray="3 2"' if op.get("transparent") else ""
    if kind == "node-circle":
        return (f'<circle cx="{fmt(op["cx"])}" cy="{fmt(op["cy"])}" r="{fmt(op["r"])}" '
                f'fill="none" stroke="{COVER_STROKE}"{dash} />')
    if kind == "node-capsule":
        return (f'<path d="{_capsule_path(op["p1"], op["p2"], op["r"])}" '
                f'fill="none" stroke="{COVER_STROKE}"{dash} />')
    if kind == "node-polygon":
        return (f'<polygon points="{_points_attr(op["points"])}" '
                f'fill="none" stroke="{COVER_STROKE}"{dash} />')
    raise ValueError(f"unknown draw op {kind!r}")


def render_svg(scene: Scene, show_covers: bool = False) -> str:
    x, y, w, h = scene_view_box(scene)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{fmt(x)} {fmt(y)} {fmt(w)} {fmt(h)}" '
        f'width="{fmt(w)}" height="{fmt(h)}">',
    ]
    lines.extend(_svg_element(op) for op in render_list(scene, show_covers))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
