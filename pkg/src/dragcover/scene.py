"""Scene files.

Line-stable text format: fixed key order per object kind, every float
formatted to six decimals, strings quoted with backslash escapes. Saving a
loaded scene reproduces it byte for byte, which is what the golden replay
and round-trip checks rely on.
"""

from __future__ import annotations

import math

from .cover import Resizing
from .errors import MalformedSceneError
from .geometry import Rect
from .mover import Mover
from .objects import (
    ButtonTag,
    ChatoyantPolygonObject,
    LoopObject,
    PolygonVariant,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
    SceneObject,
)
from .plot import CommentObject, Orientation, PlotArea, PlotAssembly, ScaleObject
from .widgets import SIDE_ORDER, ControlProxy, GroupChild, GroupObject

FORMAT_VERSION = 1
_HEADER = f"dragcover-scene {FORMAT_VERSION}"


def fmt(value: float) -> str:
    """Canonical six-decimal float formatting; negative zero collapses."""
    text = "%.6f" % float(value)
    return "0.000000" if text == "-0.000000" else text


def quote(text: str) -> str:
    escaped = (text.replace("\\", "\\\\").replace('"', '\\"')
               .replace("\n", "\\n").replace("\r", "\\r"))
    return f'"{escaped}"'


def _tokenize(line: str, lineno: int) -> list[str]:
    tokens: list[str] = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch.isspace():
            i += 1
            continue
        if ch == '"':
            i += 1
            out = []
            while i < n and line[i] != '"':
                if line[i] == "\\":
                    i += 1
                    if i >= n:
                        raise MalformedSceneError(f"line {lineno}: dangling escape")
                    out.append({"n": "\n", "r": "\r", '"': '"', "\\": "\\"}.get(line[i], line[i]))
                else:
                    out.append(line[i])
                i += 1
            if i >= n:
                raise MalformedSceneError(f"line {lineno}: unterminated string")
            i += 1
            tokens.append("".join(out))
        else:
            j = i
            while j < n and not line[j].isspace():
                j += 1
            tokens.append(line[i:j])
            i = j
    return tokens


class Scene:
    """Ordered objects and assemblies; index 0 is topmost for picking."""

    def __init__(self, entries=None):
        self.entries: list = list(entries or [])

    def build_mover(self, rotation_button: ButtonTag = ButtonTag.RIGHT) -> Mover:
        mover = Mover(rotation_button)
        for entry in self.entries:
            if isinstance(entry, PlotAssembly):
                entry.into_mover(mover, len(mover.entries))
            else:
                mover.add(entry)
        return mover

    def all_objects(self) -> list[SceneObject]:
        out: list[SceneObject] = []
        for entry in self.entries:
            if isinstance(entry, PlotAssembly):
                out.extend(entry.parts())
            else:
                out.append(entry)
        return out


# --- saving ----------------------------------------------------------------

def _rect_line(key: str, rect: Rect) -> str:
    return f"{key} {fmt(rect.x)} {fmt(rect.y)} {fmt(rect.w)} {fmt(rect.h)}"


def _common_tail(obj: SceneObject) -> list[str]:
    lines = [f"fill {obj.fill}"]
    if obj.move_range is not None:
        lines.append(_rect_line("range", obj.move_range))
    return lines


def _save_rectangle(obj: RectangleObject) -> list[str]:
    return [
        f"id {obj.object_id}",
        _rect_line("rect", obj.rect),
        f"resizing {obj.resizing.value}",
        f"corner-radius {fmt(obj.corner_radius)}",
        f"half-width {fmt(obj.half_width)}",
        f"min-size {fmt(obj.min_width)} {fmt(obj.min_height)}",
        *_common_tail(obj),
    ]


def _save_loop(obj: LoopObject) -> list[str]:
    lines = [
        f"id {obj.object_id}",
        f"node-radius {fmt(obj.node_radius)}",
        f"half-width {fmt(obj.half_width)}",
        *_common_tail(obj),
    ]
    lines.extend(f"point {fmt(x)} {fmt(y)}" for x, y in obj.points)
    return lines


def _save_regular(obj) -> list[str]:
    return [
        f"id {obj.object_id}",
        f"center {fmt(obj.center[0])} {fmt(obj.center[1])}",
        f"circumradius {fmt(obj.circumradius)}",
        f"apex-count {obj.n_apexes}",
        f"phase {fmt(obj.phase)}",
        f"variant {obj.variant.value}",
        f"min-radius {fmt(obj.min_radius)}",
        f"apex-radius {fmt(obj.apex_radius)}",
        *_common_tail(obj),
    ]


def _save_chatoyant(obj) -> list[str]:
    lines = [
        f"id {obj.object_id}",
        f"center {fmt(obj.center[0])} {fmt(obj.center[1])}",
        f"apex-radius {fmt(obj.apex_radius)}",
        *_common_tail(obj),
    ]
    lines.extend(f"apex {fmt(x)} {fmt(y)}" for x, y in obj.apexes)
    return lines


def _save_ring(obj: RingObject) -> list[str]:
    return [
        f"id {obj.object_id}",
        f"center {fmt(obj.center[0])} {fmt(obj.center[1])}",
        f"outer-radius {fmt(obj.r_outer)}",
        f"inner-radius {fmt(obj.r_inner)}",
        f"node-radius {fmt(obj.node_radius)}",
        f"min-gap {fmt(obj.min_gap)}",
        *_common_tail(obj),
    ]


def _save_control(obj: ControlProxy) -> list[str]:
    return [
        f"id {obj.object_id}",
        _rect_line("bounds", obj.bounds),
        f"resizing {obj.resizing.value}",
        f"moveable {'true' if obj.moveable else 'false'}",
        f"frame-width {fmt(obj.frame_width)}",
        f"corner-radius {fmt(obj.corner_radius)}",
        f"min-size {fmt(obj.min_size[0])} {fmt(obj.min_size[1])}",
        *_common_tail(obj),
    ]


def _save_group(obj: GroupObject) -> list[str]:
    sides = [name for name, on in zip(SIDE_ORDER, obj.resizable_sides) if on]
    lines = [
        f"id {obj.object_id}",
        _rect_line("frame", obj.frame),
        f"title {quote(obj.title)}",
        "sides " + (" ".join(sides) if sides else "none"),
        f"padding {fmt(obj.padding)}",
        f"corner-radius {fmt(obj.corner_radius)}",
        f"half-width {fmt(obj.half_width)}",
        *_common_tail(obj),
    ]
    lines.extend(
        f"child {c.control_id} {fmt(c.anchor[0])} {fmt(c.anchor[1])} "
        f"{fmt(c.size[0])} {fmt(c.size[1])}"
        for c in obj.children
    )
    return lines


def _save_comment(obj: CommentObject) -> list[str]:
    return [
        "comment",
        f"id {obj.object_id}",
        f"parent {obj.parent_id}",
        f"text {quote(obj.text)}",
        f"center {fmt(obj.center[0])} {fmt(obj.center[1])}",
        f"angle {fmt(obj.angle)}",
        f"extent {fmt(obj.extent[0])} {fmt(obj.extent[1])}",
        f"anchor {fmt(obj.anchor[0])} {fmt(obj.anchor[1])}",
        f"fill {obj.fill}",
        "end",
    ]


def _save_plot(assembly: PlotAssembly) -> list[str]:
    area = assembly.area
    lines = [f"id {assembly.object_id}", "area"]
    lines += [
        f"id {area.object_id}",
        _rect_line("rect", area.rect),
        f"corner-radius {fmt(area.corner_radius)}",
        f"half-width {fmt(area.half_width)}",
        f"min-size {fmt(area.min_width)} {fmt(area.min_height)}",
        f"fill {area.fill}",
        "end",
    ]
    for scale in assembly.scales:
        lines += [
            "scale",
            f"id {scale.object_id}",
            _rect_line("rect", scale.rect),
            f"orientation {scale.orientation.value}",
            f"fill {scale.fill}",
            "end",
        ]
    for comment in assembly.comments:
        lines += _save_comment(comment)
    return lines


_SAVERS = {
    "rectangle": _save_rectangle,
    "loop": _save_loop,
    "regular-polygon": _save_regular,
    "chatoyant-polygon": _save_chatoyant,
    "ring": _save_ring,
    "control-frame": _save_control,
    "group": _save_group,
}


def save_scene(scene: Scene) -> str:
    lines = [_HEADER]
    for entry in scene.entries:
        if isinstance(entry, PlotAssembly):
            lines.append("object plot")
            lines.extend(_save_plot(entry))
        else:
            saver = _SAVERS.get(entry.kind)
            if saver is None:
                raise MalformedSceneError(f"object kind {entry.kind!r} is not serializable")
            lines.append(f"object {entry.kind}")
            lines.extend(saver(entry))
        lines.append("end")
    return "\n".join(lines) + "\n"


# --- loading ------------------------------------------------------------------

class _Block:
    """One parsed block: repeated keys allowed, nested blocks by name."""

    def __init__(self, name: str, lineno: int):
        self.name = name
        self.lineno = lineno
        self.fields: list[tuple[str, list[str]]] = []
        self.children: list["_Block"] = []

    def get(self, key: str, required: bool = True) -> list[str] | None:
        for k, values in self.fields:
            if k == key:
                return values
        if required:
            raise MalformedSceneError(f"{self.name} block at line {self.lineno}: missing {key!r}")
        return None

    def get_all(self, key: str) -> list[list[str]]:
        return [values for k, values in self.fields if k == key]


_NESTED = {"plot": ("area", "scale", "comment")}


def _read_block(name, numbered, i, lineno_of):
    block = _Block(name, lineno_of(i - 1))
    nested = _NESTED.get(name, ())
    while i < len(numbered):
        lineno, tokens = numbered[i]
        i += 1
        key = tokens[0]
        if key == "end":
            return block, i
        if key in nested:
            child, i = _read_block(key, numbered, i, lineno_of)
            block.children.append(child)
        else:
            block.fields.append((key, tokens[1:]))
    raise MalformedSceneError(f"{name} block at line {block.lineno}: missing end")


def _floats(values: list[str], block: _Block, key: str) -> list[float]:
    try:
        out = [float(v) for v in values]
    except ValueError:
        raise MalformedSceneError(
            f"{block.name} block at line {block.lineno}: bad number in {key!r}") from None
    if not all(math.isfinite(v) for v in out):
        raise MalformedSceneError(
            f"{block.name} block at line {block.lineno}: non-finite number in {key!r}")
    return out


def _num(block: _Block, key: str) -> float:
    values = block.get(key)
    if len(values) != 1:
        raise MalformedSceneError(f"{block.name} block: {key!r} needs one number")
    return _floats(values, block, key)[0]


def _rect_of(block: _Block, key: str) -> Rect:
    values = block.get(key)
    if len(values) != 4:
        raise MalformedSceneError(f"{block.name} block: {key!r} needs 4 numbers")
    return Rect(*_floats(values, block, key))


def _range_of(block: _Block) -> Rect | None:
    values = block.get("range", required=False)
    if values is None:
        return None
    return Rect(*_floats(values, block, "range"))


def _fill_of(block: _Block) -> str:
    return block.get("fill")[0]


def _enum_of(enum_cls, token: str, block: _Block, key: str):
    for member in enum_cls:
        if member.value == token:
            return member
    raise MalformedSceneError(
        f"{block.name} block at line {block.lineno}: unknown {key} {token!r}")


def _load_rectangle(block: _Block) -> RectangleObject:
    min_w, min_h = _floats(block.get("min-size"), block, "min-size")
    return RectangleObject(
        rect=_rect_of(block, "rect"),
        resizing=_enum_of(Resizing, block.get("resizing")[0], block, "resizing"),
        corner_radius=_num(block, "corner-radius"),
        half_width=_num(block, "half-width"),
        min_width=min_w, min_height=min_h,
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_loop(block: _Block) -> LoopObject:
    points = [tuple(_floats(v, block, "point")) for v in block.get_all("point")]
    return LoopObject(
        points=points,
        node_radius=_num(block, "node-radius"),
        half_width=_num(block, "half-width"),
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_regular(block: _Block) -> RegularPolygonObject:
    return RegularPolygonObject(
        center=tuple(_floats(block.get("center"), block, "center")),
        circumradius=_num(block, "circumradius"),
        n_apexes=int(block.get("apex-count")[0]),
        phase=_num(block, "phase"),
        variant=_enum_of(PolygonVariant, block.get("variant")[0], block, "variant"),
        min_radius=_num(block, "min-radius"),
        apex_radius=_num(block, "apex-radius"),
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_chatoyant(block: _Block) -> ChatoyantPolygonObject:
    apexes = [tuple(_floats(v, block, "apex")) for v in block.get_all("apex")]
    return ChatoyantPolygonObject(
        center=tuple(_floats(block.get("center"), block, "center")),
        apexes=apexes,
        apex_radius=_num(block, "apex-radius"),
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_ring(block: _Block) -> RingObject:
    return RingObject(
        center=tuple(_floats(block.get("center"), block, "center")),
        r_outer=_num(block, "outer-radius"),
        r_inner=_num(block, "inner-radius"),
        node_radius=_num(block, "node-radius"),
        min_gap=_num(block, "min-gap"),
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_control(block: _Block) -> ControlProxy:
    min_size = tuple(_floats(block.get("min-size"), block, "min-size"))
    return ControlProxy(
        bounds=_rect_of(block, "bounds"),
        resizing=_enum_of(Resizing, block.get("resizing")[0], block, "resizing"),
        moveable=block.get("moveable")[0] == "true",
        frame_width=_num(block, "frame-width"),
        corner_radius=_num(block, "corner-radius"),
        min_size=min_size,
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_group(block: _Block) -> GroupObject:
    side_tokens = block.get("sides")
    if side_tokens == ["none"]:
        sides = (False, False, False, False)
    else:
        for token in side_tokens:
            if token not in SIDE_ORDER:
                raise MalformedSceneError(f"group block: unknown side {token!r}")
        sides = tuple(name in side_tokens for name in SIDE_ORDER)
    children = []
    for values in block.get_all("child"):
        if len(values) != 5:
            raise MalformedSceneError("group block: child needs id + 4 numbers")
        nums = _floats(values[1:], block, "child")
        children.append(GroupChild(values[0], (nums[0], nums[1]), (nums[2], nums[3])))
    return GroupObject(
        frame=_rect_of(block, "frame"),
        title=block.get("title")[0],
        resizable_sides=sides,
        children=children,
        padding=_num(block, "padding"),
        corner_radius=_num(block, "corner-radius"),
        half_width=_num(block, "half-width"),
        fill=_fill_of(block), object_id=block.get("id")[0],
        move_range=_range_of(block),
    )


def _load_plot(block: _Block) -> PlotAssembly:
    area_block = None
    scale_blocks = []
    comment_blocks = []
    for child in block.children:
        if child.name == "area":
            area_block = child
        elif child.name == "scale":
            scale_blocks.append(child)
        else:
            comment_blocks.append(child)
    if area_block is None:
        raise MalformedSceneError(f"plot block at line {block.lineno}: missing area")
    min_w, min_h = _floats(area_block.get("min-size"), area_block, "min-size")
    area = PlotArea(
        rect=_rect_of(area_block, "rect"),
        corner_radius=_num(area_block, "corner-radius"),
        half_width=_num(area_block, "half-width"),
        min_width=min_w, min_height=min_h,
        fill=_fill_of(area_block), object_id=area_block.get("id")[0],
    )
    assembly = PlotAssembly(area, object_id=block.get("id")[0])
    for sb in scale_blocks:
        assembly.add_scale(ScaleObject(
            rect=_rect_of(sb, "rect"),
            orientation=_enum_of(Orientation, sb.get("orientation")[0], sb, "orientation"),
            fill=_fill_of(sb), object_id=sb.get("id")[0],
        ))
    for cb in comment_blocks:
        comment = CommentObject(
            text=cb.get("text")[0],
            center=tuple(_floats(cb.get("center"), cb, "center")),
            extent=tuple(_floats(cb.get("extent"), cb, "extent")),
            angle=_num(cb, "angle"),
            parent_id=cb.get("parent")[0],
            anchor=tuple(_floats(cb.get("anchor"), cb, "anchor")),
            fill=_fill_of(cb), object_id=cb.get("id")[0],
        )
        # the stored anchor is authoritative; recomputing it from the center
        # could flip the sixth decimal and break round-trip identity
        comment.assembly = assembly
        assembly.frame_of(comment.parent_id)  # validates the parent link
        assembly.comments.append(comment)
    return assembly


_LOADERS = {
    "rectangle": _load_rectangle,
    "loop": _load_loop,
    "regular-polygon": _load_regular,
    "chatoyant-polygon": _load_chatoyant,
    "ring": _load_ring,
    "control-frame": _load_control,
    "group": _load_group,
}


def load_scene(text: str) -> Scene:
    numbered = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        numbered.append((lineno, _tokenize(line, lineno)))
    if not numbered or numbered[0][1] != _HEADER.split():
        raise MalformedSceneError(f"missing header {_HEADER!r}")
    entries = []
    i = 1
    while i < len(numbered):
        lineno, tokens = numbered[i]
        i += 1
        if tokens[0] != "object" or len(tokens) != 2:
            raise MalformedSceneError(f"line {lineno}: expected 'object <kind>'")
        kind = tokens[1]
        block, i = _read_block(kind, numbered, i, lambda j: numbered[j][0])
        if kind == "plot":
            entries.append(_load_plot(block))
        elif kind in _LOADERS:
            entries.append(_LOADERS[kind](block))
        else:
            raise MalformedSceneError(f"line {lineno}: unknown object kind {kind!r}")
    return Scene(entries)


def round_trip(scene: Scene) -> Scene:
    """Save then load; the result is structurally identical to the input."""
    return load_scene(save_scene(scene))


def scenes_equal(a: Scene, b: Scene) -> bool:
    return save_scene(a) == save_scene(b)
