"""Pointer traces and deterministic replay.

A trace serializes the down/move/up protocol; replaying it through a fresh
mover is a pure function of (scene, trace), so identical inputs give
byte-identical snapshots. Snapshots record the full scene, the drag state,
and the sensed cursor at each checkpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import CursorTag
from .errors import MalformedTraceError
from .objects import ButtonTag
from .scene import Scene, fmt, load_scene, save_scene

TRACE_HEADER = "dragcover-trace 1"
SNAPSHOT_HEADER = "dragcover-snapshot 1"


@dataclass
class TraceEvent:
    seq: int
    kind: str  # down | move | up
    button: ButtonTag | None
    x: float
    y: float


@dataclass
class Trace:
    events: list[TraceEvent]


def save_trace(trace: Trace) -> str:
    lines = [TRACE_HEADER]
    for ev in trace.events:
        if ev.kind == "down":
            lines.append(f"event {ev.seq} down {ev.button.value} {fmt(ev.x)} {fmt(ev.y)}")
        else:
            lines.append(f"event {ev.seq} {ev.kind} {fmt(ev.x)} {fmt(ev.y)}")
    return "\n".join(lines) + "\n"


def load_trace(text: str) -> Trace:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != TRACE_HEADER:
        raise MalformedTraceError(f"missing header {TRACE_HEADER!r}")
    events: list[TraceEvent] = []
    last_seq = None
    down = False
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) < 3 or tokens[0] != "event":
            raise MalformedTraceError(f"bad event line {line!r}")
        try:
            seq = int(tokens[1])
        except ValueError:
            raise MalformedTraceError(f"bad sequence number in {line!r}") from None
        if last_seq is not None and seq <= last_seq:
            raise MalformedTraceError("sequence numbers must strictly increase", seq)
        last_seq = seq
        kind = tokens[2]
        button = None
        try:
            if kind == "down":
                if len(tokens) != 6:
                    raise MalformedTraceError("down needs button and coordinates", seq)
                button = ButtonTag.LEFT if tokens[3] == "Left" else (
                    ButtonTag.RIGHT if tokens[3] == "Right" else None)
                if button is None:
                    raise MalformedTraceError(f"unknown button {tokens[3]!r}", seq)
                x, y = float(tokens[4]), float(tokens[5])
            elif kind in ("move", "up"):
                if len(tokens) != 5:
                    raise MalformedTraceError(f"{kind} needs coordinates", seq)
                x, y = float(tokens[3]), float(tokens[4])
            else:
                raise MalformedTraceError(f"unknown event kind {kind!r}", seq)
        except ValueError:
            raise MalformedTraceError(f"bad coordinate in {line!r}", seq) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise MalformedTraceError(f"non-finite coordinate in {line!r}", seq)
        if kind == "down":
            if down:
                raise MalformedTraceError("down while the button is already down", seq)
            down = True
        elif kind == "up":
            if not down:
                raise MalformedTraceError("up without a preceding down", seq)
            down = False
        events.append(TraceEvent(seq, kind, button, x, y))
    return Trace(events)


def _snapshot_checkpoint(label: str, mover, scene: Scene, cursor: CursorTag) -> list[str]:
    lines = [f"checkpoint {label}"]
    if mover.drag is None:
        lines.append("drag none")
    else:
        d = mover.drag
        lines.append(
            f"drag object={mover.entries.index(d.obj)} node={d.node_index} "
            f"button={d.button.value} anchor={fmt(d.anchor[0])} {fmt(d.anchor[1])}"
        )
    lines.append(f"cursor {cursor.value}")
    lines.append("begin-scene")
    lines.append(save_scene(scene).rstrip("\n"))
    lines.append("end-scene")
    return lines


def replay(scene: Scene, trace: Trace, every_event: bool = False) -> str:
    """Apply a trace to a copy of the scene; returns the snapshot text."""
    work = load_scene(save_scene(scene))
    mover = work.build_mover()
    lines = [SNAPSHOT_HEADER]
    cursor = CursorTag.ARROW
    for ev in trace.events:
        pt = (ev.x, ev.y)
        if ev.kind == "down":
            caught = mover.catch(pt, ev.button)
            cursor = mover.drag.cursor if caught else mover.sense_cursor(pt)
        elif ev.kind == "move":
            cursor = mover.move_to(pt).cursor
        else:
            mover.release()
            cursor = mover.sense_cursor(pt)
        if every_event:
            lines.extend(_snapshot_checkpoint(f"event {ev.seq}", mover, work, cursor))
    lines.extend(_snapshot_checkpoint("end", mover, work, cursor))
    return "\n".join(lines) + "\n"
