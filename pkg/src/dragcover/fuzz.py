"""Seed-deterministic event fuzzing with invariant checks.

The generator walks a working copy of the scene and emits a pointer stream
biased toward node regions (so drags actually engage covers); every
coordinate is clamped to an arena around the initial scene so drags cannot
random-walk the geometry off to infinity. After every applied event the
engine invariants are checked. The trace is a pure function of
(scene, seed, n_events), and applied coordinates are pre-quantized to the
trace file precision so replaying the written trace reproduces the run.
"""

from __future__ import annotations

import random

from .cover import Circle, Strip, cover_bounds
from .errors import DragCoverError
from .geometry import Point, dist
from .objects import ButtonTag, RegularPolygonObject, RingObject
from .plot import PlotAssembly
from .replay import Trace, TraceEvent
from .scene import Scene, fmt, load_scene, save_scene
from .widgets import GroupObject

REPORT_HEADER = "dragcover-fuzz-report 1"


def _quantize(value: float) -> float:
    return float(fmt(value))


def _arena(scene: Scene) -> tuple[float, float, float, float]:
    """Event coordinate bounds: the initial covers inflated by half."""
    boxes = [cover_bounds(obj.cover) for obj in scene.all_objects()]
    boxes = [b for b in boxes if b is not None]
    if not boxes:
        return (-200.0, -200.0, 200.0, 200.0)
    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    x1 = max(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    pad_x = max(0.5 * (x1 - x0), 100.0)
    pad_y = max(0.5 * (y1 - y0), 100.0)
    return (x0 - pad_x, y0 - pad_y, x1 + pad_x, y1 + pad_y)


def _node_anchor(rng: random.Random, shape) -> Point:
    if isinstance(shape, Circle):
        base = shape.center
        spread = shape.radius
    elif isinstance(shape, Strip):
        t = rng.random()
        base = (shape.p1[0] + t * (shape.p2[0] - shape.p1[0]),
                shape.p1[1] + t * (shape.p2[1] - shape.p1[1]))
        spread = shape.radius
    else:
        apexes = shape.apexes
        if rng.random() < 0.5:
            base = rng.choice(apexes)
        else:
            n = len(apexes)
            base = (sum(p[0] for p in apexes) / n, sum(p[1] for p in apexes) / n)
        spread = 6.0
    jitter = 1.5 * spread
    return (base[0] + rng.uniform(-jitter, jitter),
            base[1] + rng.uniform(-jitter, jitter))


def _biased_point(rng: random.Random, mover) -> Point:
    candidates = [obj for obj in mover.entries if obj.cover.nodes]
    if not candidates:
        return (rng.uniform(-100, 100), rng.uniform(-100, 100))
    obj = rng.choice(candidates)
    node = rng.choice(obj.cover.nodes)
    return _node_anchor(rng, node.shape)


def check_invariants(scene: Scene, mover) -> list[str]:
    """All per-object engine invariants that must hold between events."""
    problems: list[str] = []
    for obj in scene.all_objects():
        before = obj.cover
        after = obj.define_cover()
        if before != after:
            problems.append(f"{obj.object_id}: stored cover is stale")
        if isinstance(obj, RingObject):
            if not obj.r_inner + obj.min_gap <= obj.r_outer:
                problems.append(
                    f"{obj.object_id}: ring order broken "
                    f"({fmt(obj.r_inner)} + {fmt(obj.min_gap)} > {fmt(obj.r_outer)})")
        if isinstance(obj, RegularPolygonObject):
            radii = [dist(p, obj.center) for p in obj.apexes]
            if max(radii) - min(radii) > 1e-9 * max(obj.circumradius, 1.0):
                problems.append(f"{obj.object_id}: apexes lost regularity")
        if isinstance(obj, GroupObject):
            slack = 1e-9 * (1.0 + abs(obj.frame.w) + abs(obj.frame.h))
            for child in obj.children:
                cx, cy = obj.child_position(child)
                if (cx < obj.frame.left + obj.padding - slack
                        or cx + child.size[0] > obj.frame.right - obj.padding + slack
                        or cy < obj.frame.top + obj.padding - slack
                        or cy + child.size[1] > obj.frame.bottom - obj.padding + slack):
                    problems.append(
                        f"{obj.object_id}: child {child.control_id} escaped the padded frame")
    for entry in scene.entries:
        if isinstance(entry, PlotAssembly):
            for scale in entry.scales:
                want = entry.area.rect.w if scale.orientation.value == "horizontal" \
                    else entry.area.rect.h
                have = scale.rect.w if scale.orientation.value == "horizontal" else scale.rect.h
                if have != want:
                    problems.append(f"{scale.object_id}: length off the matching area side")
    return problems


def fuzz(scene: Scene, seed: int, n_events: int) -> tuple[Trace, str]:
    """Generate and apply a biased event stream; returns (trace, report)."""
    work = load_scene(save_scene(scene))
    mover = work.build_mover()
    rng = random.Random(seed)
    ax0, ay0, ax1, ay1 = _arena(work)

    def clamp(x: float, y: float) -> tuple[float, float]:
        return (_quantize(min(max(x, ax0), ax1)), _quantize(min(max(y, ay0), ay1)))

    events: list[TraceEvent] = []
    violations: list[str] = []
    # the emitted trace must keep down/up alternation even when a down
    # misses every cover, so track the held button, not the drag state
    held = False
    last = (0.0, 0.0)
    for k in range(n_events):
        if not held:
            if rng.random() < 0.85:
                x, y = clamp(*_biased_point(rng, mover))
                button = ButtonTag.RIGHT if rng.random() < 0.2 else ButtonTag.LEFT
                events.append(TraceEvent(k, "down", button, x, y))
                mover.catch((x, y), button)
                held = True
            else:
                x, y = clamp(*_biased_point(rng, mover))
                events.append(TraceEvent(k, "move", None, x, y))
                mover.move_to((x, y))
        else:
            roll = rng.random()
            anchor = mover.drag.anchor if mover.drag is not None else last
            if roll < 0.12:
                x, y = _quantize(anchor[0]), _quantize(anchor[1])
                events.append(TraceEvent(k, "up", None, x, y))
                mover.release()
                held = False
            else:
                if roll < 0.25:
                    x, y = clamp(*_biased_point(rng, mover))
                else:
                    x, y = clamp(anchor[0] + rng.gauss(0.0, 12.0),
                                 anchor[1] + rng.gauss(0.0, 12.0))
                events.append(TraceEvent(k, "move", None, x, y))
                anchor_before = mover.drag.anchor if mover.drag is not None else None
                result = mover.move_to((x, y))
                if (anchor_before is not None and not result.moved
                        and mover.drag.anchor != anchor_before):
                    violations.append(f"event={k} check=anchor-stability "
                                      f"detail=\"anchor drifted on a rejected move\"")
        last = (x, y)
        try:
            for problem in check_invariants(work, mover):
                violations.append(f'event={k} check=invariant detail="{problem}"')
        except DragCoverError as exc:
            violations.append(f'event={k} check=exception detail="{exc}"')
    report_lines = [REPORT_HEADER, f"seed {seed} events {n_events}"]
    for violation in violations:
        prefix = violation.split()[0].split("=")[1]
        report_lines.append(
            f"violation {violation} reproduce=\"--seed {seed} --events {int(prefix) + 1}\"")
    report_lines.append(f"violations {len(violations)}")
    return Trace(events), "\n".join(report_lines) + "\n"
