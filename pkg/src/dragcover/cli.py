"""Command line interface.

Subcommands: replay, render, fuzz, roundtrip. Exit codes: 0 success,
1 invariant violation, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import MalformedSceneError, MalformedTraceError
from .fuzz import fuzz
from .render import render_svg
from .replay import load_trace, replay, save_trace
from .scene import load_scene, save_scene

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_MALFORMED = 2


def _read_scene(path: str):
    return load_scene(Path(path).read_text(encoding="utf-8"))


def _cmd_replay(args) -> int:
    scene = _read_scene(args.scene)
    trace = load_trace(Path(args.trace).read_text(encoding="utf-8"))
    snapshot = replay(scene, trace, every_event=args.every_event)
    Path(args.out).write_text(snapshot, encoding="utf-8")
    return EXIT_OK


def _cmd_render(args) -> int:
    scene = _read_scene(args.scene)
    Path(args.out).write_text(render_svg(scene, show_covers=args.covers), encoding="utf-8")
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    scene = _read_scene(args.scene)
    trace, report = fuzz(scene, args.seed, args.events)
    Path(args.out).write_text(save_trace(trace), encoding="utf-8")
    sys.stdout.write(report)
    return EXIT_OK if report.rstrip().endswith("violations 0") else EXIT_VIOLATION


def _cmd_roundtrip(args) -> int:
    text = Path(args.scene).read_text(encoding="utf-8")
    first = save_scene(load_scene(text))
    second = save_scene(load_scene(first))
    if first != second:
        sys.stderr.write(f"{args.scene}: round trip is not the identity\n")
        return EXIT_VIOLATION
    sys.stdout.write(f"{args.scene}: round trip OK ({len(first.splitlines())} lines)\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dragcover",
        description="Headless tools for cover-based moveable scenes: "
                    "deterministic replay, SVG rendering, invariant fuzzing, "
                    "and scene round-trip checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replay", help="apply a pointer trace to a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--trace", required=True)
    p.add_argument("--every-event", action="store_true",
                   help="checkpoint after every event instead of only at the end")
    p.add_argument("--out", required=True, help="snapshot output file")
    p.set_defaults(run=_cmd_replay)

    p = sub.add_parser("render", help="render a scene to SVG")
    p.add_argument("--scene", required=True)
    p.add_argument("--covers", action="store_true", help="outline every cover node")
    p.add_argument("--out", required=True, help="SVG output file")
    p.set_defaults(run=_cmd_render)

    p = sub.add_parser("fuzz", help="run seeded event fuzzing with invariant checks")
    p.add_argument("--scene", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--events", type=int, required=True)
    p.add_argument("--out", required=True, help="trace output file")
    p.set_defaults(run=_cmd_fuzz)

    p = sub.add_parser("roundtrip", help="check save/load identity for a scene")
    p.add_argument("--scene", required=True)
    p.set_defaults(run=_cmd_roundtrip)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (MalformedSceneError, MalformedTraceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
