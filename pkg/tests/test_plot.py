"""Plot assemblies: windows, registration order, synchronous/related moves."""

import math

import pytest

from dragcover.cover import FALL_THROUGH, hit_index
from dragcover.errors import BadTargetError
from dragcover.geometry import Rect, dist
from dragcover.mover import Mover
from dragcover.objects import ButtonTag
from dragcover.plot import (
    CommentObject,
    Orientation,
    PlotArea,
    PlotAssembly,
    ScaleObject,
    assembly_move_node,
)


def build_assembly():
    area = PlotArea(Rect(0, 0, 200, 100), corner_radius=8, object_id="area")
    asm = PlotAssembly(area, object_id="asm")
    # vertical scale overlapping the area's top-left corner
    asm.add_scale(ScaleObject(Rect(-30, -10, 44, 100), Orientation.VERTICAL,
                              object_id="sy"))
    asm.add_scale(ScaleObject(Rect(0, 120, 200, 30), Orientation.HORIZONTAL,
                              object_id="sx"))
    asm.add_comment(CommentObject("c0", (50, 25), (40, 12), parent_id="area",
                                  object_id="c0"))
    asm.add_comment(CommentObject("c1", (150, 75), (40, 12), parent_id="area",
                                  object_id="c1"))
    asm.add_comment(CommentObject("c2", (100, 135), (40, 12), parent_id="sx",
                                  object_id="c2"))
    return asm


class TestScaleCover:
    def test_window_over_overlapped_corner(self):
        asm = build_assembly()
        scale = asm.scales[0]
        windows = [r for r in scale._roles if r[0] == "window"]
        assert windows == [("window", 0)]  # the TL corner looks out
        assert len(scale.cover) == 2

    def test_no_windows_away_from_corners(self):
        asm = build_assembly()
        scale = asm.scales[1]  # below the area, corners on its top edge?
        # sx spans y in [120, 150]; area corners at y in {0, 100}: no overlap
        assert len(scale.cover) == 1

    def test_window_point_falls_through(self):
        asm = build_assembly()
        scale = asm.scales[0]
        assert hit_index(scale.cover, (0, 0)) is FALL_THROUGH

    def test_scale_length_synced_at_attach(self):
        asm = build_assembly()
        assert asm.scales[0].rect.h == asm.area.rect.h
        assert asm.scales[1].rect.w == asm.area.rect.w


class TestIntoMover:
    def test_registration_order(self):
        asm = build_assembly()
        mover = Mover()
        asm.into_mover(mover, 0)
        ids = [obj.object_id for obj in mover.entries]
        assert ids == ["c0", "c1", "c2", "sy", "sx", "area"]

    def test_second_assembly_stacks_above(self):
        asm1 = build_assembly()
        area2 = PlotArea(Rect(400, 0, 120, 80), object_id="area2")
        asm2 = PlotAssembly(area2, object_id="asm2")
        mover = Mover()
        asm1.into_mover(mover, 0)
        asm2.into_mover(mover, 0)
        assert mover.entries[0].object_id == "area2"
        assert mover.entries[1].object_id == "c0"

    def test_area_only_assembly(self):
        area = PlotArea(Rect(0, 0, 100, 80), object_id="solo")
        asm = PlotAssembly(area)
        mover = Mover()
        asm.into_mover(mover, 0)
        assert [o.object_id for o in mover.entries] == ["solo"]


class TestSynchronousMove:
    def test_area_body_moves_everything(self):
        asm = build_assembly()
        body = len(asm.area.cover) - 1
        scale_pos = (asm.scales[0].rect.x, asm.scales[0].rect.y)
        comment_pos = asm.comments[2].center
        assert assembly_move_node(asm, asm.area, body, 7, 0)
        assert asm.area.rect.x == 7
        assert (asm.scales[0].rect.x, asm.scales[0].rect.y) == (scale_pos[0] + 7, scale_pos[1])
        assert asm.comments[2].center == (comment_pos[0] + 7, comment_pos[1])

    def test_body_move_is_rigid(self):
        asm = build_assembly()
        pts_before = [asm.area.rect.corners()[0], asm.scales[0].rect.corners()[0],
                      asm.comments[0].center, asm.comments[2].center]
        body = len(asm.area.cover) - 1
        assembly_move_node(asm, asm.area, body, 13, -8)
        pts_after = [asm.area.rect.corners()[0], asm.scales[0].rect.corners()[0],
                     asm.comments[0].center, asm.comments[2].center]
        for i in range(len(pts_before)):
            assert pts_after[i] == (pts_before[i][0] + 13, pts_before[i][1] - 8)
            for j in range(i + 1, len(pts_before)):
                assert dist(pts_after[i], pts_after[j]) == pytest.approx(
                    dist(pts_before[i], pts_before[j]), abs=1e-12)

    def test_scale_body_moves_its_comments(self):
        asm = build_assembly()
        scale = asm.scales[1]
        body = len(scale.cover) - 1
        c2_before = asm.comments[2].center
        c0_before = asm.comments[0].center
        assert assembly_move_node(asm, scale, body, 0, 12)
        assert asm.comments[2].center == (c2_before[0], c2_before[1] + 12)
        assert asm.comments[0].center == c0_before  # area comments stay

    def test_bad_target(self):
        asm = build_assembly()
        stranger = PlotArea(Rect(0, 0, 50, 50))
        with pytest.raises(BadTargetError):
            assembly_move_node(asm, stranger, 0, 1, 1)


class TestAreaResize:
    def test_comment_anchor_preserved(self):
        asm = build_assembly()
        # c0 at (50, 25) in a 200x100 frame: anchor (0.25, 0.25)
        assert asm.comments[0].anchor == (0.25, 0.25)
        right = next(i for i, r in enumerate(asm.area._roles) if r == ("side", "right"))
        assert assembly_move_node(asm, asm.area, right, 200, 0)
        assert asm.area.rect.w == 400
        assert asm.comments[0].center == (100.0, 25.0)
        assert asm.comments[0].anchor == (0.25, 0.25)

    def test_scale_tracks_matching_side(self):
        asm = build_assembly()
        right = next(i for i, r in enumerate(asm.area._roles) if r == ("side", "right"))
        assembly_move_node(asm, asm.area, right, 120, 0)
        assert asm.scales[1].rect.w == asm.area.rect.w == 320
        assert asm.scales[0].rect.h == asm.area.rect.h == 100
        bottom = next(i for i, r in enumerate(asm.area._roles) if r == ("side", "bottom"))
        assembly_move_node(asm, asm.area, bottom, 0, 60)
        assert asm.scales[0].rect.h == asm.area.rect.h == 160

    def test_scale_offsets_preserved(self):
        asm = build_assembly()
        sx = asm.scales[1]
        perp_before = sx.rect.y - asm.area.rect.bottom
        bottom = next(i for i, r in enumerate(asm.area._roles) if r == ("side", "bottom"))
        assembly_move_node(asm, asm.area, bottom, 0, 40)
        assert sx.rect.y - asm.area.rect.bottom == pytest.approx(perp_before)

    def test_scale_comment_follows_scale_frame(self):
        asm = build_assembly()
        c2_anchor = asm.comments[2].anchor
        bottom = next(i for i, r in enumerate(asm.area._roles) if r == ("side", "bottom"))
        assembly_move_node(asm, asm.area, bottom, 0, 40)
        frame = asm.scales[1].rect
        want = (frame.x + c2_anchor[0] * frame.w, frame.y + c2_anchor[1] * frame.h)
        assert asm.comments[2].center == pytest.approx(want)


class TestComment:
    def test_free_move_recomputes_anchor(self):
        asm = build_assembly()
        c0 = asm.comments[0]
        assert c0.move_node(0, 50, 25, pt_mouse=(100, 50), button=ButtonTag.LEFT)
        assert c0.center == (100.0, 50.0)
        assert c0.anchor == (0.5, 0.5)

    def test_right_drag_rotates_about_center(self):
        asm = build_assembly()
        c0 = asm.comments[0]
        center = c0.center
        prev = (center[0] + 10, center[1])
        now = (center[0], center[1] + 10)
        assert c0.move_node(0, now[0] - prev[0], now[1] - prev[1],
                            pt_mouse=now, button=ButtonTag.RIGHT)
        assert c0.angle == pytest.approx(math.pi / 2)
        assert c0.center == center
        assert c0.anchor == (0.25, 0.25)

    def test_rotated_cover_is_rotated_rectangle(self):
        comment = CommentObject("x", (0, 0), (20, 10), angle=math.pi / 2)
        apexes = comment.cover.nodes[0].shape.apexes
        xs = sorted(round(p[0], 9) for p in apexes)
        ys = sorted(round(p[1], 9) for p in apexes)
        assert xs == [-5, -5, 5, 5]
        assert ys == [-10, -10, 10, 10]


class TestWindowFallThroughEndToEnd:
    def test_catch_resolves_to_area_corner(self):
        asm = build_assembly()
        mover = Mover()
        asm.into_mover(mover, 0)
        assert mover.catch((0, 0))  # TL corner, under the scale window
        assert mover.drag.obj is asm.area
        assert mover.drag.node_index == 0

    def test_cursor_senses_through_window(self):
        asm = build_assembly()
        mover = Mover()
        asm.into_mover(mover, 0)
        assert mover.sense_cursor((0, 0)) is asm.area.cover.nodes[0].cursor

    def test_resize_through_window_keeps_anchors(self):
        asm = build_assembly()
        mover = Mover()
        asm.into_mover(mover, 0)
        mover.catch((0, 0), ButtonTag.LEFT)
        mover.move_to((-20, -10))
        mover.release()
        assert asm.area.rect.x == -20
        assert asm.area.rect.y == -10
        assert asm.comments[0].anchor == (0.25, 0.25)
