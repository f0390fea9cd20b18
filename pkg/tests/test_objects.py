"""Scene objects: move/resize/reconfigure/rotate semantics."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dragcover.cover import Circle, Resizing
from dragcover.errors import BadNodeIndexError, BadRadiiError
from dragcover.geometry import Rect, dist
from dragcover.objects import (
    ButtonTag,
    ChatoyantPolygonObject,
    LoopObject,
    PolygonVariant,
    RectangleObject,
    RegularPolygonObject,
    RingObject,
)


def fresh_cover_equals_stored(obj):
    before = obj.cover
    after = obj.define_cover()
    return before == after


class TestMove:
    def test_rectangle_translation(self):
        obj = RectangleObject(Rect(0, 0, 100, 60))
        obj.move(5, -3)
        assert (obj.rect.x, obj.rect.y, obj.rect.w, obj.rect.h) == (5, -3, 100, 60)
        assert fresh_cover_equals_stored(obj)

    def test_loop_pointwise(self):
        obj = LoopObject([(0, 0), (10, 0), (5, 8)])
        obj.move(5, -3)
        assert obj.points == [(5, -3), (15, -3), (10, 5)]

    def test_zero_move_is_identity(self):
        obj = RectangleObject(Rect(2, 3, 100, 60))
        before = obj.cover
        obj.move(0, 0)
        assert obj.cover == before
        assert (obj.rect.x, obj.rect.y) == (2, 3)

    def test_move_shifts_every_cover_point(self):
        obj = RectangleObject(Rect(0, 0, 100, 60))
        before = obj.cover
        obj.move(7, 11)
        for old, new in zip(before.nodes, obj.cover.nodes):
            if isinstance(old.shape, Circle):
                assert new.shape.center == (old.shape.center[0] + 7, old.shape.center[1] + 11)
            else:
                for (ox, oy), (nx, ny) in zip(old.shape.apexes, new.shape.apexes):
                    assert (nx, ny) == (ox + 7, oy + 11)


class TestRectangleMoveNode:
    def test_corner_drag(self):
        obj = RectangleObject(Rect(0, 0, 100, 60), min_width=20, min_height=20)
        moved = obj.move_node(0, 10, 5)  # top-left corner
        assert moved
        assert (obj.rect.x, obj.rect.y, obj.rect.w, obj.rect.h) == (10, 5, 90, 55)

    def test_ns_top_side_ignores_dx(self):
        obj = RectangleObject(Rect(0, 0, 100, 60), Resizing.NS)
        moved = obj.move_node(0, 5, -3)  # top side
        assert moved
        assert (obj.rect.x, obj.rect.w) == (0, 100)
        assert obj.rect.y == -3
        assert obj.rect.h == 63

    def test_clamped_side_returns_false(self):
        obj = RectangleObject(Rect(0, 0, 30, 60), min_width=30, min_height=10)
        moved = obj.move_node(6, 10, 0)  # left side inward at min width
        assert not moved
        assert (obj.rect.x, obj.rect.w) == (0, 30)

    def test_partial_clamp_still_counts_as_moved(self):
        obj = RectangleObject(Rect(0, 0, 40, 60), min_width=30, min_height=10)
        moved = obj.move_node(6, 25, 0)  # left side: only 10 of 25 available
        assert moved
        assert (obj.rect.x, obj.rect.w) == (10, 30)

    def test_corner_axes_clamp_independently(self):
        obj = RectangleObject(Rect(0, 0, 30, 60), min_width=30, min_height=20)
        moved = obj.move_node(0, 10, 15)  # TL: x blocked, y free
        assert moved
        assert (obj.rect.x, obj.rect.w) == (0, 30)
        assert (obj.rect.y, obj.rect.h) == (15, 45)

    def test_body_node_moves_whole(self):
        obj = RectangleObject(Rect(0, 0, 100, 60))
        assert obj.move_node(8, 4, 9)
        assert (obj.rect.x, obj.rect.y) == (4, 9)

    def test_bad_index(self):
        obj = RectangleObject(Rect(0, 0, 100, 60), Resizing.NONE)
        with pytest.raises(BadNodeIndexError):
            obj.move_node(1, 1, 1)


class TestLoopMoveNode:
    def test_single_point(self):
        obj = LoopObject([(0, 0), (10, 0), (5, 8)])
        assert obj.move_node(1, 4, 4)
        assert obj.points == [(0, 0), (14, 4), (5, 8)]
        assert fresh_cover_equals_stored(obj)

    def test_strip_moves_whole(self):
        obj = LoopObject([(0, 0), (10, 0), (5, 8)])
        assert obj.move_node(3, 4, 4)  # first strip
        assert obj.points == [(4, 4), (14, 4), (9, 12)]

    def test_index_out_of_range(self):
        obj = LoopObject([(0, 0), (10, 0), (5, 8)])
        with pytest.raises(BadNodeIndexError):
            obj.move_node(6, 1, 1)


class TestRegularPolygon:
    def test_by_apex_zoom_to_mouse_distance(self):
        obj = RegularPolygonObject((0, 0), 10, 5, variant=PolygonVariant.BY_APEX)
        assert obj.move_node(0, 0, 0, pt_mouse=(8, 15))  # |pt| = 17
        assert obj.circumradius == pytest.approx(17)
        for apex in obj.apexes:
            assert dist(apex, obj.center) == pytest.approx(17)

    def test_by_apex_min_radius(self):
        obj = RegularPolygonObject((0, 0), 50, 5, variant=PolygonVariant.BY_APEX,
                                   min_radius=10)
        obj.move_node(0, 0, 0, pt_mouse=(1, 0))
        assert obj.circumradius == 10

    def test_by_border_square_scale(self):
        # apexes (+-10, +-10): circumradius sqrt(200), apothem 10
        obj = RegularPolygonObject((0, 0), math.sqrt(200.0), 4, phase=math.pi / 4,
                                   variant=PolygonVariant.BY_BORDER, min_radius=1)
        # edge 3 runs from apex 3 (10,-10) to apex 0 (10,10): the right edge
        assert obj.move_node(3, 0, 0, pt_mouse=(15, 3))
        assert obj.circumradius == pytest.approx(1.5 * math.sqrt(200.0))
        xs = sorted(round(p[0], 9) for p in obj.apexes)
        assert xs == [-15, -15, 15, 15]

    def test_fixed_body_moves(self):
        obj = RegularPolygonObject((0, 0), 10, 5, variant=PolygonVariant.FIXED)
        assert len(obj.cover) == 1
        assert obj.move_node(0, 7, 0)
        assert obj.center == (7, 0)

    def test_cover_layout_counts(self):
        by_apex = RegularPolygonObject((0, 0), 10, 6, variant=PolygonVariant.BY_APEX)
        by_border = RegularPolygonObject((0, 0), 10, 6, variant=PolygonVariant.BY_BORDER)
        assert len(by_apex.cover) == 7
        assert len(by_border.cover) == 7

    def test_regularity_over_fuzzed_zooms(self):
        rng = random.Random(11)
        obj = RegularPolygonObject((20, -5), 40, 11, variant=PolygonVariant.BY_APEX,
                                   min_radius=2)
        border = RegularPolygonObject((20, -5), 40, 11, variant=PolygonVariant.BY_BORDER,
                                      min_radius=2)
        for target in (obj, border):
            for _ in range(500):
                i = rng.randrange(11)
                pt = (rng.uniform(-80, 120), rng.uniform(-105, 95))
                target.move_node(i, 0, 0, pt_mouse=pt)
                radii = [dist(p, target.center) for p in target.apexes]
                assert max(radii) - min(radii) <= 1e-9 * target.circumradius
                step = 2 * math.pi / 11
                for k in range(11):
                    a = target.apexes[k]
                    b = target.apexes[(k + 1) % 11]
                    got = math.atan2(b[1] - target.center[1], b[0] - target.center[0]) \
                        - math.atan2(a[1] - target.center[1], a[0] - target.center[0])
                    got = (got + 2 * math.pi) % (2 * math.pi)
                    assert got == pytest.approx(step, abs=1e-9)


class TestChatoyant:
    def diamond(self):
        return ChatoyantPolygonObject((0, 0), [(0, -10), (10, 0), (0, 10), (-10, 0)])

    def test_cover_layout(self):
        obj = self.diamond()
        # 4 apexes + center + 4 edges + 4 triangles
        assert len(obj.cover) == 13
        roles = [r[0] for r in obj._roles]
        assert roles == ["apex"] * 4 + ["center"] + ["edge"] * 4 + ["triangle"] * 4

    def test_apex_moves_alone(self):
        obj = self.diamond()
        assert obj.move_node(0, 3, 4)
        assert obj.apexes[0] == (3, -6)
        assert obj.apexes[1] == (10, 0)
        assert obj.center == (0, 0)

    def test_center_moves_alone(self):
        obj = self.diamond()
        assert obj.move_node(4, 3, 4)
        assert obj.center == (3, 4)
        assert obj.apexes[0] == (0, -10)
        assert fresh_cover_equals_stored(obj)

    def test_edge_zoom_ratio(self):
        obj = self.diamond()
        # anchor at distance 10, mouse at distance 12 -> scale 1.2
        assert obj.move_node(5, 2, 0, pt_mouse=(12, 0))
        for apex, want in zip(obj.apexes, [(0, -12), (12, 0), (0, 12), (-12, 0)]):
            assert apex[0] == pytest.approx(want[0])
            assert apex[1] == pytest.approx(want[1])
        assert obj.center == (0, 0)

    def test_edge_zoom_rejects_center_anchor(self):
        obj = self.diamond()
        assert not obj.move_node(5, 5, 0, pt_mouse=(5, 0))  # anchor == center
        assert obj.apexes[1] == (10, 0)

    def test_triangle_left_moves_whole(self):
        obj = self.diamond()
        tri = next(i for i, r in enumerate(obj._roles) if r[0] == "triangle")
        assert obj.move_node(tri, 5, 6, pt_mouse=(8, 6), button=ButtonTag.LEFT)
        assert obj.center == (5, 6)

    def test_triangle_right_rotates(self):
        obj = self.diamond()
        tri = next(i for i, r in enumerate(obj._roles) if r[0] == "triangle")
        # from bearing 0 to bearing 90 degrees about the center
        prev = (5.0, 0.0)
        now = (0.0, 5.0)
        assert obj.move_node(tri, now[0] - prev[0], now[1] - prev[1],
                             pt_mouse=now, button=ButtonTag.RIGHT)
        assert obj.apexes[1][0] == pytest.approx(0)
        assert obj.apexes[1][1] == pytest.approx(10)
        assert obj.center == (0, 0)

    def test_degenerate_triangle_skipped(self):
        obj = ChatoyantPolygonObject((0, 0), [(2, -10), (10, 0), (20, 3), (0, 10)])
        assert sum(r[0] == "triangle" for r in obj._roles) == 4
        # move apex 2 onto the ray center->apex 1: triangle (c, 1, 2) degenerates
        obj.move_node(2, -5, -3)  # apex 2 -> (15, 0), collinear with (10, 0) and center
        tri_roles = [r for r in obj._roles if r[0] == "triangle"]
        assert len(tri_roles) == 3
        assert fresh_cover_equals_stored(obj)


class TestRotation:
    def test_quarter_turn(self):
        obj = ChatoyantPolygonObject((0, 0), [(10, 0), (0, 10), (-10, 0), (0, -10)])
        assert obj.rotate_about_center((10, 0), (0, 10))
        assert obj.apexes[0][0] == pytest.approx(0)
        assert obj.apexes[0][1] == pytest.approx(10)

    def test_zero_rotation_identity(self):
        obj = ChatoyantPolygonObject((0, 0), [(10, 0), (0, 10), (-10, 0), (0, -10)])
        assert not obj.rotate_about_center((10, 0), (10, 0))

    def test_composition(self):
        a = ChatoyantPolygonObject((0, 0), [(10, 0), (0, 10), (-10, 0), (0, -10)])
        b = ChatoyantPolygonObject((0, 0), [(10, 0), (0, 10), (-10, 0), (0, -10)])
        third = math.pi / 6
        a.rotate_about_center((10, 0), (10 * math.cos(third), 10 * math.sin(third)))
        a.rotate_about_center((10, 0), (10 * math.cos(third), 10 * math.sin(third)))
        b.rotate_about_center((10, 0), (10 * math.cos(2 * third), 10 * math.sin(2 * third)))
        for pa, pb in zip(a.apexes, b.apexes):
            assert pa[0] == pytest.approx(pb[0], abs=1e-9)
            assert pa[1] == pytest.approx(pb[1], abs=1e-9)

    def test_isometry(self):
        apexes = [(10, 0), (3, 10), (-10, 4), (-2, -10)]
        obj = ChatoyantPolygonObject((0, 0), apexes)
        before = list(obj.apexes)
        obj.rotate_about_center((10, 0), (7, 7))
        after = obj.apexes
        for i in range(len(before)):
            for j in range(i + 1, len(before)):
                assert dist(after[i], after[j]) == pytest.approx(
                    dist(before[i], before[j]), abs=1e-9)

    def test_pivot_singular_is_noop(self):
        obj = ChatoyantPolygonObject((0, 0), [(10, 0), (0, 10), (-10, 0), (0, -10)])
        assert not obj.rotate_about_center((0, 0), (5, 5))
        assert obj.apexes[0] == (10, 0)


class TestRing:
    def test_outer_resize(self):
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        i_outer = 0
        assert obj.move_node(i_outer, 0, 0, pt_mouse=(0, 50))
        assert obj.r_outer == pytest.approx(50)

    def test_outer_clamped_at_inner_plus_gap(self):
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        assert obj.move_node(0, 0, 0, pt_mouse=(0, 21))
        assert obj.r_outer == pytest.approx(22)
        assert obj.r_inner + obj.min_gap <= obj.r_outer

    def test_sector_moves_whole(self):
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        sector = next(i for i, r in enumerate(obj._roles) if r[0] == "sector")
        assert obj.move_node(sector, -5, 0)
        assert obj.center == (-5, 0)
        assert obj.r_outer == 40 and obj.r_inner == 20

    def test_inner_clamps(self):
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        inner = next(i for i, r in enumerate(obj._roles) if r[0] == "inner")
        obj.move_node(inner, 0, 0, pt_mouse=(0, 60))
        assert obj.r_inner + obj.min_gap <= obj.r_outer
        obj.move_node(inner, 0, 0, pt_mouse=(0.1, 0))
        assert obj.r_inner > obj.node_radius

    def test_frozen_layout_during_drag(self):
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        n_before = len(obj.cover)
        obj.on_catch(0)
        obj.move_node(0, 0, 0, pt_mouse=(0, 90))  # grow: would add circles
        assert len(obj.cover) == n_before
        assert fresh_cover_equals_stored(obj)
        obj.on_release()
        assert len(obj.cover) > n_before

    def test_ordering_fuzz(self):
        rng = random.Random(3)
        obj = RingObject((0, 0), 40, 20, node_radius=5, min_gap=2)
        for _ in range(2000):
            i = rng.randrange(len(obj.cover))
            pt = (rng.uniform(-120, 120), rng.uniform(-120, 120))
            obj.move_node(i, rng.uniform(-9, 9), rng.uniform(-9, 9), pt_mouse=pt)
            assert obj.r_inner + obj.min_gap <= obj.r_outer
            assert obj.r_inner > obj.node_radius

    def test_constructor_validation(self):
        with pytest.raises(BadRadiiError):
            RingObject((0, 0), 21, 20, node_radius=5, min_gap=2)
        with pytest.raises(BadRadiiError):
            RingObject((0, 0), 40, 4, node_radius=5, min_gap=2)


@given(dx=st.floats(-100, 100), dy=st.floats(-100, 100))
@settings(max_examples=60, deadline=None)
def test_move_node_flag_matches_change(dx, dy):
    obj = RectangleObject(Rect(0, 0, 100, 60), min_width=10, min_height=10)
    before = (obj.rect.x, obj.rect.y, obj.rect.w, obj.rect.h)
    moved = obj.move_node(0, dx, dy)
    after = (obj.rect.x, obj.rect.y, obj.rect.w, obj.rect.h)
    assert moved == (before != after)
