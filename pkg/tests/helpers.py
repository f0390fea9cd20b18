"""Independent distance-based containment oracles (numpy), used to check the
analytic predicates, plus random node generators for the oracle suites."""

from __future__ import annotations

import math
import random

import numpy as np

from dragcover.cover import Circle, Strip, make_circle_node, make_polygon_node, make_strip_node


def seg_dist(pts: np.ndarray, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ab = b - a
    ap = pts - a
    den = float(ab @ ab)
    if den == 0.0:
        return np.hypot(ap[:, 0], ap[:, 1])
    t = np.clip(ap @ ab / den, 0.0, 1.0)
    gap = pts - (a + t[:, None] * ab)
    return np.hypot(gap[:, 0], gap[:, 1])


def oracle_contains(shape, pts: np.ndarray) -> np.ndarray:
    """Boolean containment for an array of points, straight from distances
    and half-plane signs (winding-agnostic)."""
    if isinstance(shape, Circle):
        return np.hypot(pts[:, 0] - shape.center[0], pts[:, 1] - shape.center[1]) <= shape.radius
    if isinstance(shape, Strip):
        return seg_dist(pts, shape.p1, shape.p2) <= shape.radius
    apexes = np.asarray(shape.apexes, dtype=float)
    n = len(apexes)
    signs = np.empty((n, len(pts)))
    for i in range(n):
        a, b = apexes[i], apexes[(i + 1) % n]
        signs[i] = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
    return np.logical_or((signs >= 0.0).all(axis=0), (signs <= 0.0).all(axis=0))


def oracle_boundary_distance(shape, pts: np.ndarray) -> np.ndarray:
    """Distance from each point to the shape's boundary."""
    if isinstance(shape, Circle):
        return np.abs(np.hypot(pts[:, 0] - shape.center[0], pts[:, 1] - shape.center[1])
                      - shape.radius)
    if isinstance(shape, Strip):
        return np.abs(seg_dist(pts, shape.p1, shape.p2) - shape.radius)
    apexes = list(shape.apexes)
    n = len(apexes)
    dists = np.stack([seg_dist(pts, apexes[i], apexes[(i + 1) % n]) for i in range(n)])
    return dists.min(axis=0)


def random_convex_apexes(rng: random.Random, n: int, center, rx: float, ry: float):
    """Distinct points on an ellipse in angular order are strictly convex."""
    angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(n))
    for i in range(1, n):
        if angles[i] - angles[i - 1] < 0.05:
            angles[i] = angles[i - 1] + 0.05
    return [(center[0] + rx * math.cos(a), center[1] + ry * math.sin(a)) for a in angles]


def random_node(rng: random.Random, node_id: int = 0):
    kind = rng.randrange(3)
    cx, cy = rng.uniform(-100, 100), rng.uniform(-100, 100)
    if kind == 0:
        return make_circle_node(node_id, (cx, cy), rng.uniform(0.5, 40.0))
    if kind == 1:
        p2 = (cx + rng.uniform(-60, 60), cy + rng.uniform(-60, 60))
        return make_strip_node(node_id, (cx, cy), p2, rng.uniform(0.5, 20.0))
    apexes = random_convex_apexes(rng, rng.randint(3, 9), (cx, cy),
                                  rng.uniform(2.0, 50.0), rng.uniform(2.0, 50.0))
    return make_polygon_node(node_id, apexes)


def sample_points_near(shape, rng_seed: int, count: int) -> np.ndarray:
    """Uniform samples over the shape's bounding box inflated by 30%."""
    from dragcover.cover import shape_bounds

    x0, y0, x1, y1 = shape_bounds(shape)
    pad_x = 0.3 * (x1 - x0) + 1.0
    pad_y = 0.3 * (y1 - y0) + 1.0
    rng = np.random.default_rng(rng_seed)
    xs = rng.uniform(x0 - pad_x, x1 + pad_x, count)
    ys = rng.uniform(y0 - pad_y, y1 + pad_y, count)
    return np.column_stack([xs, ys])
