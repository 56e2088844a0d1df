"""Shared generators and comparison helpers for the test suite.

3D pair generators snap coordinates to a dyadic grid (multiples of 1/64)
so that affine constructions evaluate exactly in float arithmetic: a
"forced coplanar" triangle built from grid barycentric combinations is
coplanar as a rational statement, not merely within rounding.  That keeps
the exact oracle's classification honest on degenerate families.
"""

import itertools
import math
import random

from tritri.core import Point3, Triangle3
from tritri.frame import Point2
from tritri.clip2d import Triangle2

GRID = 64
SPAN = 640  # +/- 10 in grid steps


def grid_point(rng: random.Random) -> Point3:
    return Point3(
        rng.randint(-SPAN, SPAN) / GRID,
        rng.randint(-SPAN, SPAN) / GRID,
        rng.randint(-SPAN, SPAN) / GRID,
    )


def _double_area(t) -> float:
    ax = [t[1][i] - t[0][i] for i in range(3)]
    bx = [t[2][i] - t[0][i] for i in range(3)]
    n = (
        ax[1] * bx[2] - ax[2] * bx[1],
        ax[2] * bx[0] - ax[0] * bx[2],
        ax[0] * bx[1] - ax[1] * bx[0],
    )
    return math.sqrt(sum(c * c for c in n))


def grid_triangle(rng: random.Random, min_area: float = 0.5) -> Triangle3:
    while True:
        t = Triangle3(grid_point(rng), grid_point(rng), grid_point(rng))
        if _double_area(t) / 2.0 > min_area:
            return t


def generic_pair(rng: random.Random):
    return grid_triangle(rng), grid_triangle(rng)


def coplanar_pair(rng: random.Random):
    """Second triangle built from exact grid combinations in t1's plane."""
    t1 = grid_triangle(rng)
    a, b, c = t1
    while True:
        verts = []
        for _ in range(3):
            al = rng.randint(-2 * GRID, 2 * GRID) / GRID
            be = rng.randint(-2 * GRID, 2 * GRID) / GRID
            verts.append(Point3(*(a[i] + al * (b[i] - a[i]) + be * (c[i] - a[i]) for i in range(3))))
        t2 = Triangle3(*verts)
        if _double_area(t2) / 2.0 > 0.5:
            return t1, t2


def shared_feature_pair(rng: random.Random):
    """Pairs sharing one vertex, or a whole edge half the time."""
    t1 = grid_triangle(rng)
    while True:
        if rng.random() < 0.5:
            t2 = Triangle3(t1[rng.randrange(3)], grid_point(rng), grid_point(rng))
        else:
            i = rng.randrange(3)
            t2 = Triangle3(t1[i], t1[(i + 1) % 3], grid_point(rng))
        if _double_area(t2) / 2.0 > 0.5:
            return t1, t2


def crossing_pair(rng: random.Random):
    """Pairs whose second triangle straddles the first one's plane."""
    while True:
        t1, t2 = grid_triangle(rng), grid_triangle(rng)
        a = t1[0]
        ax = [t1[1][i] - a[i] for i in range(3)]
        bx = [t1[2][i] - a[i] for i in range(3)]
        n = (
            ax[1] * bx[2] - ax[2] * bx[1],
            ax[2] * bx[0] - ax[0] * bx[2],
            ax[0] * bx[1] - ax[1] * bx[0],
        )
        nl = math.sqrt(sum(q * q for q in n))
        sd = [sum(n[i] * (v[i] - a[i]) for i in range(3)) / nl for v in t2]
        if min(sd) < -1e-3 and max(sd) > 1e-3:
            return t1, t2


def mixed_pairs(rng: random.Random, count: int):
    """The acceptance mix: 40% generic, 30% coplanar, 15% shared, 15% crossing."""
    out = []
    for k in range(count):
        u = k % 20
        if u < 8:
            out.append(generic_pair(rng))
        elif u < 14:
            out.append(coplanar_pair(rng))
        elif u < 17:
            out.append(shared_feature_pair(rng))
        else:
            out.append(crossing_pair(rng))
    return out


# --- 2D ----------------------------------------------------------------------


def random_triangle2(rng: random.Random, lo=-10.0, hi=10.0, min_area=0.5) -> Triangle2:
    while True:
        pts = [Point2(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(3)]
        ar = (pts[1].u - pts[0].u) * (pts[2].v - pts[0].v) - (pts[1].v - pts[0].v) * (pts[2].u - pts[0].u)
        if abs(ar) / 2.0 > min_area:
            return Triangle2(*pts)


def random_point2(rng: random.Random, lo=-15.0, hi=15.0) -> Point2:
    return Point2(rng.uniform(lo, hi), rng.uniform(lo, hi))


def polygon_area2(pts) -> float:
    n = len(pts)
    return 0.5 * sum(pts[i][0] * pts[(i + 1) % n][1] - pts[i][1] * pts[(i + 1) % n][0] for i in range(n))


# --- comparisons -------------------------------------------------------------


def points_match_unordered(got, want, tol=1e-9) -> bool:
    if len(got) != len(want):
        return False
    return any(
        all(max(abs(g[i] - w[i]) for i in range(len(g))) <= tol for g, w in zip(got, perm))
        for perm in itertools.permutations(want)
    )


def contours_match(got, want, tol=1e-9) -> bool:
    """Cyclic comparison, either orientation."""
    if len(got) != len(want):
        return False
    n = len(got)
    for candidate in (list(want), list(want)[::-1]):
        for shift in range(n):
            rotated = candidate[shift:] + candidate[:shift]
            if all(
                max(abs(g[i] - w[i]) for i in range(len(g))) <= tol
                for g, w in zip(got, rotated)
            ):
                return True
    return False


def result_matches_oracle(result_points, oracle_float_points, tol=1e-9) -> bool:
    got = [tuple(p) for p in result_points]
    want = [tuple(p) for p in oracle_float_points]
    if len(got) != len(want):
        return False
    if not got:
        return True
    if len(got) <= 2:
        return points_match_unordered(got, want, tol)
    return contours_match(got, want, tol)
