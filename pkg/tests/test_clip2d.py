import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tritri.clip2d import (
    ClipKind,
    Side,
    Triangle2,
    TrivialClassification,
    candidate_entry_sides,
    candidate_exit_sides,
    clip_segment_to_triangle,
    point_in_triangle,
    region_code,
    trivially_classify,
)
from tritri.core import DEFAULT_TOLERANCE
from tritri.errors import DegenerateTriangle, ZeroLengthSegment
from tritri.frame import Point2
from tritri.oracle import rational_clip_segment

from conftest import points_match_unordered, random_point2, random_triangle2

# canonical right-triangle window: AB along y=0, AC along x=0, BC on x+y=4
W = Triangle2(Point2(0, 0), Point2(4, 0), Point2(0, 4))

# representative point for every region code
REP = {
    0: Point2(1, 1),
    1: Point2(3, 3),
    2: Point2(1, -2),
    3: Point2(6, -1),
    4: Point2(-2, 1),
    5: Point2(-1, 6),
    6: Point2(-2, -2),
}

# every (start, end) code pair with no shared outside bit: 25 in total
CODE_PAIRS = [(a, b) for a in range(7) for b in range(7) if a & b == 0]


def test_representative_codes():
    for code, pt in REP.items():
        assert region_code(pt, W) == code


def test_code_pair_table_is_complete():
    assert len(CODE_PAIRS) == 25


@pytest.mark.parametrize("c1,c2", CODE_PAIRS)
def test_clip_matches_oracle_for_code_pair(c1, c2):
    p, q = REP[c1], REP[c2]
    if c1 == c2:  # same representative: shift the end, keeping its code
        q = Point2(q.u + 0.5, q.v + 0.25)
        assert region_code(q, W) == c2
    got = clip_segment_to_triangle(p, q, W)
    kind, pts = rational_clip_segment(tuple(p), tuple(q), (tuple(W.a), tuple(W.b), tuple(W.c)))
    if kind == "empty":
        assert got.kind is ClipKind.EMPTY
    elif kind == "point":
        assert got.kind is ClipKind.POINT
        assert points_match_unordered([tuple(got.points[0])], [(float(pts[0][0]), float(pts[0][1]))])
    else:
        assert got.kind is ClipKind.SEGMENT
        want = [(float(a), float(b)) for a, b in pts]
        assert points_match_unordered([tuple(x) for x in got.points], want)


def test_interior_start_exit_through_hypotenuse():
    res = clip_segment_to_triangle(Point2(1, 1), Point2(5, 1), W)
    assert res.kind is ClipKind.SEGMENT
    assert points_match_unordered([tuple(p) for p in res.points], [(1, 1), (3, 1)])


def test_pass_through_two_sides():
    res = clip_segment_to_triangle(Point2(1, -2), Point2(1, 6), W)
    assert res.kind is ClipKind.SEGMENT
    assert points_match_unordered([tuple(p) for p in res.points], [(1, 0), (1, 3)])


def test_suspicious_miss():
    res = clip_segment_to_triangle(Point2(1, -2), Point2(-2, 1), W)
    assert res.kind is ClipKind.EMPTY


def test_corner_graze_is_point():
    res = clip_segment_to_triangle(Point2(3, -1), Point2(5, 1), W)
    assert res.kind is ClipKind.POINT
    assert points_match_unordered([tuple(res.points[0])], [(4, 0)])


def test_entry_through_vertex():
    res = clip_segment_to_triangle(Point2(-1, -1), Point2(1, 1), W)
    assert res.kind is ClipKind.SEGMENT
    assert points_match_unordered([tuple(p) for p in res.points], [(0, 0), (1, 1)])


def test_collinear_overlap_along_side():
    res = clip_segment_to_triangle(Point2(5, -1), Point2(-1, 5), W)
    assert res.kind is ClipKind.SEGMENT
    assert points_match_unordered([tuple(p) for p in res.points], [(4, 0), (0, 4)])


def test_collinear_outside_side_line():
    res = clip_segment_to_triangle(Point2(5, 0), Point2(8, 0), W)
    assert res.kind is ClipKind.EMPTY


def test_zero_length_segment_raises():
    with pytest.raises(ZeroLengthSegment):
        clip_segment_to_triangle(Point2(1, 1), Point2(1, 1), W)


def test_degenerate_window_raises():
    with pytest.raises(DegenerateTriangle):
        Triangle2(Point2(0, 0), Point2(1, 1), Point2(2, 2))


def test_clockwise_window_normalized():
    t = Triangle2(Point2(0, 0), Point2(0, 4), Point2(4, 0))
    assert tuple(t.b) == (4.0, 0.0) and tuple(t.c) == (0.0, 4.0)


def test_boundary_points_code_inside():
    # on a side line (even beyond the segment) the side's bit stays clear
    assert region_code(Point2(2, 0), W) == 0
    assert region_code(Point2(-1, 0), W) == 4  # AB bit clear, AC bit set
    assert region_code(Point2(2, 2), W) == 0  # exactly on the hypotenuse
    assert region_code(Point2(0, 0), W) == 0


def test_trivial_classification():
    assert trivially_classify(0, 0) is TrivialClassification.ACCEPT_INSIDE
    assert trivially_classify(2, 6) is TrivialClassification.REJECT_OUTSIDE
    assert trivially_classify(2, 4) is TrivialClassification.SUSPICIOUS
    assert trivially_classify(0, 1) is TrivialClassification.SUSPICIOUS


def test_candidate_entry_sides_table():
    assert candidate_entry_sides(2) == (Side.AB,)
    assert candidate_entry_sides(4) == (Side.AC,)
    assert candidate_entry_sides(1) == (Side.BC,)
    assert candidate_entry_sides(6) == (Side.AB, Side.AC)
    assert candidate_entry_sides(3) == (Side.AB, Side.BC)
    assert candidate_entry_sides(5) == (Side.AC, Side.BC)
    assert candidate_entry_sides(0) == (Side.AB, Side.AC, Side.BC)


def test_candidate_exit_sides():
    assert candidate_exit_sides(2, 4) == (Side.AC,)
    assert candidate_exit_sides(6, 1) == (Side.BC,)
    assert candidate_exit_sides(2, 0) == ()
    with pytest.raises(ValueError):
        candidate_exit_sides(2, 2)


coord = st.floats(min_value=-12, max_value=12, allow_nan=False, allow_infinity=False)


@st.composite
def window_and_segment(draw):
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = random.Random(seed)
    return random_triangle2(rng), random_point2(rng), random_point2(rng)


@given(window_and_segment())
@settings(max_examples=300, deadline=None)
def test_clip_equals_interval_oracle(case):
    w, p, q = case
    got = clip_segment_to_triangle(p, q, w)
    kind, pts = rational_clip_segment(tuple(p), tuple(q), (tuple(w.a), tuple(w.b), tuple(w.c)))
    if kind == "empty":
        assert got.kind is ClipKind.EMPTY
    elif kind == "point":
        assert got.kind is ClipKind.POINT
        want = [(float(a), float(b)) for a, b in pts]
        assert points_match_unordered([tuple(got.points[0])], want)
    else:
        assert got.kind is ClipKind.SEGMENT
        want = [(float(a), float(b)) for a, b in pts]
        assert points_match_unordered([tuple(x) for x in got.points], want)


@given(window_and_segment())
@settings(max_examples=200, deadline=None)
def test_clipped_output_is_inside(case):
    w, p, q = case
    res = clip_segment_to_triangle(p, q, w)
    for pt in res.points:
        assert region_code(pt, w) == 0
        assert point_in_triangle(pt, w)


@given(window_and_segment())
@settings(max_examples=200, deadline=None)
def test_trivial_accept_and_reject_soundness(case):
    w, p, q = case
    c1, c2 = region_code(p, w), region_code(q, w)
    res = clip_segment_to_triangle(p, q, w)
    if c1 == 0 and c2 == 0:
        assert point_in_triangle(p, w) and point_in_triangle(q, w)
        assert res.kind is ClipKind.SEGMENT
    if c1 & c2:
        assert res.kind is ClipKind.EMPTY


def _param_interval(p, q, res):
    d2 = (q.u - p.u) ** 2 + (q.v - p.v) ** 2
    ts = sorted(((pt.u - p.u) * (q.u - p.u) + (pt.v - p.v) * (q.v - p.v)) / d2 for pt in res.points)
    if not ts:
        return None
    return ts[0], ts[-1]


@given(window_and_segment())
@settings(max_examples=200, deadline=None)
def test_window_growth_monotonicity(case):
    w, p, q = case
    cx = (w.a.u + w.b.u + w.c.u) / 3.0
    cy = (w.a.v + w.b.v + w.c.v) / 3.0
    grown = Triangle2(*(Point2(cx + 2 * (v.u - cx), cy + 2 * (v.v - cy)) for v in (w.a, w.b, w.c)))
    small = _param_interval(p, q, clip_segment_to_triangle(p, q, w))
    big = _param_interval(p, q, clip_segment_to_triangle(p, q, grown))
    if small is None:
        return
    assert big is not None
    slop = 1e-9 / math.sqrt((q.u - p.u) ** 2 + (q.v - p.v) ** 2)
    assert big[0] <= small[0] + slop
    assert big[1] >= small[1] - slop
