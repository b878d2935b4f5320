import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acuteset.geometry import PointSet
from acuteset.verifier import (ACUTE, INDETERMINATE, OBTUSE, RIGHT, min_angle_deg, min_apex_dot,
                               verify_acute)
from oracles import brute_distinct_min, brute_min_angle, brute_s

TRIANGLE = PointSet(2, [(0, 0), (2, 0), (1, 2)])
SQUARE = PointSet(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
BASIS3 = PointSet(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def cube(d):
    return PointSet(d, list(itertools.product((0, 1), repeat=d)))


@st.composite
def pointsets(draw, max_n=7):
    d = draw(st.integers(1, 4))
    coord = st.fractions(min_value=-6, max_value=6, max_denominator=5)
    pts = draw(st.lists(st.tuples(*[coord] * d), min_size=2, max_size=max_n, unique=True))
    return PointSet(d, pts)


def test_min_apex_dot_triangle():
    assert brute_s(TRIANGLE.points) == (2, (0, 1, 2))
    assert min_apex_dot(TRIANGLE) == (2, (0, 1, 2))


def test_min_apex_dot_segment():
    assert min_apex_dot(PointSet(1, [(0,), (1,)])) == (1, (0, 1, 1))


def test_min_apex_dot_square_is_zero():
    s, (x, y, z) = min_apex_dot(SQUARE)
    assert s == 0
    assert (SQUARE[y][0] - SQUARE[x][0]) * (SQUARE[z][0] - SQUARE[x][0]) + \
        (SQUARE[y][1] - SQUARE[x][1]) * (SQUARE[z][1] - SQUARE[x][1]) == 0


def test_min_apex_dot_needs_two_points():
    with pytest.raises(ValueError):
        min_apex_dot(PointSet(2, [(0, 0)]))


@pytest.mark.parametrize("X, verdict, s", [(TRIANGLE, ACUTE, 2), (SQUARE, RIGHT, 0), (BASIS3, ACUTE, 1)])
def test_verify_examples(X, verdict, s):
    r = verify_acute(X, "exact")
    assert (r.verdict, r.s_min) == (verdict, s)


def test_verify_obtuse_and_small_sets():
    r = verify_acute(PointSet(2, [(0, 0), (4, 0), (1, F(1, 5))]))
    assert r.verdict == OBTUSE and r.s_min < 0
    assert verify_acute(PointSet(2, [(0, 0)])).verdict == ACUTE
    two = verify_acute(PointSet(2, [(0, 0), (3, 4)]))
    assert two.verdict == ACUTE and two.s_min == 25 and two.min_angle_deg is None


@settings(max_examples=150, deadline=None)
@given(pointsets())
def test_exact_matches_brute_force(X):
    value, witness = min_apex_dot(X, workers=1)
    assert (value, witness) == brute_s(X.points)
    report = verify_acute(X, workers=1)
    distinct = brute_distinct_min(X.points)
    if distinct is None:
        assert report.verdict == ACUTE
    else:
        expected = ACUTE if distinct > 0 else RIGHT if distinct == 0 else OBTUSE
        assert report.verdict == expected


@settings(max_examples=60, deadline=None)
@given(pointsets(max_n=6), st.fractions(min_value=F(1, 7), max_value=10, max_denominator=7), st.data())
def test_verdict_invariances(X, lam, data):
    base = verify_acute(X, workers=1)
    shift = data.draw(st.lists(st.fractions(-5, 5, max_denominator=3), min_size=X.dim, max_size=X.dim))
    perm = data.draw(st.permutations(range(X.dim)))
    order = data.draw(st.permutations(range(len(X))))
    moved = X.transformed(lam, shift, perm).subset(order)
    r = verify_acute(moved, workers=1)
    assert r.verdict == base.verdict
    assert r.s_min == lam * lam * base.s_min


@settings(max_examples=40, deadline=None)
@given(pointsets(max_n=6), st.data())
def test_hereditary(X, data):
    if not verify_acute(X, workers=1).is_acute:
        return
    keep = data.draw(st.lists(st.sampled_from(range(len(X))), unique=True, min_size=1))
    assert verify_acute(X.subset(sorted(keep)), workers=1).is_acute


@pytest.mark.parametrize("d", range(1, 7))
def test_cube_vertices_are_right_not_obtuse(d):
    X = cube(d)
    r = verify_acute(X, workers=1)
    assert r.s_min == 0 if d >= 2 else r.s_min == 1
    if d >= 2:
        assert r.verdict == RIGHT


def test_parallel_equals_serial():
    import random

    rng = random.Random(5)
    pts = {tuple(F(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(3)) for _ in range(70)}
    X = PointSet(3, sorted(pts))
    assert min_apex_dot(X, workers=1) == min_apex_dot(X, workers=3) == min_apex_dot(X, workers=4)


def test_min_angle_examples():
    tri = PointSet(2, [(0, 0), (4, 0), (2, 3)])
    assert min_angle_deg(tri) == pytest.approx(brute_min_angle(tri.points), abs=1e-9)
    assert min_angle_deg(tri) == pytest.approx(math.degrees(math.atan2(3, 2)), abs=1e-9)
    assert min_angle_deg(SQUARE) == pytest.approx(45.0, abs=1e-9)
    assert min_angle_deg(PointSet(2, [(0, 0), (1, 0), (0, 1)])) == pytest.approx(45.0, abs=1e-9)
    with pytest.raises(ValueError):
        min_angle_deg(PointSet(2, [(0, 0), (1, 0)]))


@settings(max_examples=50, deadline=None)
@given(pointsets())
def test_min_angle_matches_law_of_cosines(X):
    if len(X) >= 3:
        assert min_angle_deg(X) == pytest.approx(brute_min_angle(X.points), abs=1e-6)


def test_float_mode():
    r = verify_acute(TRIANGLE, "float", 1e-9)
    assert r.verdict == ACUTE and r.s_min is None and r.tolerance == 1e-9
    assert verify_acute(SQUARE, "float").verdict == INDETERMINATE
    assert verify_acute(PointSet(2, [(0, 0), (4, 0), (1, F(1, 5))]), "float").verdict == OBTUSE
    with pytest.raises(ValueError):
        verify_acute(TRIANGLE, "float", 0.0)
    with pytest.raises(ValueError):
        verify_acute(TRIANGLE, "fuzzy")


@settings(max_examples=100, deadline=None)
@given(pointsets())
def test_float_agrees_when_margins_exceed_tolerance(X):
    tol = 1e-6
    dots = [abs(v) for v in _all_distinct_dots(X)]
    if not dots or min(dots) > tol:
        assert verify_acute(X, "float", tol).verdict == verify_acute(X, workers=1).verdict


def _all_distinct_dots(X):
    from oracles import dot
    return [dot(X[x], X[y], X[z]) for x, y, z in itertools.permutations(range(len(X)), 3)]


def test_report_serialization():
    d = verify_acute(TRIANGLE).to_dict()
    assert d["s_min"] == "2/1" and d["witness"] == [0, 1, 2] and d["n"] == 3 and d["dim"] == 2
    assert set(d) == {"verdict", "s_min", "witness", "min_angle_deg", "mode", "tolerance", "n", "dim",
                      "elapsed_ms"}
