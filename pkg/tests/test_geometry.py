import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from acuteset.geometry import DimensionError, DuplicatePointError, PointSet, apex_dot, as_point, rationalize
from oracles import best_second_kind

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


def vectors(d):
    return st.lists(rationals, min_size=d, max_size=d).map(tuple)


@pytest.mark.parametrize("x, y, z, expected", [
    ((0, 0), (2, 0), (1, 2), 2),
    ((0, 0), (1, 0), (0, 1), 0),
    ((1, 0), (1, 0), (5, 5), 0),
])
def test_apex_dot_examples(x, y, z, expected):
    assert apex_dot(as_point(x), as_point(y), as_point(z)) == expected


def test_apex_dot_dimension_mismatch():
    with pytest.raises(DimensionError):
        apex_dot(as_point((0, 0)), as_point((1,)), as_point((1, 1)))


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda d: st.tuples(vectors(d), vectors(d), vectors(d), vectors(d))), rationals)
def test_apex_dot_invariants(xyzt, lam):
    x, y, z, t = xyzt
    v = apex_dot(x, y, z)
    assert v == apex_dot(x, z, y)
    sq = apex_dot(x, y, y)
    assert sq >= 0 and (sq == 0) == (x == y)
    shift = lambda p: tuple(a + b for a, b in zip(p, t))
    assert apex_dot(shift(x), shift(y), shift(z)) == v
    scale = lambda p: tuple(lam * a for a in p)
    assert apex_dot(scale(x), scale(y), scale(z)) == lam * lam * v


def test_rationalize_examples():
    assert rationalize([0.5], 100) == [F(1, 2)]
    assert rationalize([0.3333333333], 100) == [F(1, 3)]
    assert rationalize([0.0], 10) == [F(0)]
    # enumeration over denominators <= 100 agrees
    assert best_second_kind(F(0.3333333333), 100) == F(1, 3)


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_rationalize_rejects_nonfinite(bad):
    with pytest.raises(ValueError):
        rationalize([1.0, bad], 10)


def test_rationalize_rejects_bad_denominator():
    with pytest.raises(ValueError):
        rationalize([0.5], 0)


@settings(max_examples=300)
@given(st.floats(-1e3, 1e3, allow_nan=False), st.integers(1, 10**6))
def test_rationalize_error_bound(v, max_den):
    (q,) = rationalize([v], max_den)
    assert 1 <= q.denominator <= max_den
    assert abs(q - F(v)) <= F(1, q.denominator * max_den)


@settings(max_examples=300)
@given(st.floats(-20, 20, allow_nan=False), st.integers(1, 150))
def test_rationalize_matches_enumeration(v, max_den):
    x = F(v)
    # skip exact midpoints where the best approximation is not unique
    assume(all((2 * q * x).denominator != 1 or (q * x).denominator == 1 for q in range(1, max_den + 1)))
    assert rationalize([v], max_den)[0] == best_second_kind(x, max_den)


@settings(max_examples=300)
@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_rationalize_recovers_small_ratios(p, q):
    assert rationalize([p / q], 10**4) == [F(p, q)]


def test_pointset_validation():
    X = PointSet(2, [(0, 0), (F(1, 2), "3/4")])
    assert X.points[1] == (F(1, 2), F(3, 4))
    with pytest.raises(DuplicatePointError):
        PointSet(2, [(0, 0), (1, 1), (0, 0)])
    with pytest.raises(DimensionError):
        PointSet(2, [(0, 0), (1,)])
    with pytest.raises(TypeError):
        PointSet(1, [(0.1,)])


def test_from_floats_and_transform():
    X = PointSet.from_floats([[0.5, 0.25], [0.1, 0.2]], 100)
    assert X.points == ((F(1, 2), F(1, 4)), (F(1, 10), F(1, 5)))
    Y = X.transformed(F(2), (1, 0), perm=(1, 0))
    assert Y.points[0] == (F(1, 2), F(2))
