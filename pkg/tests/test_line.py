from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ecluster.line import (
    MINUS,
    NEG_INF,
    OUTSIDE,
    PLUS,
    POS_INF,
    DefaultLadder,
    DoubledPoint,
    IntervalObject,
    ScaledLadder,
    compare,
    is_dyadic,
    dyadic_level,
)


def dp(v, side):
    return DoubledPoint.at(v, side)


def test_compare_examples():
    assert compare(dp(1, MINUS), dp(1, PLUS)) == -1
    assert compare(DoubledPoint(NEG_INF, PLUS), dp(0, MINUS)) == -1
    assert compare(dp(2, PLUS), dp(2, PLUS)) == 0


def test_infinite_sides_are_fixed():
    with pytest.raises(ValueError):
        DoubledPoint(NEG_INF, MINUS)
    with pytest.raises(ValueError):
        DoubledPoint(POS_INF, PLUS)


points = st.tuples(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=1, max_value=6),
    st.sampled_from([MINUS, PLUS]),
).map(lambda t: dp(F(t[0], t[1]), t[2]))


@given(points, points, points)
def test_order_trichotomy_and_transitivity(p, q, r):
    assert (p < q) + (q < p) + (p == q) == 1
    if p < q and q < r:
        assert p < r


def test_interval_invariants():
    with pytest.raises(ValueError):
        IntervalObject(dp(2, MINUS), dp(1, PLUS))
    with pytest.raises(ValueError):
        IntervalObject(dp(1, PLUS), dp(1, MINUS))
    s = IntervalObject.singleton(3)
    assert s.is_singleton and s.contains(F(3)) and not s.contains(F(2))
    p = IntervalObject.proj_closed(2)
    assert p.contains(F(2)) and p.contains(F(-100)) and not p.contains(F(3))
    po = IntervalObject.proj_open(2)
    assert not po.contains(F(2)) and po.contains(F("3/2"))


def test_default_ladder_values():
    L = DefaultLadder()
    assert L.value(0) == F(1, 2)
    assert L.value(1) == F(2, 3)
    assert L.value(-2) == F(1, 5)


def test_dyadic_points():
    L = DefaultLadder()
    assert L.dyadic(0, 0, 3) == F(1, 2)
    assert L.dyadic(0, 1, 1) == F(7, 12)
    assert L.dyadic(0, 2, 1) == F(2, 3)
    with pytest.raises(ValueError):
        L.dyadic(0, 3, 1)
    with pytest.raises(ValueError):
        L.dyadic(0, 0, -1)


def test_locate():
    L = DefaultLadder()
    assert L.locate(F(3, 5)) == 0
    assert L.locate(F(1, 2)) == 0
    assert L.locate(F(2)) is OUTSIDE
    for i in range(-12, 12):
        assert L.value(i) < L.value(i + 1)
        assert L.locate(L.value(i)) == i
        assert L.index_of(L.value(i)) == i
    assert L.index_of(F(3, 5)) is None


def test_dyadic_refinement_coherence():
    L = DefaultLadder()
    for i in (-2, 0, 3):
        for lvl in range(0, 4):
            for j in range(0, (1 << lvl) + 1):
                assert L.dyadic(i, j, lvl) == L.dyadic(i, 2 * j, lvl + 1)


def test_scaled_ladder_and_generic_locate():
    L = ScaledLadder(-1, 1)
    assert L.value(0) == 0
    assert L.lower == -1 and L.upper == 1
    for i in range(-10, 10):
        assert L.locate(L.value(i)) == i
    assert L.locate(F(-1)) is OUTSIDE
    # the generic bisection agrees with the closed form
    generic = super(ScaledLadder, L).locate(F(1, 3))
    assert generic == L.locate(F(1, 3))


def test_dyadic_helpers():
    assert is_dyadic(F(3, 8)) and not is_dyadic(F(1, 3))
    assert dyadic_level(F(3, 8)) == 3 and dyadic_level(F(1, 2)) == 1
    assert dyadic_level(F(0)) == 0
