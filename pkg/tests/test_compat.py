import random
from fractions import Fraction as F

import pytest

from conftest import random_interval
from ecluster.compat import (
    NONE,
    V_SUB,
    NotAnExtension,
    dimension_samples,
    e_compatible_euler,
    e_compatible_geometric,
    euler_pairing,
    exchange_middle,
    ext_direction,
    g_vector,
    hom_proj_nonzero,
    is_degenerate,
)
from ecluster.line import MINUS, PLUS, DoubledPoint, IntervalObject as IV


def test_g_vectors():
    g = g_vector(IV.open(0, 2))
    assert g.top == DoubledPoint.at(2, MINUS)
    assert g.bottom == DoubledPoint.at(0, PLUS)
    p = g_vector(IV.proj_closed(3))
    assert p.top == DoubledPoint.at(3, PLUS) and not p.bottom.value.is_finite
    s = g_vector(IV.singleton(1))
    assert s.top == DoubledPoint.at(1, PLUS) and s.bottom == DoubledPoint.at(1, MINUS)


def test_hom_between_projectives():
    assert hom_proj_nonzero(DoubledPoint.at(2, MINUS), DoubledPoint.at(1, PLUS))
    assert not hom_proj_nonzero(DoubledPoint.at(1, MINUS), DoubledPoint.at(1, PLUS))
    p = DoubledPoint.at(5, PLUS)
    assert hom_proj_nonzero(p, p)


def test_euler_pairing_worked_example():
    # the crossing pair: one order is -1, matching the worked computation
    g, h = g_vector(IV.open(0, 2)), g_vector(IV.open(1, 3))
    assert euler_pairing(g, h) == -1
    assert euler_pairing(h, g) == 1
    d = g_vector(IV.open(0, 2))
    assert euler_pairing(d, d) == 1  # consistent with no self-extensions
    g24 = g_vector(IV.open(2, 4))
    assert euler_pairing(g, g24) == 0 and euler_pairing(g24, g) == 0


def test_compatibility_examples():
    assert not e_compatible_euler(IV.open(0, 2), IV.open(1, 3))
    v = IV.open(0, 2)
    assert e_compatible_euler(v, v)
    for a, b in ((-3, 0), (1, 5)):
        assert e_compatible_euler(IV.proj_closed(a), IV.proj_closed(b))
        assert e_compatible_euler(IV.proj_open(a), IV.proj_closed(b))
    assert not e_compatible_geometric(IV.half_open_left(0, 2), IV.open(2, 4))
    assert e_compatible_geometric(IV.singleton(1), IV.open(0, 2))
    assert not e_compatible_geometric(IV.singleton(1), IV.open(0, 1))


def test_adjacency_asymmetry_regression():
    # the phenomenon blocking any naive closed-end embedding: open-open
    # touching is fine, closed-meets-open is an extension
    assert e_compatible_geometric(IV.open(0, 2), IV.open(2, 4))
    assert not e_compatible_geometric(IV.half_open_left(0, 2), IV.open(2, 4))
    assert not e_compatible_geometric(IV.half_open_right(2, 4), IV.open(0, 2))


def test_ext_direction():
    assert ext_direction(IV.open(0, 2), IV.open(1, 3)) == V_SUB
    assert ext_direction(IV.half_open_left(0, 2), IV.open(2, 4)) == V_SUB
    assert ext_direction(IV.singleton(1), IV.open(0, 2)) == NONE
    assert ext_direction(IV.open(1, 3), IV.open(0, 2)) != V_SUB
    # equal left endpoints never extend each other
    assert ext_direction(IV.open(0, 2), IV.open(0, 3)) == NONE


def test_exchange_middle_examples():
    w = exchange_middle(IV.open(0, 2), IV.open(1, 3))
    assert w.middle == (IV.open(0, 3), IV.open(1, 2))
    assert w.dimension_sound(dimension_samples(w.sub, w.quotient))
    w = exchange_middle(IV.half_open_left(0, 2), IV.open(2, 4))
    assert w.middle == (IV.open(0, 4),)
    assert w.dimension_sound(dimension_samples(w.sub, w.quotient))
    w = exchange_middle(IV.proj_open(1), IV.singleton(1))
    assert w.middle == (IV.proj_closed(1),)
    with pytest.raises(NotAnExtension):
        exchange_middle(IV.singleton(1), IV.open(0, 2))


def test_degenerate():
    assert is_degenerate(IV.singleton(3))
    assert is_degenerate(IV.full_line())
    assert not is_degenerate(IV.open(0, 2))
    assert not is_degenerate(IV.proj_closed(0))
    assert not is_degenerate(IV.inj_open(0))


def test_oracle_equivalence_random():
    rng = random.Random(11)
    for _ in range(4000):
        v, w = random_interval(rng), random_interval(rng)
        geo = e_compatible_geometric(v, w)
        assert geo == e_compatible_euler(v, w), (v, w)
        # symmetry
        assert geo == e_compatible_geometric(w, v)
    # reflexivity
    for _ in range(200):
        v = random_interval(rng)
        assert e_compatible_geometric(v, v)


def test_ses_soundness_random():
    rng = random.Random(13)
    done = 0
    while done < 800:
        v, w = random_interval(rng), random_interval(rng)
        d = ext_direction(v, w)
        if d == NONE:
            continue
        sub, quot = (v, w) if d == V_SUB else (w, v)
        witness = exchange_middle(sub, quot)
        assert witness.dimension_sound(dimension_samples(sub, quot))
        done += 1


def test_dimension_samples_count():
    samples = dimension_samples(IV.open(0, 2), IV.open(1, 3))
    assert len(samples) >= 100
    assert all(isinstance(s, F) for s in samples)
