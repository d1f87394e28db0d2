import random
from fractions import Fraction

import pytest

from ecluster.line import (
    MINUS,
    PLUS,
    POS_INF_POINT,
    DoubledPoint,
    IntervalObject,
)


def random_interval(rng: random.Random, span: int = 40) -> IntervalObject:
    """A random interval object covering all 16 closure combinations and
    the infinite endpoint shapes."""
    while True:
        kind = rng.randrange(10)
        if kind == 0:
            return IntervalObject.full_line()
        if kind <= 2:
            v = Fraction(rng.randrange(-span, span + 1), rng.choice([1, 2, 3, 4, 8]))
            return (
                IntervalObject.proj_open(v)
                if rng.randrange(2)
                else IntervalObject.proj_closed(v)
            )
        if kind == 3:
            v = Fraction(rng.randrange(-span, span + 1), rng.choice([1, 2, 3, 4, 8]))
            side = MINUS if rng.randrange(2) else PLUS
            return IntervalObject(DoubledPoint.at(v, side), POS_INF_POINT)
        if kind == 4:
            return IntervalObject.singleton(
                Fraction(rng.randrange(-span, span + 1), rng.choice([1, 2, 3]))
            )
        a = Fraction(rng.randrange(-span, span + 1), rng.choice([1, 2, 3, 4, 8, 16]))
        b = Fraction(rng.randrange(-span, span + 1), rng.choice([1, 2, 3, 4, 8, 16]))
        if a == b:
            continue
        if a > b:
            a, b = b, a
        ls = MINUS if rng.randrange(2) else PLUS
        rs = MINUS if rng.randrange(2) else PLUS
        return IntervalObject(DoubledPoint.at(a, ls), DoubledPoint.at(b, rs))


@pytest.fixture
def rng():
    return random.Random(20260810)
