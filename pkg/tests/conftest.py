import random
from fractions import Fraction
from math import isqrt

import pytest

from cfbounds.exact import QuadSurd


def make_random_surd(rng: random.Random, dmax: int = 400) -> QuadSurd:
    """A uniformly-messy quadratic irrational (a + b*sqrt(d))/c."""
    while True:
        d = rng.randint(2, dmax)
        if isqrt(d) ** 2 == d:
            continue
        a = rng.randint(-30, 30)
        b = rng.choice([-1, 1]) * rng.randint(1, 12)
        c = rng.choice([-1, 1]) * rng.randint(1, 25)
        return QuadSurd.make(a, b, c, d)


@pytest.fixture
def rng():
    return random.Random(20260826)
