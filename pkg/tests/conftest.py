import random
from fractions import Fraction

import pytest

from milgrowth import GrowthParams, RegimePoint


def random_params(rng: random.Random) -> GrowthParams:
    """Economies in the neighbourhood of the built-in presets, hump-shaped."""
    return GrowthParams(
        s=rng.uniform(0.1, 0.35),
        delta=rng.uniform(0.02, 0.1),
        a0=rng.uniform(0.15, 0.5),
        phi=rng.uniform(1.5, 10.0),
        chi=rng.uniform(20.0, 120.0),
    )


def random_regime(rng: random.Random) -> RegimePoint:
    return RegimePoint(m=rng.uniform(0.0, 0.15), d=rng.uniform(0.0, 0.05))


def exact_growth(p, m, d=0.0) -> Fraction:
    """Growth rate in rational arithmetic from the float inputs."""
    F = Fraction
    m, d = F(m), F(d)
    return -F(p.delta) - d + F(p.s) * (1 - m) * F(p.a0) * (1 + F(p.phi) * m - F(p.chi) * m * m)


@pytest.fixture
def rng():
    return random.Random(20240611)
