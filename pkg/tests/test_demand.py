import random

import pytest
from hypothesis import given, settings, strategies as st

from milgrowth import DemandParams, InstabilityError, ValidationError, equilibrium, multiplier
from milgrowth.demand import consumption, excess_demand, investment

EXAMPLE = DemandParams(c0=10, c1=0.8, tau=0.25, i0=5, i1=0.1, i2=20, r=0.05, g_c=10, g_m=5)


def test_equilibrium_hand_example():
    sol = equilibrium(EXAMPLE)
    assert sol.multiplier == pytest.approx(10 / 3, rel=1e-14)
    assert sol.output == pytest.approx(29 / 0.3, rel=1e-14)
    # Income identity at the solution.
    y = sol.output
    assert consumption(EXAMPLE, y) + investment(EXAMPLE, y) + 10 + 5 == pytest.approx(y, rel=1e-12)


def test_decomposition():
    sol = equilibrium(EXAMPLE)
    assert sol.autonomous_component + sol.multiplier * EXAMPLE.g_m == pytest.approx(sol.output, rel=1e-14)


def test_zero_denominator_is_unstable():
    with pytest.raises(InstabilityError) as info:
        DemandParams(c0=10, c1=0.9, tau=1e-300, i0=5, i1=0.1, i2=20, r=0.05, g_c=10, g_m=5)
    assert info.value.denominator <= 0


def test_unstable_report_carries_denominator():
    with pytest.raises(InstabilityError, match="-0.3"):
        DemandParams(c0=0, c1=0.8, tau=0.25, i0=0, i1=0.7, i2=1, r=0, g_c=0, g_m=0)


@pytest.mark.parametrize("field, value", [("c1", 0.0), ("c1", 1.0), ("tau", 0.0), ("tau", 1.0),
                                          ("i1", 0.0), ("i2", 0.0), ("c0", float("nan"))])
def test_parameter_bounds(field, value):
    with pytest.raises(ValidationError) as info:
        EXAMPLE.replace(**{field: value})
    assert info.value.field == field


def test_multiplier_small_propensities():
    p = EXAMPLE.replace(c1=0.01, tau=0.5, i1=0.005)
    assert multiplier(p) == pytest.approx(1 / 0.99, rel=1e-14)


def test_spending_increment_raises_output_by_multiplier():
    base = equilibrium(EXAMPLE)
    more_m = equilibrium(EXAMPLE.replace(g_m=EXAMPLE.g_m + 1))
    more_c = equilibrium(EXAMPLE.replace(g_c=EXAMPLE.g_c + 1))
    assert more_m.output - base.output == pytest.approx(base.multiplier, rel=1e-12)
    assert more_c.output - base.output == pytest.approx(base.multiplier, rel=1e-12)


def random_demand(rng):
    while True:
        c1, tau, i1 = rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.6), rng.uniform(0.01, 0.3)
        if 1 - c1 * (1 - tau) - i1 > 0.02:
            return DemandParams(c0=rng.uniform(0, 50), c1=c1, tau=tau, i0=rng.uniform(0, 50),
                                i1=i1, i2=rng.uniform(1, 50), r=rng.uniform(0, 0.1),
                                g_c=rng.uniform(0, 40), g_m=rng.uniform(0, 40))


def test_fixed_point_and_finite_difference_random():
    rng = random.Random(11)
    for _ in range(300):
        p = random_demand(rng)
        sol = equilibrium(p)
        assert abs(excess_demand(p, sol.output)) <= 1e-10 * abs(sol.output)
        h = 1e-6
        fd = (equilibrium(p.replace(g_m=p.g_m + h)).output - equilibrium(p.replace(g_m=p.g_m - h)).output) / (2 * h)
        assert fd == pytest.approx(sol.multiplier, rel=1e-6)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.05, 0.9), st.floats(0.05, 0.9), st.floats(0.01, 0.2), st.floats(1e-4, 0.05))
def test_multiplier_increasing_in_c1_and_i1(c1, tau, i1, bump):
    if 1 - (c1 + bump) * (1 - tau) - (i1 + bump) <= 1e-3:
        return
    p = EXAMPLE.replace(c1=c1, tau=tau, i1=i1)
    assert multiplier(p.replace(c1=c1 + bump)) > multiplier(p)
    assert multiplier(p.replace(i1=i1 + bump)) > multiplier(p)
    assert multiplier(p) > 0
