import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from milgrowth import (BASELINE, DegenerateError, GrowthParams, IRAN, Regime, RegimePoint, SweepGrid,
                       US, ValidationError, classify_regime, comparative_statics, growth_rate,
                       optimal_burden, sweep)
from milgrowth.analysis import critical_points

from conftest import random_params, random_regime


def factored_growth(p, m, d=0.0):
    m = np.asarray(m, dtype=float)
    return -p.delta - d + p.s * (1 - m) * p.a0 * (1 + p.phi * m - p.chi * m * m)


def grid_oracle(p, d=0.0, lo=0.0, hi=1.0, step=1e-5):
    ms = np.linspace(lo, hi, int(round((hi - lo) / step)) + 1)
    gs = factored_growth(p, ms, d)
    i = int(np.argmax(gs))
    return ms[i], gs[i]


def roots_oracle(p):
    """Critical points from the companion-matrix eigenvalues of dg/dm."""
    r = np.roots([3 * p.chi, -2 * (p.phi + p.chi), p.phi - 1])
    return sorted(float(x.real) for x in r if abs(x.imag) < 1e-12)


# -- sweep ----------------------------------------------------------------------

def test_sweep_baseline_figure_range():
    pts = sweep(BASELINE.params, SweepGrid(0.0, 0.08, 401))
    assert len(pts) == 401
    assert pts[0] == (0.0, 0.01) or pts[0][1] == pytest.approx(0.01, abs=1e-17)
    assert pts[-1][0] == 0.08
    gs = [g for _, g in pts]
    peak = int(np.argmax(gs))
    assert 0 < peak < 400
    assert all(a < b for a, b in zip(gs[:peak], gs[1:peak + 1]))
    assert all(a > b for a, b in zip(gs[peak:], gs[peak + 1:]))


def test_sweep_us_positive_up_to_eight_percent():
    pts = sweep(US.params, SweepGrid(0.0, 0.12, 601))
    assert all(g > 0 for m, g in pts if m <= 0.08)


def test_sweep_two_points():
    pts = sweep(US.params, SweepGrid(0.01, 0.05, 2))
    assert [m for m, _ in pts] == [0.01, 0.05]
    assert pts[1][1] == growth_rate(US.params, RegimePoint(0.05))


def test_sweep_level_shift_with_destruction():
    grid = SweepGrid(0.0, 0.12, 121)
    base = sweep(IRAN.params, grid)
    war = sweep(IRAN.params, grid, d=0.03)
    assert [g - 0.03 for _, g in base] == [g for _, g in war]


@pytest.mark.parametrize("args", [(0.05, 0.05, 10), (-0.1, 0.05, 10), (0.0, 1.0, 10), (0.0, 0.1, 1)])
def test_grid_invariants(args):
    with pytest.raises(ValidationError):
        SweepGrid(*args)


# -- optimiser ------------------------------------------------------------------

def test_baseline_optimum():
    rep = optimal_burden(BASELINE.params)
    expected = (130 - np.sqrt(130**2 - 4 * 180 * 4)) / 360
    assert rep.m_star == pytest.approx(expected, rel=1e-13)
    assert rep.m_star == pytest.approx(0.0322, abs=1e-4)
    assert rep.g_star == pytest.approx(0.0138, abs=1e-4)
    assert rep.interior
    assert rep.second_root == pytest.approx(roots_oracle(BASELINE.params)[1], rel=1e-12)


@pytest.mark.parametrize("preset, approx_m", [(BASELINE, 0.0322), (US, 0.0477), (IRAN, 0.0209)])
def test_optimum_matches_grid_oracle(preset, approx_m):
    rep = optimal_burden(preset.params)
    gm, gg = grid_oracle(preset.params)
    assert abs(rep.m_star - gm) <= 1e-5
    assert rep.g_star >= gg - 1e-15
    assert rep.m_star == pytest.approx(approx_m, abs=1e-4)


def test_critical_points_match_companion_roots():
    rng = random.Random(3)
    for _ in range(100):
        p = random_params(rng)
        assert critical_points(p) == pytest.approx(roots_oracle(p), rel=1e-10)


def test_optimum_independent_of_savings_and_destruction():
    ref = optimal_burden(US.params).m_star
    assert optimal_burden(US.params.replace(s=0.3)).m_star == ref
    assert optimal_burden(US.params, d=0.02).m_star == ref


def test_no_innovation_gain_gives_boundary_maximum():
    p = GrowthParams(s=0.2, delta=0.05, a0=0.3, phi=0.0, chi=60.0)
    rep = optimal_burden(p)
    assert rep.m_star == 0.0
    assert not rep.interior
    assert rep.g_star == pytest.approx(0.01)


def test_linear_case_rejected():
    with pytest.raises(DegenerateError):
        optimal_burden(GrowthParams(s=0.2, delta=0.05, a0=0.3))
    with pytest.raises(DegenerateError):
        optimal_burden(GrowthParams(s=0.2, delta=0.05, a0=0.3, phi=1.0))


def test_quadratic_free_case_has_linear_slope():
    # chi = 0, phi > 1: slope (phi-1) - 2 phi m vanishes at (phi-1)/(2 phi).
    p = GrowthParams(s=0.2, delta=0.05, a0=0.3, phi=3.0)
    rep = optimal_burden(p)
    assert rep.m_star == pytest.approx(1 / 3)
    assert rep.interior


def test_endpoint_beats_interior_when_range_is_narrow():
    rep = optimal_burden(BASELINE.params, m_min=0.05, m_max=0.08)
    assert rep.m_star == 0.05 and not rep.interior


def test_hump_certificate_random():
    rng = random.Random(5)
    for _ in range(50):
        p = random_params(rng)
        lo, hi = critical_points(p)
        rep = optimal_burden(p)
        assert rep.m_star == lo
        ms = np.linspace(0, min(hi, 0.999), 2001)
        gs = factored_growth(p, ms)
        before = ms < lo
        between = ms > lo
        assert np.all(np.diff(gs[before]) > 0)
        assert np.all(np.diff(gs[between]) < 0)


# -- comparative statics --------------------------------------------------------

def fd_partials(p, r, h=1e-7):
    def g(**kw):
        m = kw.pop("m", r.m)
        d = kw.pop("d", r.d)
        q = p.replace(**kw)
        return float(factored_growth(q, m, d))

    out = {}
    for name in ("s", "delta", "a0", "phi", "chi"):
        v = getattr(p, name)
        out[name] = (g(**{name: v + h}) - g(**{name: v - h})) / (2 * h)
    out["m"] = (g(m=r.m + h) - g(m=r.m - h)) / (2 * h)
    out["d"] = (g(d=r.d + h) - g(d=r.d - h)) / (2 * h)
    return out


def test_statics_at_zero_burden():
    part = comparative_statics(BASELINE.params, RegimePoint(0.0))
    assert part.s == 0.3
    assert part.delta == -1.0 and part.d == -1.0
    assert part.phi == 0.0 and part.chi == 0.0


def test_first_order_condition_at_optimum():
    m_star = optimal_burden(BASELINE.params).m_star
    assert comparative_statics(BASELINE.params, RegimePoint(m_star)).m == pytest.approx(0.0, abs=1e-15)


def test_statics_us_against_finite_differences():
    r = RegimePoint(0.035)
    analytic = comparative_statics(US.params, r).as_dict()
    numeric = fd_partials(US.params, r)
    for name, value in analytic.items():
        assert numeric[name] == pytest.approx(value, rel=1e-5), name


def test_statics_random_against_finite_differences():
    rng = random.Random(9)
    for _ in range(100):
        p, r = random_params(rng), random_regime(rng)
        r = RegimePoint(max(r.m, 1e-3), max(r.d, 1e-3))
        analytic = comparative_statics(p, r).as_dict()
        numeric = fd_partials(p, r)
        for name, value in analytic.items():
            assert numeric[name] == pytest.approx(value, rel=1e-5, abs=1e-9), name


# -- classification -------------------------------------------------------------

def test_classify():
    m_star = optimal_burden(BASELINE.params).m_star
    assert classify_regime(BASELINE.params, 0.07) is Regime.PERMANENT_WAR_ECONOMY
    assert classify_regime(BASELINE.params, m_star) is Regime.NEAR_OPTIMUM
    assert classify_regime(BASELINE.params, 0.01) is Regime.BELOW_OPTIMUM
    assert classify_regime(IRAN.params, 0.03) is Regime.PERMANENT_WAR_ECONOMY
    assert classify_regime(BASELINE.params, m_star + 5e-5) is Regime.NEAR_OPTIMUM
    assert classify_regime(BASELINE.params, m_star + 5e-5, tol=1e-5) is Regime.PERMANENT_WAR_ECONOMY


def test_classify_iran_optimum_location():
    expected = (148 - np.sqrt(148**2 - 4 * 210 * 3)) / 420
    assert optimal_burden(IRAN.params).m_star == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(0.0209, abs=1e-4)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, 0.12))
def test_peace_regimes_classified_consistently(m):
    label = classify_regime(US.params, m)
    m_star = optimal_burden(US.params).m_star
    assert (label is Regime.PERMANENT_WAR_ECONOMY) == (m > m_star + 1e-4)
