"""Static analysis of the growth function in the military burden.

Expanding the growth function gives a cubic in ``m``::

    g(m) = -delta - d + s*a0 * (1 + (phi-1) m - (phi+chi) m^2 + chi m^3)

so its slope is a quadratic and the growth-maximising burden has a closed
form. Everything here is evaluated without iteration.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core_model import GrowthParams, RegimePoint, check_regime, growth_rate, productivity
from .errors import DegenerateError, ValidationError


@dataclass(frozen=True)
class SweepGrid:
    m_min: float = 0.0
    m_max: float = 0.08
    steps: int = 401

    def __post_init__(self):
        if not 0.0 <= self.m_min < self.m_max < 1.0:
            raise ValidationError(
                f"need 0 <= m_min < m_max < 1, got [{self.m_min!r}, {self.m_max!r}]",
                "grid",
            )
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 2:
            raise ValidationError(f"need an integer >= 2, got {self.steps!r}", "grid.steps")

    def points(self) -> list[float]:
        return np.linspace(self.m_min, self.m_max, self.steps).tolist()


@dataclass(frozen=True)
class OptimumReport:
    m_star: float
    g_star: float
    interior: bool
    second_root: float | None


@dataclass(frozen=True)
class Partials:
    s: float
    delta: float
    a0: float
    phi: float
    chi: float
    m: float
    d: float

    def as_dict(self) -> dict[str, float]:
        return dict(self.__dict__)


class Regime(str, enum.Enum):
    BELOW_OPTIMUM = "below-optimum"
    NEAR_OPTIMUM = "near-optimum"
    PERMANENT_WAR_ECONOMY = "permanent-war-economy"


def sweep(p: GrowthParams, grid: SweepGrid, d: float = 0.0) -> list[tuple[float, float]]:
    """Growth at ``grid.steps`` equally spaced burdens, endpoints included."""
    return [(m, growth_rate(p, RegimePoint(m, d))) for m in grid.points()]


def growth_poly(p: GrowthParams, m, d: float = 0.0):
    """Growth as the expanded cubic; accepts arrays and ``m = 1``.

    Agrees with :func:`growth_rate` up to rounding and is meant for dense
    grids and endpoint checks rather than reported values.
    """
    m = np.asarray(m, dtype=float)
    cubic = 1.0 + (p.phi - 1.0) * m - (p.phi + p.chi) * m**2 + p.chi * m**3
    return -p.delta - d + p.s * p.a0 * cubic


def slope(p: GrowthParams, m: float) -> float:
    """dg/dm; independent of ``delta`` and ``d``."""
    return p.s * p.a0 * ((p.phi - 1.0) - 2.0 * (p.phi + p.chi) * m + 3.0 * p.chi * m * m)


def curvature(p: GrowthParams, m: float) -> float:
    return p.s * p.a0 * (-2.0 * (p.phi + p.chi) + 6.0 * p.chi * m)


def critical_points(p: GrowthParams) -> list[float]:
    """Real roots of dg/dm, ascending.

    The quadratic ``3chi m^2 - 2(phi+chi) m + (phi-1)`` is solved with the
    cancellation-free form: the larger-magnitude root from the formula, the
    other from the product of roots.
    """
    a = 3.0 * p.chi
    b = -2.0 * (p.phi + p.chi)
    c = p.phi - 1.0
    if a == 0.0:
        if b == 0.0:
            return []
        return [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q / a, c / q])


def optimal_burden(
    p: GrowthParams, d: float = 0.0, m_min: float = 0.0, m_max: float = 1.0
) -> OptimumReport:
    """Growth-maximising military burden on ``[m_min, m_max]``.

    The local maximum of the cubic is picked by the sign of the second
    derivative. It competes with both endpoints, so a maximum sitting on the
    boundary is reported with ``interior=False`` rather than as an error.
    ``m_max`` may be 1, where the civilian share vanishes.
    """
    if not 0.0 <= m_min < m_max <= 1.0:
        raise ValidationError(f"need 0 <= m_min < m_max <= 1, got [{m_min!r}, {m_max!r}]")
    if d < 0.0 or not p.delta + d < 1.0:
        raise ValidationError(f"need d >= 0 and delta + d < 1, got d={d!r}", "d")
    if p.chi == 0.0 and p.phi <= 1.0:
        raise DegenerateError(
            f"growth is monotone decreasing for chi=0, phi={p.phi!r} <= 1; maximum at m=0"
        )

    roots = critical_points(p)
    local_max = None
    second = None
    for root in roots:
        if curvature(p, root) < 0.0:
            local_max = root
        else:
            second = root

    def value(m):
        return float(growth_poly(p, m, d))

    candidates = []
    if local_max is not None and m_min < local_max < m_max:
        candidates.append((value(local_max), 0, local_max, True))
    candidates.append((value(m_min), 1, m_min, False))
    candidates.append((value(m_max), 1, m_max, False))
    # Highest growth wins; ties go to the interior root.
    g_star, _, m_star, interior = max(candidates, key=lambda c: (c[0], -c[1]))

    if m_star < 1.0:
        g_star = growth_rate(p, RegimePoint(m_star, d))
    if not interior and local_max is not None:
        second = local_max if second is None else second
    return OptimumReport(m_star=m_star, g_star=g_star, interior=interior, second_root=second)


def grid_argmax(p: GrowthParams, d: float = 0.0, m_min: float = 0.0,
                m_max: float = 1.0, step: float = 1e-5) -> tuple[float, float]:
    """Brute-force maximiser on a uniform grid; the optimiser's oracle."""
    n = int(round((m_max - m_min) / step)) + 1
    ms = np.linspace(m_min, m_max, n)
    gs = growth_poly(p, ms, d)
    i = int(np.argmax(gs))
    return float(ms[i]), float(gs[i])


def comparative_statics(p: GrowthParams, r: RegimePoint) -> Partials:
    """Analytic partial derivatives of the growth rate."""
    check_regime(p, r)
    m = r.m
    civ = 1.0 - m
    shape = 1.0 + p.phi * m - p.chi * m * m
    return Partials(
        s=civ * productivity(p, m),
        delta=-1.0,
        a0=p.s * civ * shape,
        phi=p.s * p.a0 * civ * m,
        chi=-p.s * p.a0 * civ * m * m,
        m=slope(p, m),
        d=-1.0,
    )


def classify_regime(p: GrowthParams, m: float, tol: float = 1e-4) -> Regime:
    """Place a burden relative to the growth-maximising level."""
    RegimePoint(m)
    m_star = optimal_burden(p).m_star
    if m < m_star - tol:
        return Regime.BELOW_OPTIMUM
    if m > m_star + tol:
        return Regime.PERMANENT_WAR_ECONOMY
    return Regime.NEAR_OPTIMUM
