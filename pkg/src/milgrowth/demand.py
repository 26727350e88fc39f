"""Short-run goods-market equilibrium with military spending.

Closed economy, proportional taxes, exogenous interest rate::

    Y = C + I + G_c + G_m
    C = c0 + c1 (1 - tau) Y
    I = i0 + i1 Y - i2 r

which solves to ``Y = k0 + k1 G_m`` with multiplier
``k1 = 1 / (1 - c1 (1 - tau) - i1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import InstabilityError, ValidationError


def _denominator(c1, tau, i1):
    return 1.0 - c1 * (1.0 - tau) - i1


@dataclass(frozen=True)
class DemandParams:
    """Keynesian primitives plus the two government spending components.

    Construction fails with :class:`InstabilityError` when the equilibrium
    would not be stable, so every instance has a positive multiplier.
    """

    c0: float
    c1: float
    tau: float
    i0: float
    i1: float
    i2: float
    r: float
    g_c: float
    g_m: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(f"expected a number, got {value!r}", f.name)
            if not math.isfinite(value):
                raise ValidationError(f"must be finite, got {value!r}", f.name)
        if not 0.0 < self.c1 < 1.0:
            raise ValidationError(f"must lie in (0, 1), got {self.c1!r}", "c1")
        if not 0.0 < self.tau < 1.0:
            raise ValidationError(f"must lie in (0, 1), got {self.tau!r}", "tau")
        if not self.i1 > 0.0:
            raise ValidationError(f"must be positive, got {self.i1!r}", "i1")
        if not self.i2 > 0.0:
            raise ValidationError(f"must be positive, got {self.i2!r}", "i2")
        den = _denominator(self.c1, self.tau, self.i1)
        if not den > 0.0:
            raise InstabilityError(den)

    def replace(self, **changes) -> DemandParams:
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return DemandParams(**values)


@dataclass(frozen=True)
class DemandSolution:
    output: float
    multiplier: float
    autonomous_component: float


def multiplier(p: DemandParams) -> float:
    """Output response to one extra unit of military (or civilian) spending."""
    den = _denominator(p.c1, p.tau, p.i1)
    if not den > 0.0:
        raise InstabilityError(den)
    return 1.0 / den


def equilibrium(p: DemandParams) -> DemandSolution:
    k1 = multiplier(p)
    output = (p.c0 + p.i0 - p.i2 * p.r + p.g_c + p.g_m) * k1
    return DemandSolution(
        output=output,
        multiplier=k1,
        autonomous_component=output - k1 * p.g_m,
    )


def consumption(p: DemandParams, output: float) -> float:
    return p.c0 + p.c1 * (1.0 - p.tau) * output


def investment(p: DemandParams, output: float) -> float:
    return p.i0 + p.i1 * output - p.i2 * p.r


def excess_demand(p: DemandParams, output: float) -> float:
    """Aggregate demand minus output; zero at equilibrium."""
    return consumption(p, output) + investment(p, output) + p.g_c + p.g_m - output
