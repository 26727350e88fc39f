"""AK growth with a military burden.

Output is linear in capital, ``Y = A(m) K``, and productivity responds to the
military burden ``m`` through a quadratic::

    A(m) = a0 * (1 + phi*m - chi*m**2)

A fraction ``s`` of civilian output ``(1 - m) Y`` is invested, capital
depreciates at ``delta`` and, in wartime, is destroyed at an extra rate ``d``.
The net growth rate per period is therefore::

    g(m, d) = -delta - d + s * (1 - m) * A(m)

With ``phi = chi = 0`` productivity is constant and only the crowding-out
channel remains. Periods are years; rates are fractions (0.035 means 3.5%).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AnnihilationError, ValidationError


def _check_finite(value, field):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(f"expected a number, got {value!r}", field)
    if not math.isfinite(value):
        raise ValidationError(f"must be finite, got {value!r}", field)


def _check_burden(m, field="m"):
    _check_finite(m, field)
    if not 0.0 <= m < 1.0:
        raise ValidationError(f"military burden must lie in [0, 1), got {m!r}", field)


@dataclass(frozen=True)
class GrowthParams:
    """Technology and saving primitives of one economy."""

    s: float
    delta: float
    a0: float
    phi: float = 0.0
    chi: float = 0.0

    def __post_init__(self):
        for name in ("s", "delta", "a0", "phi", "chi"):
            _check_finite(getattr(self, name), name)
        if not 0.0 < self.s < 1.0:
            raise ValidationError(f"must lie in (0, 1), got {self.s!r}", "s")
        if not 0.0 < self.delta < 1.0:
            raise ValidationError(f"must lie in (0, 1), got {self.delta!r}", "delta")
        if not self.a0 > 0.0:
            raise ValidationError(f"must be positive, got {self.a0!r}", "a0")
        if self.phi < 0.0:
            raise ValidationError(f"must be non-negative, got {self.phi!r}", "phi")
        if self.chi < 0.0:
            raise ValidationError(f"must be non-negative, got {self.chi!r}", "chi")

    def replace(self, **changes) -> GrowthParams:
        fields = {k: getattr(self, k) for k in ("s", "delta", "a0", "phi", "chi")}
        fields.update(changes)
        return GrowthParams(**fields)


@dataclass(frozen=True)
class RegimePoint:
    """Policy state for one period: military burden and war destruction rate."""

    m: float
    d: float = 0.0

    def __post_init__(self):
        _check_burden(self.m, "m")
        _check_finite(self.d, "d")
        if self.d < 0.0:
            raise ValidationError(f"destruction rate must be non-negative, got {self.d!r}", "d")


@dataclass(frozen=True)
class EconomyState:
    capital: float
    output: float

    def __post_init__(self):
        _check_finite(self.capital, "capital")
        _check_finite(self.output, "output")
        if not self.capital > 0.0:
            raise ValidationError(f"must be positive, got {self.capital!r}", "capital")


@dataclass(frozen=True)
class StepResult:
    next_capital: float
    civilian_investment: float
    realized_growth: float


def check_regime(p: GrowthParams, r: RegimePoint) -> None:
    """Reject a regime whose combined capital loss wipes out the stock."""
    if not p.delta + r.d < 1.0:
        raise ValidationError(
            f"delta + d must be below 1, got {p.delta!r} + {r.d!r}", "d"
        )


def productivity(p: GrowthParams, m: float) -> float:
    """Productivity of capital at burden ``m``.

    Not clamped at zero: a burden far beyond the vertex ``phi / (2 chi)``
    yields negative productivity and strongly negative growth.
    """
    _check_burden(m)
    return p.a0 * (1.0 + p.phi * m - p.chi * m * m)


def state_at(p: GrowthParams, m: float, capital: float) -> EconomyState:
    return EconomyState(capital=capital, output=productivity(p, m) * capital)


def investment_rate(p: GrowthParams, m: float) -> float:
    """Civilian investment per unit of capital, ``s (1 - m) A(m)``."""
    return p.s * (1.0 - m) * productivity(p, m)


def growth_rate(p: GrowthParams, r: RegimePoint) -> float:
    """Net growth rate of capital and output per period."""
    check_regime(p, r)
    return investment_rate(p, r.m) - p.delta - r.d


def step(p: GrowthParams, r: RegimePoint, st: EconomyState | float) -> StepResult:
    """Advance capital by one period.

    ``st`` may be an :class:`EconomyState` or a bare capital level. Raises
    :class:`AnnihilationError` when the next capital stock is not positive.
    """
    check_regime(p, r)
    capital = st.capital if isinstance(st, EconomyState) else st
    _check_finite(capital, "capital")
    if not capital > 0.0:
        raise ValidationError(f"must be positive, got {capital!r}", "capital")

    investment = investment_rate(p, r.m) * capital
    next_capital = (1.0 - p.delta - r.d) * capital + investment
    if not next_capital > 0.0:
        raise AnnihilationError(
            f"capital falls to {next_capital!r} under m={r.m!r}, d={r.d!r}"
        )
    # Same association as growth_rate; (next - K)/K would lose digits when g is small.
    realized = investment / capital - p.delta - r.d
    return StepResult(next_capital, investment, realized)
