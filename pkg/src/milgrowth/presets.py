"""Built-in parameter sets: the single-economy baseline and the US/Iran pair."""

from __future__ import annotations

from dataclasses import dataclass

from .core_model import GrowthParams, RegimePoint
from .errors import ValidationError
from .scenario import DEFAULT_CAPITAL, Country


@dataclass(frozen=True)
class Preset:
    name: str
    params: GrowthParams
    peace: RegimePoint | None = None
    war: RegimePoint | None = None

    def country(self, initial_capital: float = DEFAULT_CAPITAL) -> Country:
        return Country(self.name, self.params, initial_capital)


BASELINE = Preset("baseline", GrowthParams(s=0.20, delta=0.05, a0=0.30, phi=5.0, chi=60.0))

US = Preset(
    "us",
    GrowthParams(s=0.22, delta=0.05, a0=0.35, phi=6.0, chi=50.0),
    peace=RegimePoint(m=0.035, d=0.0),
    war=RegimePoint(m=0.07, d=0.01),
)

IRAN = Preset(
    "iran",
    GrowthParams(s=0.18, delta=0.06, a0=0.25, phi=4.0, chi=70.0),
    peace=RegimePoint(m=0.03, d=0.0),
    war=RegimePoint(m=0.10, d=0.03),
)

PRESETS = {p.name: p for p in (BASELINE, US, IRAN)}

REGIMES = {
    "us-peace": US.peace,
    "us-war": US.war,
    "iran-peace": IRAN.peace,
    "iran-war": IRAN.war,
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name.strip().lower()]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValidationError(f"unknown preset {name!r} (known: {known})", "preset") from None


def get_regime(name: str) -> RegimePoint:
    try:
        return REGIMES[name.strip().lower()]
    except KeyError:
        known = ", ".join(sorted(REGIMES))
        raise ValidationError(f"unknown regime {name!r} (known: {known})", "regime") from None
