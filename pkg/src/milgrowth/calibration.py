"""Exact inversion of the growth function for preset construction.

Given target growth rates at known burdens, recover the baseline
productivity or the two innovation coefficients. Two observations pin down
``(phi, chi)`` exactly; there is no least-squares fitting here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_model import GrowthParams, RegimePoint
from .errors import SingularityError, ValidationError

_REL_EPS = 1e-12


@dataclass(frozen=True)
class GrowthObservation:
    m: float
    g: float
    d: float = 0.0

    def __post_init__(self):
        RegimePoint(self.m, self.d)


def solve_a0(s: float, delta: float, phi: float, chi: float, obs: GrowthObservation) -> float:
    """Baseline productivity that reproduces ``obs.g`` at ``(obs.m, obs.d)``."""
    m = obs.m
    shape = 1.0 + phi * m - chi * m * m
    scale = 1.0 + phi * m + chi * m * m
    if abs(shape) <= _REL_EPS * scale:
        raise SingularityError(f"productivity polynomial vanishes at m={m!r}")
    a0 = (obs.g + delta + obs.d) / (s * (1.0 - m) * shape)
    # Validates the remaining fields too (a0 > 0 in particular).
    return GrowthParams(s=s, delta=delta, a0=a0, phi=phi, chi=chi).a0


def fit_innovation(s: float, delta: float, a0: float,
                   obs1: GrowthObservation, obs2: GrowthObservation) -> tuple[float, float]:
    """Solve for ``(phi, chi)`` from two growth observations.

    Each observation gives one linear equation
    ``phi*m - chi*m^2 = (g + delta + d) / (s (1-m) a0) - 1``.
    """
    GrowthParams(s=s, delta=delta, a0=a0)
    for name, o in (("obs1", obs1), ("obs2", obs2)):
        if not o.m > 0.0:
            raise ValidationError(f"burden must be positive, got {o.m!r}", f"{name}.m")

    def rhs(o):
        return (o.g + delta + o.d) / (s * (1.0 - o.m) * a0) - 1.0

    m1, m2 = obs1.m, obs2.m
    y1, y2 = rhs(obs1), rhs(obs2)
    # [[m1, -m1^2], [m2, -m2^2]] @ [phi, chi] = [y1, y2]
    det = m1 * m2 * (m1 - m2)
    if abs(det) <= _REL_EPS * m1 * m2 * max(m1, m2):
        raise SingularityError(f"observations at m={m1!r} and m={m2!r} are not independent")
    phi = (m1 * m1 * y2 - m2 * m2 * y1) / det
    chi = (m1 * y2 - m2 * y1) / det
    return phi, chi
