"""Peace and war trajectories for one or more uncoupled economies."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .core_model import GrowthParams, RegimePoint, check_regime, growth_rate, productivity, step
from .errors import AnnihilationError, ValidationError

DEFAULT_HORIZON = 10
DEFAULT_CAPITAL = 100.0


@dataclass(frozen=True)
class Schedule:
    """Piecewise-constant path of regimes over ``horizon`` periods.

    ``entries`` holds ``(start_period, regime)`` pairs; each regime stays in
    force until the next start. Changes are instantaneous.
    """

    entries: tuple[tuple[int, RegimePoint], ...]
    horizon: int = DEFAULT_HORIZON

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((int(t), r) for t, r in self.entries))
        if isinstance(self.horizon, bool) or not isinstance(self.horizon, int) or self.horizon < 1:
            raise ValidationError(f"need a positive integer, got {self.horizon!r}", "horizon")
        if not self.entries:
            raise ValidationError("schedule has no entries", "entries")
        if self.entries[0][0] != 0:
            raise ValidationError("first entry must start at period 0", "entries[0]")
        for i, (start, regime) in enumerate(self.entries):
            if not isinstance(regime, RegimePoint):
                raise ValidationError(f"expected a RegimePoint, got {regime!r}", f"entries[{i}]")
            if start >= self.horizon:
                raise ValidationError(
                    f"start {start} is not before horizon {self.horizon}", f"entries[{i}]"
                )
            if i and start <= self.entries[i - 1][0]:
                raise ValidationError("start periods must strictly increase", f"entries[{i}]")

    @classmethod
    def constant(cls, regime: RegimePoint, horizon: int = DEFAULT_HORIZON) -> Schedule:
        return cls(((0, regime),), horizon)

    @classmethod
    def war_episode(cls, peace: RegimePoint, war: RegimePoint, start: int, end: int,
                    horizon: int = DEFAULT_HORIZON) -> Schedule:
        """War on periods ``start <= t < end``, peace otherwise."""
        if not 0 <= start < end:
            raise ValidationError(f"need 0 <= start < end, got {start}, {end}", "war")
        entries = []
        if start > 0:
            entries.append((0, peace))
        if start < horizon:
            entries.append((start, war))
        if end < horizon:
            entries.append((end, peace))
        if not entries:
            entries.append((0, peace))
        return cls(tuple(entries), horizon)

    def regime_at(self, t: int) -> RegimePoint:
        starts = [s for s, _ in self.entries]
        return self.entries[bisect.bisect_right(starts, t) - 1][1]

    def regimes(self) -> list[RegimePoint]:
        return [self.regime_at(t) for t in range(self.horizon)]


@dataclass(frozen=True)
class Country:
    name: str
    params: GrowthParams
    initial_capital: float = DEFAULT_CAPITAL

    def __post_init__(self):
        if not self.initial_capital > 0.0:
            raise ValidationError(
                f"must be positive, got {self.initial_capital!r}", "initial_capital"
            )


@dataclass(frozen=True)
class PeriodRecord:
    period: int
    m: float
    d: float
    capital: float
    output: float
    investment: float
    growth: float


@dataclass(frozen=True)
class Trajectory:
    """Per-period records plus the capital stock left at the horizon."""

    country: str
    records: tuple[PeriodRecord, ...]
    terminal_capital: float

    @property
    def capital(self) -> list[float]:
        """Capital path ``K_0 .. K_T`` (horizon + 1 values)."""
        return [r.capital for r in self.records] + [self.terminal_capital]

    @property
    def output(self) -> list[float]:
        return [r.output for r in self.records]


def validate_schedule(p: GrowthParams, sched: Schedule) -> None:
    for i, (_, regime) in enumerate(sched.entries):
        try:
            check_regime(p, regime)
        except ValidationError as exc:
            raise ValidationError(str(exc), f"entries[{i}]") from None


def simulate(c: Country, sched: Schedule, initial_capital: float | None = None) -> Trajectory:
    """Iterate the capital recursion over the schedule's horizon.

    ``initial_capital`` overrides the country's starting stock, which lets a
    run resume from another trajectory's terminal capital.
    """
    validate_schedule(c.params, sched)
    capital = c.initial_capital if initial_capital is None else initial_capital
    if not capital > 0.0:
        raise ValidationError(f"must be positive, got {capital!r}", "initial_capital")

    records = []
    for t, regime in enumerate(sched.regimes()):
        try:
            res = step(c.params, regime, capital)
        except AnnihilationError as exc:
            raise AnnihilationError(f"{c.name}: {exc}", period=t) from None
        records.append(PeriodRecord(
            period=t,
            m=regime.m,
            d=regime.d,
            capital=capital,
            output=productivity(c.params, regime.m) * capital,
            investment=res.civilian_investment,
            growth=res.realized_growth,
        ))
        capital = res.next_capital
    return Trajectory(c.name, tuple(records), capital)


@dataclass(frozen=True)
class LossReport:
    """Output shortfall of an actual path against its counterfactual.

    ``gaps[t]`` is counterfactual minus actual output in period ``t``.
    ``terminal_ratio`` compares the capital, hence the output index, reached
    at the horizon: ``K_T(actual) / K_T(counterfactual)``.
    """

    actual: Trajectory
    counterfactual: Trajectory
    gaps: tuple[float, ...]
    cumulative_gap: float
    terminal_ratio: float


def counterfactual_loss(c: Country, actual: Schedule, counterfactual: Schedule) -> LossReport:
    if actual.horizon != counterfactual.horizon:
        raise ValidationError(
            f"horizons differ: {actual.horizon} vs {counterfactual.horizon}", "horizon"
        )
    act = simulate(c, actual)
    cf = simulate(c, counterfactual)
    gaps = tuple(b - a for a, b in zip(act.output, cf.output))
    return LossReport(
        actual=act,
        counterfactual=cf,
        gaps=gaps,
        cumulative_gap=sum(gaps),
        terminal_ratio=act.terminal_capital / cf.terminal_capital,
    )


@dataclass(frozen=True)
class CountryComparison:
    country: str
    peace_growth: float
    war_growth: float
    terminal_ratio: float
    output_loss: tuple[float, ...]


@dataclass(frozen=True)
class ComparisonReport:
    horizon: int
    rows: tuple[CountryComparison, ...] = field(default_factory=tuple)


def peace_war_table(countries, peace, war, horizon: int = DEFAULT_HORIZON) -> ComparisonReport:
    """Growth under each country's peace and war regimes.

    The terminal ratio compounds the two growth rates over ``horizon``
    periods (war path over peace path); the loss series is per-period output
    forgone under permanent war. Rows follow the input order.
    """
    countries = list(countries)
    peace = list(peace)
    war = list(war)
    if not len(countries) == len(peace) == len(war):
        raise ValidationError("need one peace and one war regime per country", "regimes")
    rows = []
    for c, rp, rw in zip(countries, peace, war):
        loss = counterfactual_loss(c, Schedule.constant(rw, horizon), Schedule.constant(rp, horizon))
        rows.append(CountryComparison(
            country=c.name,
            peace_growth=growth_rate(c.params, rp),
            war_growth=growth_rate(c.params, rw),
            terminal_ratio=loss.terminal_ratio,
            output_loss=loss.gaps,
        ))
    return ComparisonReport(horizon=horizon, rows=tuple(rows))
