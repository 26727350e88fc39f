"""TOML configuration files.

Layout (every table optional)::

    [growth.<name>]          # a new economy or an override of a built-in preset
    preset = "us"            # start from this preset (default: <name> if built in)
    s = 0.22                 # any of s, delta, a0, phi, chi
    peace_m = 0.035          # peacetime regime
    war_m = 0.07             # wartime regime
    war_d = 0.01
    initial_capital = 100.0

    [demand]                 # c0, c1, tau, i0, i1, i2, r, g_c, g_m (all required)

    [grid]                   # m_min, m_max, steps
    [scenario]               # horizon, war_start, war_end

Everything is validated on load, before any computation runs.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .core_model import GrowthParams, RegimePoint
from .demand import DemandParams
from .errors import ValidationError
from .presets import PRESETS, Preset
from .scenario import DEFAULT_CAPITAL

GROWTH_KEYS = {"s", "delta", "a0", "phi", "chi"}
ECONOMY_KEYS = GROWTH_KEYS | {"preset", "peace_m", "peace_d", "war_m", "war_d", "initial_capital"}
DEMAND_KEYS = ("c0", "c1", "tau", "i0", "i1", "i2", "r", "g_c", "g_m")
GRID_KEYS = {"m_min", "m_max", "steps"}
SCENARIO_KEYS = {"horizon", "war_start", "war_end"}
TOP_KEYS = {"growth", "demand", "grid", "scenario"}


@dataclass(frozen=True)
class Economy:
    preset: Preset
    initial_capital: float = DEFAULT_CAPITAL


@dataclass
class Config:
    economies: dict[str, Economy] = field(default_factory=dict)
    demand: DemandParams | None = None
    grid: dict = field(default_factory=dict)
    scenario: dict = field(default_factory=dict)

    def economy(self, name: str) -> Economy | None:
        return self.economies.get(name.strip().lower())


def _reject_unknown(table: dict, allowed, path: str):
    for key in table:
        if key not in allowed:
            raise ValidationError(f"unknown key {key!r}", f"{path}.{key}" if path else key)


def _number(table, key, path):
    value = table[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"expected a number, got {value!r}", f"{path}.{key}")
    return float(value)


def _integer(table, key, path):
    value = table[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", f"{path}.{key}")
    return value


def _rethrow(exc: ValidationError, path: str):
    inner = exc.field
    msg = str(exc)
    if inner and msg.startswith(f"{inner}: "):
        msg = msg[len(inner) + 2:]
    return ValidationError(msg, f"{path}.{inner}" if inner else path)


def _economy(name: str, table: dict) -> Economy:
    path = f"growth.{name}"
    if not isinstance(table, dict):
        raise ValidationError("expected a table", path)
    _reject_unknown(table, ECONOMY_KEYS, path)

    base_name = table.get("preset", name if name in PRESETS else None)
    if base_name is not None:
        if base_name not in PRESETS:
            raise ValidationError(f"unknown preset {base_name!r}", f"{path}.preset")
        base = PRESETS[base_name]
        values = {k: getattr(base.params, k) for k in GROWTH_KEYS}
        peace, war = base.peace, base.war
    else:
        missing = sorted(GROWTH_KEYS - {"phi", "chi"} - set(table))
        if missing:
            raise ValidationError("missing required key", f"{path}.{missing[0]}")
        values = {"phi": 0.0, "chi": 0.0}
        peace = war = None

    for key in GROWTH_KEYS & set(table):
        values[key] = _number(table, key, path)
    try:
        params = GrowthParams(**values)
    except ValidationError as exc:
        raise _rethrow(exc, path) from None

    try:
        if "peace_m" in table or "peace_d" in table:
            peace = RegimePoint(
                _number(table, "peace_m", path) if "peace_m" in table else (peace.m if peace else 0.0),
                _number(table, "peace_d", path) if "peace_d" in table else 0.0,
            )
        if "war_m" in table or "war_d" in table:
            if war is None and "war_m" not in table:
                raise ValidationError("war_d given without war_m", f"{path}.war_m")
            war = RegimePoint(
                _number(table, "war_m", path) if "war_m" in table else war.m,
                _number(table, "war_d", path) if "war_d" in table else (war.d if war else 0.0),
            )
    except ValidationError as exc:
        if exc.field and exc.field.startswith(path):
            raise
        raise _rethrow(exc, path) from None
    for label, regime in (("peace", peace), ("war", war)):
        if regime is not None and not params.delta + regime.d < 1.0:
            raise ValidationError("delta + d must be below 1", f"{path}.{label}_d")

    capital = DEFAULT_CAPITAL
    if "initial_capital" in table:
        capital = _number(table, "initial_capital", path)
        if not capital > 0.0:
            raise ValidationError(f"must be positive, got {capital!r}", f"{path}.initial_capital")
    return Economy(Preset(name, params, peace, war), capital)


def parse_config(data: dict) -> Config:
    _reject_unknown(data, TOP_KEYS, "")
    cfg = Config()

    growth = data.get("growth", {})
    if not isinstance(growth, dict):
        raise ValidationError("expected a table", "growth")
    for name, table in growth.items():
        cfg.economies[name.lower()] = _economy(name.lower(), table)

    if "demand" in data:
        table = data["demand"]
        _reject_unknown(table, DEMAND_KEYS, "demand")
        for key in DEMAND_KEYS:
            if key not in table:
                raise ValidationError("missing required key", f"demand.{key}")
        values = {k: _number(table, k, "demand") for k in DEMAND_KEYS}
        try:
            cfg.demand = DemandParams(**values)
        except ValidationError as exc:
            raise _rethrow(exc, "demand") from None

    if "grid" in data:
        table = data["grid"]
        _reject_unknown(table, GRID_KEYS, "grid")
        for key in ("m_min", "m_max"):
            if key in table:
                cfg.grid[key] = _number(table, key, "grid")
        if "steps" in table:
            cfg.grid["steps"] = _integer(table, "steps", "grid")

    if "scenario" in data:
        table = data["scenario"]
        _reject_unknown(table, SCENARIO_KEYS, "scenario")
        for key in SCENARIO_KEYS & set(table):
            cfg.scenario[key] = _integer(table, key, "scenario")
    return cfg


def load_config(path) -> Config:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config: {exc.strerror}", "config") from None
    except tomllib.TOMLDecodeError as exc:
        raise ValidationError(f"malformed TOML: {exc}", "config") from None
    return parse_config(data)
