"""Command-line interface.

Every subcommand parses, validates, computes, and only then writes files
and standard output, so a failed run leaves no partial artifacts. Errors go
to stderr as ``milgrowth:error:<kind>:<field>: <message>``; exit status is 1
for validation errors and 2 for computation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analysis, calibration, demand, scenario
from .config import Config, load_config
from .core_model import RegimePoint, growth_rate
from .errors import ComputationError, ValidationError
from .plot import PALETTE, Marker, Series, render_svg
from .presets import PRESETS, Preset, get_preset, get_regime

VERIFY_STEP = 1e-5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message, "argv")


def fmt(x) -> str:
    """CSV number format: 9 significant digits."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.9g}"
    return str(x)


def pct(x: float) -> str:
    return f"{100.0 * x:.2f}%"


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


class Output:
    """Collects stdout text and files; nothing is written until ``flush``."""

    def __init__(self):
        self.stdout = ""
        self.files: list[tuple[str, str]] = []

    def flush(self, stream):
        for path, text in self.files:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        stream.write(self.stdout)


def emit_table(out: Output, args, header, rows, text: str, payload):
    """Route one result table to stdout in the requested format and to --out."""
    if args.format == "csv":
        out.stdout = to_csv(header, rows)
    elif args.format == "json":
        out.stdout = json.dumps(payload, indent=2) + "\n"
    else:
        out.stdout = text
    if getattr(args, "out", None):
        out.files.append((args.out, to_csv(header, rows)))


# -- parameter resolution ---------------------------------------------------

def resolve_preset(name: str, cfg: Config) -> tuple[Preset, float]:
    econ = cfg.economy(name)
    if econ is not None:
        return econ.preset, econ.initial_capital
    return get_preset(name), scenario.DEFAULT_CAPITAL


def apply_overrides(preset: Preset, args) -> Preset:
    changes = {k: getattr(args, k) for k in ("s", "delta", "a0", "phi", "chi")
               if getattr(args, k, None) is not None}
    if not changes:
        return preset
    return Preset(preset.name, preset.params.replace(**changes), preset.peace, preset.war)


def preset_list(args, cfg) -> list[tuple[Preset, float]]:
    names = [n for n in args.preset.split(",") if n.strip()]
    if not names:
        raise ValidationError("no preset given", "preset")
    result = []
    for n in names:
        p, k0 = resolve_preset(n, cfg)
        result.append((apply_overrides(p, args), k0))
    return result


# -- subcommands ------------------------------------------------------------

def cmd_demand(args, cfg, out):
    flags = {"c0": args.c0, "c1": args.c1, "tau": args.tau, "i0": args.i0, "i1": args.i1,
             "i2": args.i2, "r": args.r, "g_c": args.g_c, "g_m": args.g_m}
    if cfg.demand is not None:
        params = cfg.demand.replace(**{k: v for k, v in flags.items() if v is not None})
    else:
        missing = [k for k, v in flags.items() if v is None]
        if missing:
            raise ValidationError("missing required parameter", f"demand.{missing[0]}")
        params = demand.DemandParams(**flags)
    sol = demand.equilibrium(params)
    header = ["output", "multiplier", "autonomous_component"]
    row = [sol.output, sol.multiplier, sol.autonomous_component]
    text = (f"equilibrium output     {sol.output:.6f}\n"
            f"military multiplier    {sol.multiplier:.6f}\n"
            f"autonomous component   {sol.autonomous_component:.6f}\n")
    emit_table(out, args, header, [row], text, dict(zip(header, row)))


def _regime_from_args(args, preset: Preset) -> RegimePoint:
    if args.regime:
        return get_regime(args.regime)
    m = args.m
    if m is None:
        m = preset.peace.m if preset.peace is not None else 0.0
    return RegimePoint(m, args.d)


def cmd_growth(args, cfg, out):
    preset = preset_list(args, cfg)[0][0]
    regime = _regime_from_args(args, preset)
    g = growth_rate(preset.params, regime)
    header = ["country", "m", "d", "g"]
    row = [preset.name, regime.m, regime.d, g]
    text = f"{preset.name}: g(m={regime.m:g}, d={regime.d:g}) = {g:.7f} ({pct(g)})\n"
    emit_table(out, args, header, [row], text, dict(zip(header, row)))


def _grid(args, cfg) -> analysis.SweepGrid:
    values = {"m_min": 0.0, "m_max": 0.08, "steps": 401}
    values.update(cfg.grid)
    for key in ("m_min", "m_max", "steps"):
        if getattr(args, key) is not None:
            values[key] = getattr(args, key)
    return analysis.SweepGrid(**values)


def cmd_sweep(args, cfg, out):
    presets = preset_list(args, cfg)
    grid = _grid(args, cfg)
    curves = [(p, analysis.sweep(p.params, grid, args.d)) for p, _ in presets]

    many = len(curves) > 1
    header = ["series", "m", "g"] if many else ["m", "g"]
    rows = [([p.name] if many else []) + [m, g] for p, pts in curves for m, g in pts]
    text_lines = []
    for p, pts in curves:
        best = max(pts, key=lambda mg: mg[1])
        text_lines.append(
            f"{p.name}: {len(pts)} points on [{grid.m_min:g}, {grid.m_max:g}], "
            f"g({pts[0][0]:g}) = {pts[0][1]:.7f}, grid max g = {best[1]:.7f} at m = {best[0]:.5f}"
        )
    payload = {p.name: {"m": [m for m, _ in pts], "g": [g for _, g in pts]} for p, pts in curves}
    emit_table(out, args, header, rows, "\n".join(text_lines) + "\n", payload)

    if args.plot:
        if args.data_only:
            out.files.append((args.plot, to_csv(["series", "m", "g"],
                                                [[p.name, m, g] for p, pts in curves for m, g in pts])))
        else:
            series = [Series(p.name, tuple(pts)) for p, pts in curves]
            markers = []
            for i, (p, _) in enumerate(curves):
                color = PALETTE[i % len(PALETTE)]
                if p.peace is not None:
                    markers.append(Marker(p.peace.m, "dotted", color, f"{p.name} peace"))
                if p.war is not None:
                    markers.append(Marker(p.war.m, "dashdot", color, f"{p.name} war"))
            for m in args.marker or ():
                markers.append(Marker(m, "dashed"))
            out.files.append((args.plot, render_svg(series, markers)))


def cmd_optimize(args, cfg, out):
    presets = preset_list(args, cfg)
    header = ["country", "m_star", "g_star", "interior", "second_root", "grid_m_star", "grid_g_star"]
    rows, lines, payload = [], [], {}
    for p, _ in presets:
        rep = analysis.optimal_burden(p.params, args.d, args.m_min, args.m_max)
        gm = gg = None
        if args.verify:
            gm, gg = analysis.grid_argmax(p.params, args.d, args.m_min, args.m_max, VERIFY_STEP)
            if abs(gm - rep.m_star) > VERIFY_STEP * (1 + 1e-9):
                raise ComputationError(
                    f"{p.name}: closed-form m*={rep.m_star!r} disagrees with grid argmax {gm!r}"
                )
        rows.append([p.name, rep.m_star, rep.g_star, rep.interior, rep.second_root, gm, gg])
        payload[p.name] = dict(zip(header[1:], rows[-1][1:]))
        kind = "interior" if rep.interior else "boundary"
        line = f"{p.name}: m* = {rep.m_star:.6f} ({kind}), g* = {rep.g_star:.7f} ({pct(rep.g_star)})"
        if args.verify:
            line += f"; grid check m* = {gm:.5f}, g = {gg:.7f}"
        lines.append(line)
    emit_table(out, args, header, rows, "\n".join(lines) + "\n", payload)


def cmd_statics(args, cfg, out):
    preset = preset_list(args, cfg)[0][0]
    regime = _regime_from_args(args, preset)
    partials = analysis.comparative_statics(preset.params, regime).as_dict()
    header = ["parameter", "partial"]
    rows = [[k, v] for k, v in partials.items()]
    lines = [f"{preset.name} at m={regime.m:g}, d={regime.d:g}:"]
    lines += [f"  dg/d{k:<6} {v: .7f}" for k, v in partials.items()]
    payload = {"country": preset.name, "m": regime.m, "d": regime.d, "partials": partials}
    try:
        label = analysis.classify_regime(preset.params, regime.m, args.tol).value
        lines.append(f"  regime: {label}")
        payload["regime"] = label
    except ComputationError:
        pass
    emit_table(out, args, header, rows, "\n".join(lines) + "\n", payload)


TRAJ_HEADER = ["period", "country", "m", "d", "capital", "output", "investment", "growth"]


def _traj_rows(traj: scenario.Trajectory):
    return [[r.period, traj.country, r.m, r.d, r.capital, r.output, r.investment, r.growth]
            for r in traj.records]


def cmd_scenario(args, cfg, out):
    presets = preset_list(args, cfg)
    horizon = args.horizon if args.horizon is not None else cfg.scenario.get("horizon", scenario.DEFAULT_HORIZON)
    start = args.war_start if args.war_start is not None else cfg.scenario.get("war_start", 0)
    end = args.war_end if args.war_end is not None else cfg.scenario.get("war_end", horizon)
    for p, _ in presets:
        if p.peace is None or p.war is None:
            raise ValidationError(f"{p.name!r} has no peace/war regimes", "preset")
    countries = [scenario.Country(p.name, p.params, k0) for p, k0 in presets]

    losses = []
    for (p, _), c in zip(presets, countries):
        actual = scenario.Schedule.war_episode(p.peace, p.war, start, end, horizon)
        losses.append(scenario.counterfactual_loss(c, actual, scenario.Schedule.constant(p.peace, horizon)))
    traj_rows = [row for loss in losses for row in _traj_rows(loss.actual)]

    if args.table3:
        report = scenario.peace_war_table(countries, [p.peace for p, _ in presets],
                                          [p.war for p, _ in presets], horizon)
        header = ["country", "peace_g", "war_g", "terminal_ratio"]
        rows = [[r.country, r.peace_growth, r.war_growth, r.terminal_ratio] for r in report.rows]
        lines = [f"{'country':<10}{'peace':>10}{'war':>10}   output ratio after {horizon} periods"]
        lines += [f"{r.country:<10}{pct(r.peace_growth):>10}{pct(r.war_growth):>10}   {r.terminal_ratio:.6f}"
                  for r in report.rows]
        payload = {r.country: {"peace_g": r.peace_growth, "war_g": r.war_growth,
                               "terminal_ratio": r.terminal_ratio,
                               "output_loss": list(r.output_loss)} for r in report.rows}
    else:
        header = TRAJ_HEADER
        rows = traj_rows
        lines = [f"war on periods [{start}, {min(end, horizon)}) of {horizon}; counterfactual: peace throughout"]
        lines += [f"{loss.actual.country}: cumulative output gap {loss.cumulative_gap:.6f}, "
                  f"terminal ratio {loss.terminal_ratio:.6f}" for loss in losses]
        payload = {loss.actual.country: {"gaps": list(loss.gaps), "cumulative_gap": loss.cumulative_gap,
                                         "terminal_ratio": loss.terminal_ratio,
                                         "trajectory": [dict(zip(TRAJ_HEADER, r)) for r in _traj_rows(loss.actual)]}
                   for loss in losses}
    if args.format == "csv":
        out.stdout = to_csv(header, rows)
    elif args.format == "json":
        out.stdout = json.dumps(payload, indent=2) + "\n"
    else:
        out.stdout = "\n".join(lines) + "\n"
    if args.out:
        out.files.append((args.out, to_csv(TRAJ_HEADER, traj_rows)))


def cmd_calibrate(args, cfg, out):
    base = None
    if args.preset:
        base = preset_list(args, cfg)[0][0].params

    def need(name):
        value = getattr(args, name)
        if value is None and base is not None and hasattr(base, name):
            value = getattr(base, name)
        if value is None:
            raise ValidationError("missing required parameter", f"calibrate.{name}")
        return value

    if args.target == "a0":
        obs = calibration.GrowthObservation(need("m"), need("g"), args.d)
        a0 = calibration.solve_a0(need("s"), need("delta"), need("phi"), need("chi"), obs)
        rows = [["a0", a0]]
    else:
        obs1 = calibration.GrowthObservation(need("m1"), need("g1"), args.d)
        obs2 = calibration.GrowthObservation(need("m2"), need("g2"), args.d)
        phi, chi = calibration.fit_innovation(need("s"), need("delta"), need("a0"), obs1, obs2)
        rows = [["phi", phi], ["chi", chi]]
    text = "".join(f"{k} = {v:.10g}\n" for k, v in rows)
    emit_table(out, args, ["parameter", "value"], rows, text, dict(rows))


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="TOML file with parameter blocks")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="also write the result table as CSV")

    growth_opts = _Parser(add_help=False)
    growth_opts.add_argument("--preset", default="baseline",
                             help=f"comma-separated; built in: {', '.join(PRESETS)}")
    for name in ("s", "delta", "a0", "phi", "chi"):
        growth_opts.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float)

    regime_opts = _Parser(add_help=False)
    regime_opts.add_argument("--m", type=float, help="military burden")
    regime_opts.add_argument("--d", type=float, default=0.0, help="war destruction rate")
    regime_opts.add_argument("--regime", help="named regime, e.g. us-war")

    parser = _Parser(prog="milgrowth", description="Militarized-growth models.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("demand", parents=[common], help="Keynesian equilibrium and multiplier")
    for name in ("c0", "c1", "tau", "i0", "i1", "i2", "r", "g_c", "g_m"):
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float)
    p.set_defaults(func=cmd_demand)

    p = sub.add_parser("growth", parents=[common, growth_opts, regime_opts], help="evaluate g(m, d)")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("sweep", parents=[common, growth_opts], help="growth over a grid of burdens")
    p.add_argument("--m-min", dest="m_min", type=float)
    p.add_argument("--m-max", dest="m_max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--d", type=float, default=0.0)
    p.add_argument("--plot", help="write an SVG chart of the sweep")
    p.add_argument("--data-only", action="store_true", help="write the chart's CSV instead of SVG")
    p.add_argument("--marker", type=float, action="append", help="extra vertical line at m")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimize", parents=[common, growth_opts], help="growth-maximising burden")
    p.add_argument("--d", type=float, default=0.0)
    p.add_argument("--m-min", dest="m_min", type=float, default=0.0)
    p.add_argument("--m-max", dest="m_max", type=float, default=1.0)
    p.add_argument("--verify", action="store_true", help=f"cross-check on a {VERIFY_STEP:g} grid")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("statics", parents=[common, growth_opts, regime_opts], help="partial derivatives of g")
    p.add_argument("--tol", type=float, default=1e-4, help="near-optimum band for classification")
    p.set_defaults(func=cmd_statics)

    p = sub.add_parser("scenario", parents=[common, growth_opts], help="peace/war trajectories")
    p.set_defaults(preset="us,iran")
    p.add_argument("--table3", action="store_true", help="peace vs war growth table")
    p.add_argument("--horizon", type=int)
    p.add_argument("--war-start", dest="war_start", type=int)
    p.add_argument("--war-end", dest="war_end", type=int)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("calibrate", parents=[common], help="invert the growth function")
    p.add_argument("--target", choices=("a0", "innovation"), required=True)
    p.add_argument("--preset", help="take s, delta, a0, phi, chi from a preset")
    for name in ("s", "delta", "a0", "phi", "chi", "m", "g", "m1", "g1", "m2", "g2"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--d", type=float, default=0.0)
    p.set_defaults(func=cmd_calibrate)
    return parser


def _report(kind, exc, stream):
    field = getattr(exc, "field", None) or "-"
    msg = str(exc)
    if field != "-" and msg.startswith(f"{field}: "):
        msg = msg[len(field) + 2:]
    stream.write(f"milgrowth:error:{kind}:{field}: {msg}\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "format", None) is None:
            args.format = "text"
        cfg = load_config(args.config) if getattr(args, "config", None) else Config()
        out = Output()
        args.func(args, cfg, out)
    except ValidationError as exc:
        _report("validation", exc, stderr)
        return 1
    except ComputationError as exc:
        _report("computation", exc, stderr)
        return 2
    try:
        out.flush(stdout)
    except OSError as exc:
        _report("io", ValidationError(exc.strerror or str(exc), "out"), stderr)
        return 1
    return 0


def main():
    sys.exit(run())
