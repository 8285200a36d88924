"""Command-line interface.

Subcommands::

    simulate   run profiles through the model, write the results CSV
    peak       print the design-peak breakdown (watts and shares)
    curtail    solve the utilisation for a total-power target
    curve      tabulate total power versus utilisation per temperature
    compare    run chilled-water vs CRAC cooling over the same profiles

Exit codes: 0 success, 1 usage error, 2 data or model error.  Output files
are written via temp-then-rename; nothing is left behind on failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile

from . import analysis, engine, profiles, svg
from .config import CoolingArchitecture, ScenarioConfig, parse_scenario_config
from .errors import SimulationError

_USAGE_EXIT = 1
_DATA_EXIT = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract
    # reserves 2 for data errors, so remap to 1.
    def error(self, message: str):  # noqa: D401 - argparse API
        self.print_usage(sys.stderr)
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _temps_list(raw: str) -> list[float]:
    try:
        return [float(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--temps expects a comma-separated list of numbers, got {raw!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="dcpowersim",
                     description="Hourly data-centre power simulator")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add_config(p: _Parser) -> None:
        p.add_argument("--config", required=True, help="scenario config file")

    sim = sub.add_parser("simulate", help="simulate profiles to a CSV")
    add_config(sim)
    sim.add_argument("--utilisation", required=True)
    sim.add_argument("--weather", required=True)
    sim.add_argument("--out", required=True)
    sim.add_argument("--svg", help="optional stacked-area chart")

    peak = sub.add_parser("peak", help="print the design-peak breakdown")
    add_config(peak)
    peak.add_argument("--arch",
                      choices=[a.value for a in CoolingArchitecture])

    curtail = sub.add_parser("curtail",
                             help="solve utilisation for a power target")
    add_config(curtail)
    curtail.add_argument("--ambient-c", type=float, required=True)
    curtail.add_argument("--target-w", type=float, required=True)

    curve = sub.add_parser("curve",
                           help="total power vs utilisation per temperature")
    add_config(curve)
    curve.add_argument("--temps", type=_temps_list, required=True)
    curve.add_argument("--points", type=int, default=21)
    curve.add_argument("--out", required=True)
    curve.add_argument("--svg")
    curve.add_argument("--arch",
                       choices=[a.value for a in CoolingArchitecture])

    compare = sub.add_parser("compare",
                             help="chilled-water vs CRAC cooling energy")
    add_config(compare)
    compare.add_argument("--utilisation", required=True)
    compare.add_argument("--weather", required=True)
    compare.add_argument("--out", required=True)
    compare.add_argument("--svg")
    return parser


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise SimulationError(f"cannot read {path}: {exc}") from exc


def _load_scenario(path: str,
                   arch_override: str | None = None) -> ScenarioConfig:
    try:
        scenario = parse_scenario_config(_read_text(path))
    except SimulationError as exc:
        raise SimulationError(f"{path}: {exc}") from exc
    if arch_override:
        scenario = scenario.with_architecture(
            CoolingArchitecture(arch_override))
    return scenario


def _load_profiles(utilisation_path: str, weather_path: str):
    try:
        utilisation = profiles.parse_utilisation_csv(
            _read_text(utilisation_path))
    except SimulationError as exc:
        raise SimulationError(f"{utilisation_path}: {exc}") from exc
    try:
        ambient = profiles.parse_temperature_csv(_read_text(weather_path))
    except SimulationError as exc:
        raise SimulationError(f"{weather_path}: {exc}") from exc
    return utilisation, ambient


def _write_all_atomic(payloads: dict[str, str]) -> None:
    """Write every file or none: stage temps first, then rename them all."""
    staged: list[tuple[str, str]] = []
    try:
        for path, text in payloads.items():
            directory = os.path.dirname(os.path.abspath(path))
            fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
            staged.append((tmp_path, path))
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        for tmp_path, _ in staged:
            try:
                os.unlink(tmp_path)
            except OSError:
                pass
        raise SimulationError(f"cannot write output: {exc}") from exc
    for tmp_path, path in staged:
        os.replace(tmp_path, path)


def _cmd_simulate(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.config)
    utilisation, ambient = _load_profiles(args.utilisation, args.weather)
    result = engine.simulate(utilisation, ambient, scenario)
    payloads = {args.out: profiles.write_results_csv(result)}
    if args.svg:
        labels = list(engine.COMPONENT_NAMES)
        rows = [[step.power.as_dict()[name] for name in labels]
                for step in result.steps]
        payloads[args.svg] = svg.render_stacked_area(
            labels, rows, title="Hourly power breakdown")
    _write_all_atomic(payloads)
    return 0


def _cmd_peak(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.config, args.arch)
    ctx = engine.peak_context(scenario)
    breakdown = engine.step_power(1.0, scenario.reference_ambient_c,
                                  scenario, ctx)
    print("component,power_w,share")
    for name, watts in breakdown.as_dict().items():
        print(f"{name},{watts:.10g},{watts / breakdown.total_w:.10g}")
    print(f"total,{breakdown.total_w:.10g},1")
    return 0


def _cmd_curtail(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.config)
    ctx = engine.peak_context(scenario)
    solution = analysis.curtail(args.target_w, args.ambient_c, scenario, ctx)
    print(f"utilisation,{solution.required_utilisation:.10g}")
    print(f"achieved_total_w,{solution.achieved_total_w:.10g}")
    print(f"target_total_w,{solution.target_total_w:.10g}")
    print(f"feasible,{'true' if solution.feasible else 'false'}")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.config, args.arch)
    curves = analysis.power_curve(args.temps, scenario, args.points)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["temp_c", "utilisation", "total_w"])
    for curve in curves:
        for utilisation, total_w in curve.points:
            writer.writerow([f"{curve.temperature_c:.10g}",
                             f"{utilisation:.10g}", f"{total_w:.10g}"])
    payloads = {args.out: out.getvalue()}
    if args.svg:
        series = [(f"{curve.temperature_c:g} C", list(curve.points))
                  for curve in curves]
        payloads[args.svg] = svg.render_lines(
            series, title="Total power vs utilisation")
    _write_all_atomic(payloads)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.config)
    utilisation, ambient = _load_profiles(args.utilisation, args.weather)
    comparison = analysis.compare_architectures(utilisation, ambient,
                                                scenario)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    base_col = f"{comparison.baseline.value}_cooling_w"
    alt_col = f"{comparison.alternative.value}_cooling_w"
    writer.writerow(["timestamp", "utilisation", "ambient_c",
                     base_col, alt_col])
    for i, stamp in enumerate(comparison.timestamps):
        writer.writerow([stamp, f"{utilisation.values[i]:.10g}",
                         f"{ambient.values[i]:.10g}",
                         f"{comparison.baseline_cooling_w[i]:.10g}",
                         f"{comparison.alternative_cooling_w[i]:.10g}"])
    payloads = {args.out: out.getvalue()}
    if args.svg:
        hours = range(len(comparison.timestamps))
        series = [
            (comparison.baseline.value,
             [(float(h), w) for h, w in zip(hours,
                                            comparison.baseline_cooling_w)]),
            (comparison.alternative.value,
             [(float(h), w) for h, w in zip(hours,
                                            comparison.alternative_cooling_w)]),
        ]
        payloads[args.svg] = svg.render_lines(
            series, title="Cooling power by architecture")
    _write_all_atomic(payloads)
    print(f"baseline_cooling_energy_wh,"
          f"{comparison.baseline_cooling_energy_wh:.10g}")
    print(f"alternative_cooling_energy_wh,"
          f"{comparison.alternative_cooling_energy_wh:.10g}")
    print(f"relative_increase,{comparison.relative_increase:.10g}")
    return 0


_COMMANDS = {
    "simulate": _cmd_simulate,
    "peak": _cmd_peak,
    "curtail": _cmd_curtail,
    "curve": _cmd_curve,
    "compare": _cmd_compare,
}


def run(argv: list[str]) -> int:
    """Parse ``argv`` and execute; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except SimulationError as exc:
        print(f"dcpowersim: error: {exc}", file=sys.stderr)
        return _DATA_EXIT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
