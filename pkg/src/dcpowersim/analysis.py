"""Derived analyses on top of the engine.

Curtailment inverts the forward model: the facility total is strictly
increasing in utilisation, so a plain bisection recovers the utilisation
that hits a power target.  Targets below the floor load (everything idle)
or above the design peak are reported infeasible together with the nearest
achievable total rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import CoolingArchitecture, ScenarioConfig
from .engine import PeakContext, peak_context, simulate, step_power
from .errors import OutOfRange
from .profiles import AmbientProfile, UtilisationProfile

CURTAIL_RELATIVE_TOLERANCE = 1e-6
CURTAIL_MAX_ITERATIONS = 64

# Which breakdown components constitute "cooling" for each architecture.
_COOLING_COMPONENTS = {
    CoolingArchitecture.CRAH_CHILLER: ("chiller", "crah", "pumps"),
    CoolingArchitecture.CRAC: ("crac",),
    CoolingArchitecture.FREE_AIR: ("crah",),
}


@dataclass(frozen=True)
class CurtailmentSolution:
    target_total_w: float
    required_utilisation: float
    achieved_total_w: float
    feasible: bool


@dataclass(frozen=True)
class PowerCurve:
    """Facility total versus utilisation at one outdoor temperature."""

    temperature_c: float
    points: tuple[tuple[float, float], ...]   # (utilisation, total watts)


@dataclass(frozen=True)
class ArchitectureComparison:
    baseline: CoolingArchitecture
    alternative: CoolingArchitecture
    timestamps: tuple[str, ...]
    baseline_cooling_w: tuple[float, ...]
    alternative_cooling_w: tuple[float, ...]
    baseline_cooling_energy_wh: float
    alternative_cooling_energy_wh: float

    @property
    def relative_increase(self) -> float:
        return (self.alternative_cooling_energy_wh
                / self.baseline_cooling_energy_wh - 1.0)


def curtail(target_total_w: float, ambient_c: float,
            scenario: ScenarioConfig, ctx: PeakContext) -> CurtailmentSolution:
    """Find the utilisation whose facility total matches a curtailment target.

    Feasible solutions satisfy the relative tolerance on the achieved
    total; infeasible targets return the nearest bound with the relevant
    endpoint utilisation.
    """
    if target_total_w <= 0.0:
        raise OutOfRange("curtailment target must be positive")
    floor_w = step_power(0.0, ambient_c, scenario, ctx).total_w
    peak_w = step_power(1.0, ambient_c, scenario, ctx).total_w
    tolerance_w = CURTAIL_RELATIVE_TOLERANCE * target_total_w
    if abs(floor_w - target_total_w) <= tolerance_w:
        return CurtailmentSolution(target_total_w, 0.0, floor_w, True)
    if abs(peak_w - target_total_w) <= tolerance_w:
        return CurtailmentSolution(target_total_w, 1.0, peak_w, True)
    if target_total_w < floor_w:
        return CurtailmentSolution(target_total_w, 0.0, floor_w, False)
    if target_total_w > peak_w:
        return CurtailmentSolution(target_total_w, 1.0, peak_w, False)

    low, high = 0.0, 1.0
    mid = 0.5
    achieved_w = floor_w
    for _ in range(CURTAIL_MAX_ITERATIONS):
        mid = 0.5 * (low + high)
        achieved_w = step_power(mid, ambient_c, scenario, ctx).total_w
        if abs(achieved_w - target_total_w) <= tolerance_w:
            break
        if achieved_w < target_total_w:
            low = mid
        else:
            high = mid
    return CurtailmentSolution(target_total_w, mid, achieved_w, True)


def peak_breakdown(scenario: ScenarioConfig) -> dict[str, float]:
    """Fractional component shares at full load and reference temperature."""
    ctx = peak_context(scenario)
    breakdown = step_power(1.0, scenario.reference_ambient_c, scenario, ctx)
    return {name: watts / breakdown.total_w
            for name, watts in breakdown.as_dict().items()}


def power_curve(temps_c: list[float], scenario: ScenarioConfig,
                n_points: int) -> list[PowerCurve]:
    """Facility total as a function of utilisation, one curve per temperature."""
    if n_points < 2:
        raise OutOfRange("a curve needs at least 2 points")
    ctx = peak_context(scenario)
    grid = [i / (n_points - 1) for i in range(n_points)]
    curves = []
    for temp_c in temps_c:
        points = tuple(
            (u, step_power(u, temp_c, scenario, ctx).total_w) for u in grid)
        curves.append(PowerCurve(temperature_c=temp_c, points=points))
    return curves


def cooling_power(step_breakdown: dict[str, float],
                  architecture: CoolingArchitecture) -> float:
    """Total cooling draw of one breakdown under the given architecture."""
    return sum(step_breakdown[name]
               for name in _COOLING_COMPONENTS[architecture])


def compare_architectures(
    utilisation: UtilisationProfile,
    ambient: AmbientProfile,
    scenario: ScenarioConfig,
    baseline: CoolingArchitecture = CoolingArchitecture.CRAH_CHILLER,
    alternative: CoolingArchitecture = CoolingArchitecture.CRAC,
) -> ArchitectureComparison:
    """Run the same profiles under two cooling architectures.

    Each run uses its own design peak (the misc constant and pump gating
    follow the architecture); the comparison reports the per-step cooling
    draw and the relative cooling-energy increase of the alternative.
    """
    base_result = simulate(utilisation, ambient,
                           scenario.with_architecture(baseline))
    alt_result = simulate(utilisation, ambient,
                          scenario.with_architecture(alternative))
    base_series = tuple(
        cooling_power(step.power.as_dict(), baseline)
        for step in base_result.steps)
    alt_series = tuple(
        cooling_power(step.power.as_dict(), alternative)
        for step in alt_result.steps)
    return ArchitectureComparison(
        baseline=baseline,
        alternative=alternative,
        timestamps=utilisation.timestamps,
        baseline_cooling_w=base_series,
        alternative_cooling_w=alt_series,
        baseline_cooling_energy_wh=sum(base_series),
        alternative_cooling_energy_wh=sum(alt_series),
    )
