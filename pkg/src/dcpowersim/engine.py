"""Composition engine: per-hour power breakdown and time-series runs.

The component models are combined per the configured cooling architecture:

    crah_chiller   chiller (temperature-adjusted) + CRAH fans + water pumps
    crac           CRAC with temperature-adjusted condenser; no pumps
    free_air       CRAH fans only; no refrigeration, no pumps

Two loads are defined relative to the facility total rather than any one
component, which makes the total self-referential:

  * miscellaneous load is a constant fraction of the design peak,
  * pump load (chilled-water loops only) is a fraction of the
    instantaneous total.

Both resolve in closed form.  With S the component sum at design
conditions, phi the pump fraction and mu the misc fraction:

    total_peak = S / (1 - phi - mu)
    total(t)   = (components(t) + misc) / (1 - phi)

Each hour is steady state; steps are independent given the peak context
and are evaluated in timestamp order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cooling, power_chain, server_farm
from .config import CoolingArchitecture, ScenarioConfig
from .errors import (EmptyProfile, EmptyResult, InvalidFractions,
                     InvariantViolation, ProfileMismatch)
from .profiles import AmbientProfile, UtilisationProfile

COMPONENT_NAMES = ("server_farm", "pdu_loss", "ups_loss", "chiller", "crah",
                   "crac", "pumps", "misc")


@dataclass(frozen=True)
class PowerBreakdown:
    """Per-component power at one instant, watts.

    The total is computed on construction as the plain left-to-right sum
    of the eight components, so additivity is exact by construction.
    """

    server_farm_w: float
    pdu_loss_w: float
    ups_loss_w: float
    chiller_w: float
    crah_w: float
    crac_w: float
    pumps_w: float
    misc_w: float
    total_w: float = field(init=False)

    def __post_init__(self) -> None:
        components = self.as_dict()
        for name, value in components.items():
            if value < 0.0:
                raise InvariantViolation(
                    f"component {name} is negative: {value}")
        object.__setattr__(self, "total_w", sum(components.values()))

    def as_dict(self) -> dict[str, float]:
        """Components in the canonical order, without the total."""
        return {
            "server_farm": self.server_farm_w,
            "pdu_loss": self.pdu_loss_w,
            "ups_loss": self.ups_loss_w,
            "chiller": self.chiller_w,
            "crah": self.crah_w,
            "crac": self.crac_w,
            "pumps": self.pumps_w,
            "misc": self.misc_w,
        }


@dataclass(frozen=True)
class PeakContext:
    """Design-point quantities every timestep refers back to."""

    farm_peak_w: float
    total_peak_w: float
    misc_constant_w: float


@dataclass(frozen=True)
class SimulationStep:
    timestamp: str
    utilisation: float
    ambient_c: float
    power: PowerBreakdown


@dataclass(frozen=True)
class EnergySummary:
    """Per-component energy over a run, watt-hours, plus shares of total."""

    energy_wh: dict[str, float]
    shares: dict[str, float]
    total_energy_wh: float


@dataclass(frozen=True)
class SimulationResult:
    steps: tuple[SimulationStep, ...]
    energy_wh: dict[str, float]
    shares: dict[str, float]
    total_energy_wh: float


def _effective_pump_fraction(scenario: ScenarioConfig) -> float:
    # Water pumps exist only alongside a chilled-water loop.
    if scenario.architecture is CoolingArchitecture.CRAH_CHILLER:
        return scenario.pump_fraction
    return 0.0


def peak_context(scenario: ScenarioConfig) -> PeakContext:
    """Design peak at full utilisation and reference outdoor temperature."""
    farm_peak_w = scenario.server.farm_peak_w
    phi = _effective_pump_fraction(scenario)
    denominator = 1.0 - phi - scenario.misc_fraction
    if denominator <= 0.0:
        raise InvalidFractions(
            "pump and misc fractions consume the whole total: "
            f"phi={phi}, mu={scenario.misc_fraction}")
    supply = power_chain.supply_loss(farm_peak_w, scenario.supply)
    if scenario.architecture is CoolingArchitecture.CRAH_CHILLER:
        cooling_peak_w = (cooling.chiller_power(1.0, farm_peak_w,
                                                scenario.chiller)
                          + cooling.crah_power(1.0, farm_peak_w,
                                               scenario.crah))
    elif scenario.architecture is CoolingArchitecture.CRAC:
        cooling_peak_w = cooling.crac_power(1.0, farm_peak_w, scenario.crac,
                                            scenario.crah)
    else:
        cooling_peak_w = cooling.crah_power(1.0, farm_peak_w, scenario.crah)
    component_sum_w = farm_peak_w + supply.total_w + cooling_peak_w
    total_peak_w = component_sum_w / denominator
    return PeakContext(
        farm_peak_w=farm_peak_w,
        total_peak_w=total_peak_w,
        misc_constant_w=scenario.misc_fraction * total_peak_w,
    )


def step_power(utilisation: float, ambient_c: float,
               scenario: ScenarioConfig, ctx: PeakContext) -> PowerBreakdown:
    """Full power breakdown for one steady-state hour."""
    farm_w = server_farm.farm_power(utilisation, scenario.consolidation,
                                    scenario.server)
    supply = power_chain.supply_loss(farm_w, scenario.supply)
    adjustment = cooling.ambient_adjustment(
        ambient_c, scenario.reference_ambient_c, scenario.eer)

    chiller_w = crah_w = crac_w = 0.0
    if scenario.architecture is CoolingArchitecture.CRAH_CHILLER:
        chiller_w = cooling.chiller_power(
            utilisation, ctx.farm_peak_w, scenario.chiller) * adjustment
        crah_w = cooling.crah_power(utilisation, ctx.farm_peak_w,
                                    scenario.crah)
    elif scenario.architecture is CoolingArchitecture.CRAC:
        crac_w = cooling.crac_power(utilisation, ctx.farm_peak_w,
                                    scenario.crac, scenario.crah,
                                    condenser_adjustment=adjustment)
    else:
        crah_w = cooling.crah_power(utilisation, ctx.farm_peak_w,
                                    scenario.crah)

    phi = _effective_pump_fraction(scenario)
    before_pumps_w = (farm_w + supply.pdu_loss_w + supply.ups_loss_w
                      + chiller_w + crah_w + crac_w + ctx.misc_constant_w)
    pumps_w = phi * before_pumps_w / (1.0 - phi)
    return PowerBreakdown(
        server_farm_w=farm_w,
        pdu_loss_w=supply.pdu_loss_w,
        ups_loss_w=supply.ups_loss_w,
        chiller_w=chiller_w,
        crah_w=crah_w,
        crac_w=crac_w,
        pumps_w=pumps_w,
        misc_w=ctx.misc_constant_w,
    )


def _summarize_steps(steps: tuple[SimulationStep, ...]) -> EnergySummary:
    energy_wh = {name: 0.0 for name in COMPONENT_NAMES}
    for step in steps:
        for name, watts in step.power.as_dict().items():
            energy_wh[name] += watts  # 1-hour steps: W -> Wh directly
    total_wh = sum(energy_wh.values())
    if total_wh > 0.0:
        shares = {name: e / total_wh for name, e in energy_wh.items()}
    else:
        shares = {name: 0.0 for name in COMPONENT_NAMES}
    return EnergySummary(energy_wh=energy_wh, shares=shares,
                         total_energy_wh=total_wh)


def simulate(utilisation: UtilisationProfile, ambient: AmbientProfile,
             scenario: ScenarioConfig) -> SimulationResult:
    """Run the full model over aligned hourly profiles."""
    if len(utilisation) == 0 or len(ambient) == 0:
        raise EmptyProfile("profiles must be non-empty")
    if len(utilisation) != len(ambient):
        raise ProfileMismatch(
            f"profile lengths differ: {len(utilisation)} utilisation rows "
            f"vs {len(ambient)} weather rows")
    for i, (a, b) in enumerate(zip(utilisation.timestamps,
                                   ambient.timestamps)):
        if a != b:
            raise ProfileMismatch(
                f"row {i + 1}: timestamps diverge ({a!r} vs {b!r})")
    ctx = peak_context(scenario)
    steps = tuple(
        SimulationStep(
            timestamp=stamp,
            utilisation=u,
            ambient_c=t,
            power=step_power(u, t, scenario, ctx),
        )
        for stamp, u, t in zip(utilisation.timestamps, utilisation.values,
                               ambient.values)
    )
    summary = _summarize_steps(steps)
    return SimulationResult(steps=steps, energy_wh=summary.energy_wh,
                            shares=summary.shares,
                            total_energy_wh=summary.total_energy_wh)


def summarize_energy(result: SimulationResult) -> EnergySummary:
    """Recompute per-component energy and shares from the stored steps."""
    if not result.steps:
        raise EmptyResult("cannot summarize an empty simulation result")
    return _summarize_steps(result.steps)
