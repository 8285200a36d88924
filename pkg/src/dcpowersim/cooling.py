"""Cooling component models.

Three alternative heat-removal stacks are covered:

  * chilled-water plant feeding CRAH air handlers (chiller + CRAH),
  * direct-expansion CRAC units with their own condensers (CRAC only),
  * free-air ventilation (CRAH fans only, no refrigeration).

Key relations, with U the farm utilisation and F the farm design peak:

    chiller     P = sizing * F * (alpha*U^2 + beta*U + gamma)
    fan power   P_heat = n_units * 1.33e-5 * (unit_kw / eta) * airflow(U)
    CRAH        P = idle_frac * F + P_heat
    CRAC        P = idle_frac * F + (1 + COP) * P_heat

Outdoor temperature enters through an energy-efficiency-ratio table:
refrigeration terms are scaled by EER(reference) / EER(ambient), so the
model is exact at the reference temperature and degrades in hotter air.
Fan power is independent of outdoor conditions and is never scaled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, InvertedTemperatures, OutOfRange

# Fan power per unit of (heat capacity / removal efficiency) and airflow,
# in kW per (kW * CMH).  Together with the 14000 CMH standard flow of a
# 7.5 kW unit this reproduces measured air-handler consumption.
FAN_POWER_COEFF = 1.33e-5

# EER of a chiller plant versus outdoor ambient, breakpoints in descending
# ambient order.  Values outside the covered range clamp to the end points.
DEFAULT_EER_BREAKPOINTS = (
    (41.0, 2.66),
    (35.0, 3.12),
    (30.0, 3.52),
    (25.0, 3.93),
    (20.0, 4.34),
    (15.0, 4.74),
    (10.0, 5.13),
    (5.0, 5.49),
    (0.0, 5.82),
)

SPECIFIC_HEAT_AIR_J_PER_KG_C = 1005.0


@dataclass(frozen=True)
class ChillerSpec:
    """Quadratic utilisation fit for a chilled-water plant.

    The default coefficients come from curve fits over plants supplying
    7.22 C chilled water; the supply temperature is informational only.
    """

    alpha: float = 0.32
    beta: float = 0.11
    gamma: float = 0.63
    sizing_factor: float = 0.7
    chilled_water_temp_c: float = 7.22

    def __post_init__(self) -> None:
        if self.alpha < 0.0 or self.beta < 0.0:
            raise InvariantViolation("alpha and beta must be nonnegative")
        if self.gamma <= 0.0:
            raise InvariantViolation("gamma must be positive")
        if self.sizing_factor <= 0.0:
            raise InvariantViolation("sizing_factor must be positive")


@dataclass(frozen=True)
class CrahSpec:
    """Air-handler bank: idle floor plus airflow-proportional fan power."""

    idle_frac: float = 0.08            # of farm peak, typical range 0.07-0.10
    eta_heat: float = 1.0
    unit_capacity_kw: float = 7.5
    unit_airflow_cmh: float = 14000.0

    def __post_init__(self) -> None:
        if self.idle_frac < 0.0:
            raise InvariantViolation("idle_frac must be nonnegative")
        if not 0.0 < self.eta_heat <= 1.0:
            raise InvariantViolation("eta_heat must lie in (0, 1]")
        if self.unit_capacity_kw <= 0.0:
            raise InvariantViolation("unit_capacity_kw must be positive")
        if self.unit_airflow_cmh < 0.0:
            raise InvariantViolation("unit_airflow_cmh must be nonnegative")


@dataclass(frozen=True)
class CracSpec:
    """Direct-expansion unit: idle floor plus condenser stage.

    Field condensers typically run a COP between 3 and 6 and an idle draw
    of 10-30% of farm peak; both are free parameters here.
    """

    idle_frac: float = 0.25
    cop: float = 6.0

    def __post_init__(self) -> None:
        if self.idle_frac < 0.0:
            raise InvariantViolation("idle_frac must be nonnegative")
        if self.cop < 0.0:
            raise InvariantViolation("cop must be nonnegative")


@dataclass(frozen=True)
class EerTable:
    """Piecewise-linear EER versus ambient temperature, descending ambient."""

    breakpoints: tuple[tuple[float, float], ...] = DEFAULT_EER_BREAKPOINTS

    def __post_init__(self) -> None:
        if len(self.breakpoints) == 0:
            raise InvariantViolation("EER table needs at least one breakpoint")
        previous_t = None
        previous_eer = None
        for ambient_c, eer in self.breakpoints:
            if eer <= 0.0:
                raise InvariantViolation("EER values must be positive")
            if previous_t is not None:
                if ambient_c >= previous_t:
                    raise InvariantViolation(
                        "breakpoints must be in strictly descending ambient order")
                if eer < previous_eer:
                    raise InvariantViolation(
                        "EER must be nonincreasing in ambient temperature")
            previous_t, previous_eer = ambient_c, eer


def heat_load(m_dot_kg_s: float, containment: float, t_hot_c: float,
              t_cold_c: float,
              cp_air: float = SPECIFIC_HEAT_AIR_J_PER_KG_C) -> float:
    """Heat carried off by an air stream, watts.  Diagnostic only.

    ``containment`` is the fraction of supplied cold air actually ingested
    by the servers; 1 means no recirculation.
    """
    if m_dot_kg_s < 0.0:
        raise OutOfRange("mass flow must be nonnegative")
    if not 0.0 < containment <= 1.0:
        raise OutOfRange("containment must lie in (0, 1]")
    if t_hot_c < t_cold_c:
        raise InvertedTemperatures(
            f"hot-side {t_hot_c} C below cold-side {t_cold_c} C")
    return containment * m_dot_kg_s * cp_air * (t_hot_c - t_cold_c)


def chiller_power(utilisation: float, farm_peak_w: float,
                  spec: ChillerSpec) -> float:
    """Chilled-water plant draw at one utilisation, watts."""
    if not 0.0 <= utilisation <= 1.0:
        raise OutOfRange("utilisation must lie in [0, 1]")
    if farm_peak_w <= 0.0:
        raise OutOfRange("farm peak must be positive")
    curve = (spec.alpha * utilisation ** 2 + spec.beta * utilisation
             + spec.gamma)
    return spec.sizing_factor * farm_peak_w * curve


def airflow_heat_power(utilisation: float, farm_peak_w: float,
                       spec: CrahSpec) -> float:
    """Fan power moving the heat of the farm at one utilisation, watts.

    Each unit's airflow scales linearly with utilisation; the bank is sized
    so combined unit capacity matches the farm peak (unit count may be
    fractional).
    """
    if not 0.0 <= utilisation <= 1.0:
        raise OutOfRange("utilisation must lie in [0, 1]")
    farm_peak_kw = farm_peak_w / 1000.0
    unit_count = farm_peak_kw / spec.unit_capacity_kw
    airflow_cmh = spec.unit_airflow_cmh * utilisation
    per_unit_kw = (FAN_POWER_COEFF
                   * (spec.unit_capacity_kw / spec.eta_heat) * airflow_cmh)
    return unit_count * per_unit_kw * 1000.0


def crah_power(utilisation: float, farm_peak_w: float,
               spec: CrahSpec) -> float:
    """Air-handler bank draw: idle floor plus fan power, watts."""
    return (spec.idle_frac * farm_peak_w
            + airflow_heat_power(utilisation, farm_peak_w, spec))


def crac_power(utilisation: float, farm_peak_w: float, spec: CracSpec,
               airflow: CrahSpec, condenser_adjustment: float = 1.0) -> float:
    """Direct-expansion unit draw, watts.

    The fan term reuses the air-handler airflow constants; the condenser
    multiplies it by the COP.  ``condenser_adjustment`` scales the whole
    refrigeration term for off-reference outdoor temperature; the idle
    floor is never scaled.
    """
    fan_w = airflow_heat_power(utilisation, farm_peak_w, airflow)
    return (spec.idle_frac * farm_peak_w
            + (1.0 + spec.cop) * fan_w * condenser_adjustment)


def eer_lookup(ambient_c: float, table: EerTable) -> float:
    """EER at one outdoor temperature, interpolated between breakpoints."""
    ascending = tuple(reversed(table.breakpoints))
    if ambient_c <= ascending[0][0]:
        return ascending[0][1]
    if ambient_c >= ascending[-1][0]:
        return ascending[-1][1]
    for (t_lo, eer_lo), (t_hi, eer_hi) in zip(ascending, ascending[1:]):
        if t_lo <= ambient_c <= t_hi:
            span = t_hi - t_lo
            return eer_lo + (eer_hi - eer_lo) * (ambient_c - t_lo) / span
    raise AssertionError("unreachable: table covers the clamped range")


def ambient_adjustment(ambient_c: float, reference_c: float,
                       table: EerTable) -> float:
    """Refrigeration multiplier for off-reference outdoor temperature.

    Exactly 1 at the reference, above 1 in hotter air, below 1 in colder
    air.  Multiplies chiller power and the CRAC condenser term.
    """
    return eer_lookup(reference_c, table) / eer_lookup(ambient_c, table)
