"""PDU and UPS loss models for the power supply chain.

Each PDU loses an idle floor plus a term quadratic in the load it carries;
the UPS loses an idle floor plus a term proportional to its throughput
(the IT load together with the downstream PDU losses it must feed):

    pdu_loss = pdu_idle_total + pdu_count * lambda_pdu * (load / pdu_count)^2
    ups_loss = ups_idle + lambda_ups * (load + pdu_loss)

Load is assumed perfectly balanced across the PDUs.  The loss coefficients
are rarely published, so :func:`calibrate_supply` back-solves them from a
single design statement: total supply loss at farm peak equals a given
fraction of that peak (15% is typical), with the non-idle part split 3:4
between the PDU quadratic and the UPS proportional term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleTarget, InvariantViolation, NegativeInput

# Split of the proportional (non-idle) peak loss between PDU and UPS.
_PDU_PROPORTIONAL_SHARE = 3.0 / 7.0
_UPS_PROPORTIONAL_SHARE = 4.0 / 7.0


@dataclass(frozen=True)
class SupplyChainSpec:
    """Concrete loss coefficients for a PDU bank plus UPS."""

    pdu_count: int
    pdu_idle_total_w: float     # idle draw of all PDUs combined
    ups_idle_w: float
    lambda_pdu_per_w: float     # quadratic loss coefficient, 1/W
    lambda_ups: float           # proportional loss coefficient, dimensionless

    def __post_init__(self) -> None:
        if self.pdu_count < 1:
            raise InvariantViolation("pdu_count must be >= 1")
        for name in ("pdu_idle_total_w", "ups_idle_w",
                     "lambda_pdu_per_w", "lambda_ups"):
            if getattr(self, name) < 0.0:
                raise InvariantViolation(f"{name} must be nonnegative")


@dataclass(frozen=True)
class SupplyLoss:
    pdu_loss_w: float
    ups_loss_w: float

    @property
    def total_w(self) -> float:
        return self.pdu_loss_w + self.ups_loss_w


def pdu_loss(farm_power_w: float, spec: SupplyChainSpec) -> float:
    """Combined loss of all PDUs carrying ``farm_power_w``, watts."""
    if farm_power_w < 0.0:
        raise NegativeInput("farm power must be nonnegative")
    per_pdu_load = farm_power_w / spec.pdu_count
    return (spec.pdu_idle_total_w
            + spec.pdu_count * spec.lambda_pdu_per_w * per_pdu_load ** 2)


def ups_loss(farm_power_w: float, pdu_loss_w: float,
             spec: SupplyChainSpec) -> float:
    """UPS loss in watts; throughput is the IT load plus PDU losses."""
    if farm_power_w < 0.0 or pdu_loss_w < 0.0:
        raise NegativeInput("power inputs must be nonnegative")
    return spec.ups_idle_w + spec.lambda_ups * (farm_power_w + pdu_loss_w)


def supply_loss(farm_power_w: float, spec: SupplyChainSpec) -> SupplyLoss:
    """PDU and UPS losses for one farm power level."""
    p = pdu_loss(farm_power_w, spec)
    return SupplyLoss(pdu_loss_w=p, ups_loss_w=ups_loss(farm_power_w, p, spec))


def calibrate_supply(farm_peak_w: float,
                     pdu_count: int = 100,
                     pdu_idle_frac: float = 0.015,
                     ups_idle_frac: float = 0.03,
                     peak_loss_frac: float = 0.15) -> SupplyChainSpec:
    """Solve for loss coefficients hitting ``peak_loss_frac`` at farm peak.

    Idle draws are fixed fractions of the farm peak; the remaining loss
    budget at peak is split 3:4 between the PDU quadratic term and the
    UPS proportional term, then each coefficient is solved in closed form.
    The result reproduces the target exactly:
    ``supply_loss(farm_peak_w).total_w == peak_loss_frac * farm_peak_w``.
    """
    if farm_peak_w <= 0.0:
        raise NegativeInput("farm peak must be positive")
    if not 0.0 < peak_loss_frac < 1.0:
        raise InvariantViolation("peak_loss_frac must lie in (0, 1)")
    pdu_idle_w = pdu_idle_frac * farm_peak_w
    ups_idle_w = ups_idle_frac * farm_peak_w
    proportional_budget_w = (peak_loss_frac - pdu_idle_frac
                             - ups_idle_frac) * farm_peak_w
    if proportional_budget_w < 0.0:
        raise InfeasibleTarget(
            "idle fractions alone exceed the peak loss target "
            f"({pdu_idle_frac + ups_idle_frac} > {peak_loss_frac})"
        )
    pdu_quad_peak_w = proportional_budget_w * _PDU_PROPORTIONAL_SHARE
    ups_lin_peak_w = proportional_budget_w * _UPS_PROPORTIONAL_SHARE
    lambda_pdu = pdu_quad_peak_w * pdu_count / farm_peak_w ** 2
    pdu_loss_peak_w = pdu_idle_w + pdu_quad_peak_w
    lambda_ups = ups_lin_peak_w / (farm_peak_w + pdu_loss_peak_w)
    return SupplyChainSpec(
        pdu_count=pdu_count,
        pdu_idle_total_w=pdu_idle_w,
        ups_idle_w=ups_idle_w,
        lambda_pdu_per_w=lambda_pdu,
        lambda_ups=lambda_ups,
    )
