"""Server-farm power model.

A homogeneous cluster of ``count`` servers is driven by one aggregate
utilisation figure.  Task consolidation is a single knob: at 0 the workload
is packed onto the minimum number of running servers, at 1 it is spread
uniformly across the whole farm.

Key relations:

    per-server draw      p(u)   = p_idle + (p_peak - p_idle) * u
    running fraction     r(U,L) = L * (1 - U) + U
    per-server load      u_i    = U / r(U,L)
    farm power           P      = count * r(U,L) * p(u_i)

Servers beyond the running fraction are powered off and draw nothing.
The running count is continuous, which keeps the farm power smooth for
root finding on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyList, InvariantViolation, OutOfRange


@dataclass(frozen=True)
class ServerSpec:
    """Homogeneous server population and its idle/peak draw in watts."""

    count: int
    p_idle_w: float
    p_peak_w: float

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InvariantViolation("server count must be >= 1")
        if not 0.0 <= self.p_idle_w <= self.p_peak_w:
            raise InvariantViolation(
                "server power must satisfy 0 <= p_idle_w <= p_peak_w"
            )

    @property
    def farm_peak_w(self) -> float:
        """Design peak of the whole farm (all servers at full load)."""
        return self.count * self.p_peak_w


@dataclass(frozen=True)
class FarmState:
    """Operating point of the farm for one aggregate utilisation figure."""

    aggregate_utilisation: float
    consolidation: float
    per_server_utilisation: float
    running_count: float


def _check_fraction(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise OutOfRange(f"{name} must lie in [0, 1], got {value!r}")


def aggregate_utilisation(per_server: Sequence[float]) -> float:
    """Arithmetic mean of per-server utilisations."""
    if len(per_server) == 0:
        raise EmptyList("cannot aggregate an empty utilisation list")
    for i, u in enumerate(per_server):
        if not 0.0 <= u <= 1.0:
            raise OutOfRange(f"utilisation #{i} must lie in [0, 1], got {u!r}")
    return sum(per_server) / len(per_server)


def effective_server_utilisation(total_utilisation: float,
                                 consolidation: float) -> float:
    """Per-running-server utilisation for a given consolidation level.

    The expression is 0/0 when both arguments are zero; the continuous
    limit along full consolidation is used, so an empty, fully packed
    farm reports zero per-server load.
    """
    _check_fraction(total_utilisation, "utilisation")
    _check_fraction(consolidation, "consolidation")
    if total_utilisation == 0.0:
        return 0.0
    running_fraction = consolidation * (1.0 - total_utilisation) + total_utilisation
    return total_utilisation / running_fraction


def server_power(utilisation: float, spec: ServerSpec) -> float:
    """Single-server draw in watts, linear between idle and peak."""
    _check_fraction(utilisation, "utilisation")
    return spec.p_idle_w + (spec.p_peak_w - spec.p_idle_w) * utilisation


def farm_state(total_utilisation: float, consolidation: float,
               spec: ServerSpec) -> FarmState:
    """Running count and per-server load implied by the aggregate figures.

    Conservation holds exactly: running_count * per_server_utilisation
    equals count * total_utilisation.
    """
    _check_fraction(total_utilisation, "utilisation")
    _check_fraction(consolidation, "consolidation")
    if total_utilisation == 0.0 and consolidation == 0.0:
        return FarmState(0.0, 0.0, 0.0, 0.0)
    running_fraction = consolidation * (1.0 - total_utilisation) + total_utilisation
    return FarmState(
        aggregate_utilisation=total_utilisation,
        consolidation=consolidation,
        per_server_utilisation=effective_server_utilisation(
            total_utilisation, consolidation),
        running_count=spec.count * running_fraction,
    )


def farm_power(total_utilisation: float, consolidation: float,
               spec: ServerSpec) -> float:
    """Total farm draw in watts; powered-off servers contribute nothing."""
    state = farm_state(total_utilisation, consolidation, spec)
    if state.running_count == 0.0:
        return 0.0
    return state.running_count * server_power(state.per_server_utilisation, spec)
