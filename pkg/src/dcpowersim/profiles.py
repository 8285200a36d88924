"""Hourly profile CSV parsing and result serialization.

Input profiles are strict hourly series: ISO timestamps of the form
``YYYY-MM-DDTHH:MM``, strictly increasing, spaced exactly one hour apart.
Any bad row aborts the parse with a diagnostic naming the data row number;
a profile is never returned partially valid.

Timestamps carry no timezone and are treated as opaque labels once
validated; the utilisation and weather profiles driving one simulation
must agree on them verbatim.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from .errors import (EmptyProfile, EmptyResult, GapInSeries, MalformedRow,
                     NonMonotonicTime, OutOfRange)

if TYPE_CHECKING:  # pragma: no cover - typing only
    from .engine import SimulationResult

_TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M"
_ONE_HOUR = dt.timedelta(hours=1)

UTILISATION_HEADER = ("timestamp", "utilisation")
TEMPERATURE_HEADER = ("timestamp", "temperature_c")

RESULT_COLUMNS = (
    "timestamp", "utilisation", "ambient_c", "server_farm_w", "pdu_loss_w",
    "ups_loss_w", "chiller_w", "crah_w", "crac_w", "pumps_w", "misc_w",
    "total_w",
)

TEMPERATURE_BOUNDS_C = (-60.0, 60.0)


@dataclass(frozen=True)
class UtilisationProfile:
    """Hourly aggregate utilisation series, values in [0, 1]."""

    timestamps: tuple[str, ...]
    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.timestamps)


@dataclass(frozen=True)
class AmbientProfile:
    """Hourly outdoor temperature series, degrees Celsius."""

    timestamps: tuple[str, ...]
    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.timestamps)


def _parse_timestamp(raw: str, row_no: int) -> dt.datetime:
    try:
        return dt.datetime.strptime(raw, _TIMESTAMP_FORMAT)
    except ValueError:
        raise MalformedRow(
            f"row {row_no}: bad timestamp {raw!r}, expected YYYY-MM-DDTHH:MM"
        ) from None


def _parse_series(text: str, header: tuple[str, str],
                  check_value: Callable[[float, int], None],
                  ) -> tuple[tuple[str, ...], tuple[float, ...]]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or tuple(cell.strip() for cell in rows[0]) != header:
        raise MalformedRow(
            f"expected header {','.join(header)!r}, got "
            f"{','.join(rows[0]) if rows else ''!r}"
        )
    timestamps: list[str] = []
    values: list[float] = []
    previous: dt.datetime | None = None
    for row_no, row in enumerate(rows[1:], start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise MalformedRow(f"row {row_no}: expected 2 fields, got {len(row)}")
        stamp_text = row[0].strip()
        parsed = _parse_timestamp(stamp_text, row_no)
        try:
            value = float(row[1])
        except ValueError:
            raise MalformedRow(
                f"row {row_no}: bad number {row[1]!r}") from None
        check_value(value, row_no)
        if previous is not None:
            delta = parsed - previous
            if delta <= dt.timedelta(0):
                raise NonMonotonicTime(
                    f"row {row_no}: timestamp {stamp_text!r} does not advance")
            if delta != _ONE_HOUR:
                raise GapInSeries(
                    f"row {row_no}: spacing {delta} is not exactly one hour")
        previous = parsed
        timestamps.append(stamp_text)
        values.append(value)
    if not timestamps:
        raise EmptyProfile("profile has a header but no data rows")
    return tuple(timestamps), tuple(values)


def parse_utilisation_csv(text: str) -> UtilisationProfile:
    """Parse a ``timestamp,utilisation`` CSV into a validated profile."""
    def check(value: float, row_no: int) -> None:
        if not 0.0 <= value <= 1.0:
            raise OutOfRange(
                f"row {row_no}: utilisation {value} outside [0, 1]")

    timestamps, values = _parse_series(text, UTILISATION_HEADER, check)
    return UtilisationProfile(timestamps=timestamps, values=values)


def parse_temperature_csv(text: str) -> AmbientProfile:
    """Parse a ``timestamp,temperature_c`` CSV into a validated profile."""
    low, high = TEMPERATURE_BOUNDS_C

    def check(value: float, row_no: int) -> None:
        if not low <= value <= high:
            raise OutOfRange(
                f"row {row_no}: temperature {value} outside [{low}, {high}] C")

    timestamps, values = _parse_series(text, TEMPERATURE_HEADER, check)
    return AmbientProfile(timestamps=timestamps, values=values)


def _format_number(value: float) -> str:
    # 10 significant digits; parse(write(x)) agrees with x well past the
    # 6-significant-digit contract.
    return format(value, ".10g")


def write_results_csv(result: "SimulationResult") -> str:
    """Serialize a simulation result to CSV, one row per timestep."""
    if not result.steps:
        raise EmptyResult("cannot serialize an empty simulation result")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RESULT_COLUMNS)
    for step in result.steps:
        power = step.power
        writer.writerow([
            step.timestamp,
            _format_number(step.utilisation),
            _format_number(step.ambient_c),
            _format_number(power.server_farm_w),
            _format_number(power.pdu_loss_w),
            _format_number(power.ups_loss_w),
            _format_number(power.chiller_w),
            _format_number(power.crah_w),
            _format_number(power.crac_w),
            _format_number(power.pumps_w),
            _format_number(power.misc_w),
            _format_number(power.total_w),
        ])
    return out.getvalue()
