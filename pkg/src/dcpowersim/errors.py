"""Exception hierarchy for the simulator.

Every error raised by this package derives from :class:`SimulationError`,
which itself derives from ``ValueError`` so casual callers can catch one
thing.  The CLI maps usage problems to exit code 1 and any
``SimulationError`` to exit code 2.
"""


class SimulationError(ValueError):
    """Base class for all model, profile and configuration errors."""


# --- profile / CSV parsing ---

class MalformedRow(SimulationError):
    """A CSV or config row could not be parsed (bad number, bad timestamp)."""


class OutOfRange(SimulationError):
    """A numeric value lies outside its documented domain."""


class NonMonotonicTime(SimulationError):
    """Profile timestamps are not strictly increasing."""


class GapInSeries(SimulationError):
    """Profile timestamps are not spaced exactly one hour apart."""


class EmptyProfile(SimulationError):
    """A profile contains no data rows."""


class EmptyList(SimulationError):
    """An aggregate was requested over an empty collection."""


class EmptyResult(SimulationError):
    """A summary or serialization was requested for an empty result."""


# --- configuration ---

class UnknownKey(SimulationError):
    """The scenario config contains a key outside the documented schema."""


class MissingRequired(SimulationError):
    """A required scenario config key is absent."""


class InvariantViolation(SimulationError):
    """A domain type's invariant would be violated."""


# --- component models ---

class NegativeInput(SimulationError):
    """A power quantity that must be nonnegative was negative."""


class InfeasibleTarget(SimulationError):
    """Supply-loss calibration target is below the idle losses alone."""


class InvertedTemperatures(SimulationError):
    """Hot-side temperature below cold-side temperature."""


# --- engine ---

class ProfileMismatch(SimulationError):
    """Utilisation and weather profiles differ in length or timestamps."""


class InvalidFractions(InvariantViolation):
    """Pump and miscellaneous fractions leave no room for the components."""
