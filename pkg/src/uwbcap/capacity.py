"""Closed-form IR-UWB capacity for mostly-digital and analog transceivers.

Both architectures share the same structure: one binary symbol occupies a
pulse-scale interval set by the hardware plus a guard equal to the channel
RMS delay spread, so the binary rate is the inverse of that sum.

* mostly digital: ``C = 1 / (n_sampling / F_s + d_rms)``
* analog:         ``C = 1 / (1 / F_circuit + d_rms)``

All quantities are SI: Hz, seconds, bits/s.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, InfeasibleTargetError

DEFAULT_SAMPLING_FACTOR = 4.0


def _check_delay(d_rms: float) -> float:
    d_rms = float(d_rms)
    if not d_rms >= 0.0 or math.isinf(d_rms):
        raise DomainError(f"RMS delay spread must be finite and >= 0, got {d_rms!r}")
    return d_rms


@dataclass(frozen=True)
class DigitalFrontEnd:
    """Data-converter side of a mostly-digital radio.

    ``sampling_factor`` is the ratio of the converter rate to the highest
    analog frequency (the inverse pulse duration); 4 is the customary
    choice balancing correlation/synchronisation quality against power.
    ``resolution_bits`` is carried as metadata only.
    """

    sampling_frequency: float
    sampling_factor: float = DEFAULT_SAMPLING_FACTOR
    resolution_bits: Optional[int] = None

    def __post_init__(self):
        fs = self.sampling_frequency
        if not (fs > 0 and math.isfinite(fs)):
            raise DomainError(f"sampling_frequency must be finite and > 0, got {fs!r}")
        n = self.sampling_factor
        if not (n >= 1 and math.isfinite(n)):
            raise DomainError(f"sampling_factor must be >= 1, got {n!r}")
        if self.resolution_bits is not None and self.resolution_bits < 1:
            raise DomainError("resolution_bits must be a positive integer")

    @property
    def symbol_time(self) -> float:
        return self.sampling_factor / self.sampling_frequency


@dataclass(frozen=True)
class AnalogFrontEnd:
    """Slowest analog circuit of the transceiver (pulse generator, receiver...)."""

    min_operating_frequency: float

    def __post_init__(self):
        f = self.min_operating_frequency
        if not (f > 0 and math.isfinite(f)):
            raise DomainError(f"min_operating_frequency must be finite and > 0, got {f!r}")

    @property
    def symbol_time(self) -> float:
        return 1.0 / self.min_operating_frequency


class Scaling(enum.Enum):
    # M-ary rate = binary rate * (M - 1); reproduces the published ternary/quaternary columns
    ORDER_MINUS_ONE = "order-minus-one"
    # M-ary rate = binary rate * log2(M); conventional bits per symbol
    LOG2 = "log2"


@dataclass(frozen=True)
class ModulationScheme:
    order: int = 2
    scaling: Scaling = Scaling.ORDER_MINUS_ONE

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 2:
            raise DomainError(f"modulation order must be an integer >= 2, got {self.order!r}")
        object.__setattr__(self, "scaling", Scaling(self.scaling))

    @property
    def factor(self) -> float:
        if self.scaling is Scaling.LOG2:
            return math.log2(self.order)
        return float(self.order - 1)


BINARY = ModulationScheme(2)


@dataclass(frozen=True)
class CapacityResult:
    """Binary capacity with its delay-spread ceiling.

    For an ideal channel (``d_rms == 0``) the ceiling is ``inf`` and
    ``fraction_of_max`` is ``nan``.
    """

    capacity: float
    asymptote: float
    fraction_of_max: float


def _result(symbol_time: float, d_rms: float) -> CapacityResult:
    cap = 1.0 / (symbol_time + d_rms)
    if d_rms == 0.0:
        return CapacityResult(cap, math.inf, math.nan)
    return CapacityResult(cap, 1.0 / d_rms, d_rms / (symbol_time + d_rms))


def capacity_mostly_digital(fe: DigitalFrontEnd, d_rms: float) -> CapacityResult:
    return _result(fe.symbol_time, _check_delay(d_rms))


def capacity_analog(fe: AnalogFrontEnd, d_rms: float) -> CapacityResult:
    return _result(fe.symbol_time, _check_delay(d_rms))


def capacity_mary(binary_capacity: float, scheme: ModulationScheme) -> float:
    """Scale a binary-modulation capacity to an M-ary scheme."""
    if not binary_capacity > 0:
        raise DomainError(f"binary capacity must be > 0, got {binary_capacity!r}")
    return binary_capacity * scheme.factor


def capacity_asymptote(d_rms: float) -> float:
    d_rms = _check_delay(d_rms)
    if d_rms == 0.0:
        raise DomainError("asymptote undefined for an ideal (zero delay spread) channel")
    return 1.0 / d_rms


def percent_of_max(fe: DigitalFrontEnd, d_rms: float) -> float:
    d_rms = _check_delay(d_rms)
    if d_rms == 0.0:
        raise DomainError("percent of maximum undefined for zero delay spread")
    return 100.0 * d_rms / (fe.symbol_time + d_rms)


@dataclass(frozen=True)
class Digital:
    """Mostly-digital implementation with a given sampling factor."""

    sampling_factor: float = DEFAULT_SAMPLING_FACTOR

    name = "digital"

    def front_end(self, frequency: float) -> DigitalFrontEnd:
        return DigitalFrontEnd(frequency, self.sampling_factor)

    def capacity(self, frequency: float, d_rms: float) -> CapacityResult:
        return capacity_mostly_digital(self.front_end(frequency), d_rms)


@dataclass(frozen=True)
class Analog:
    """Analog implementation limited by its slowest circuit."""

    name = "analog"

    @property
    def sampling_factor(self) -> float:
        return 1.0

    def front_end(self, frequency: float) -> AnalogFrontEnd:
        return AnalogFrontEnd(frequency)

    def capacity(self, frequency: float, d_rms: float) -> CapacityResult:
        return capacity_analog(self.front_end(frequency), d_rms)


Mode = Union[Digital, Analog]


def required_frequency(target: float, d_rms: float, mode: Mode) -> float:
    """Smallest converter / circuit frequency reaching ``target`` bits/s."""
    d_rms = _check_delay(d_rms)
    if not target > 0:
        raise DomainError(f"target rate must be > 0, got {target!r}")
    slack = 1.0 / target - d_rms
    if slack <= 0:
        raise InfeasibleTargetError(
            f"target {target:.6g} bit/s is not below the 1/d_rms asymptote "
            f"{1.0 / d_rms:.6g} bit/s"
        )
    return mode.sampling_factor / slack


def frequency_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Inclusive arithmetic grid ``start, start+step, ..., <= stop``."""
    if not (step > 0 and math.isfinite(step)):
        raise DomainError("frequency step must be > 0")
    if stop < start:
        raise DomainError("empty frequency range: stop < start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


@dataclass(frozen=True)
class SweepRow:
    d_rms: float
    frequency: float
    capacity: float
    asymptote: float
    percent: float
    error: Optional[str] = None

    @property
    def flagged(self) -> bool:
        return self.error is not None


def sweep_capacity(
    d_rms_values: Iterable[float],
    frequencies: Sequence[float],
    mode: Mode,
) -> list[SweepRow]:
    """Evaluate ``mode`` on the d_rms x frequency grid, d_rms-major.

    Cells violating a precondition come back flagged (``error`` set, NaN
    values) instead of aborting the sweep.
    """
    d_rms_values = list(d_rms_values)
    frequencies = [float(f) for f in frequencies]
    if not d_rms_values or not frequencies:
        raise DomainError("sweep needs at least one delay spread and one frequency")
    rows = []
    for d in d_rms_values:
        for f in frequencies:
            try:
                res = mode.capacity(f, d)
            except DomainError as exc:
                rows.append(SweepRow(d, f, math.nan, math.nan, math.nan, str(exc)))
                continue
            rows.append(SweepRow(d, f, res.capacity, res.asymptote, 100.0 * res.fraction_of_max))
    return rows
