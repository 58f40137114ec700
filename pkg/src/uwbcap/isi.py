"""Pulse-train simulation of intersymbol interference through a tapped delay line.

Binary symbols are unit-energy rectangular pulses sent every
``pulse_duration + guard_time`` seconds through a tapped delay line on a
uniform grid of ``time_resolution`` seconds. Tap delays are snapped to the
nearest grid point (powers of taps that collide are summed). Taps are
treated as uncorrelated scatterers.

Two ISI measures are reported:

``residual_isi_fraction``
    Energy that earlier symbols deposit in a symbol's window, attributed
    per source symbol and per tap (the power-domain response
    ``|pulse|^2 * power``), over the energy one symbol delivers. Taken on
    windows whose full channel history lies inside the burst. It does not
    depend on the seed and agrees with :func:`residual_isi_fraction`.
``coherent_isi_fraction``
    One Monte Carlo realisation: random binary symbols and random tap
    signs drawn from ``rng_seed``, superposed as amplitudes. Energy of the
    interfering waveform in each window over the received energy of one
    symbol, averaged like the attributed measure. Its expectation over
    seeds is the attributed value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.signal import fftconvolve

from .channel import PowerDelayProfile
from .errors import DomainError, GridTooLargeError

DEFAULT_MAX_SAMPLES = 20_000_000
MIN_SAMPLES_PER_PULSE = 4


def residual_isi_fraction(pdp: PowerDelayProfile, guard_time: float) -> float:
    """Share of profile power arriving strictly later than ``guard_time``."""
    if not guard_time >= 0:
        raise DomainError(f"guard_time must be >= 0, got {guard_time!r}")
    late = pdp.powers[pdp.delays > guard_time].sum()
    return float(late / pdp.powers.sum())


@dataclass(frozen=True)
class SimConfig:
    pulse_duration: float
    guard_time: float
    pdp: PowerDelayProfile
    num_symbols: int = 200
    rng_seed: int = 0
    time_resolution: Optional[float] = None
    max_samples: int = DEFAULT_MAX_SAMPLES

    def __post_init__(self):
        if not (self.pulse_duration > 0 and math.isfinite(self.pulse_duration)):
            raise DomainError("pulse_duration must be > 0")
        if not (self.guard_time >= 0 and math.isfinite(self.guard_time)):
            raise DomainError("guard_time must be >= 0")
        if int(self.num_symbols) != self.num_symbols or self.num_symbols < 2:
            raise DomainError("num_symbols must be an integer >= 2")
        if int(self.rng_seed) != self.rng_seed or self.rng_seed < 0:
            raise DomainError("rng_seed must be an unsigned integer")
        if self.time_resolution is None:
            object.__setattr__(self, "time_resolution", self.pulse_duration / MIN_SAMPLES_PER_PULSE)
        res = self.time_resolution
        if not res > 0:
            raise DomainError("time_resolution must be > 0")
        if res > self.pulse_duration / MIN_SAMPLES_PER_PULSE * (1 + 1e-9):
            raise DomainError(
                f"time_resolution must resolve the pulse with >= {MIN_SAMPLES_PER_PULSE} samples"
            )

    @property
    def symbol_period(self) -> float:
        return self.pulse_duration + self.guard_time


@dataclass(frozen=True)
class ISIReport:
    residual_isi_fraction: float
    per_symbol_worst: float
    coherent_isi_fraction: float
    symbol_period: float
    effective_rate: float
    received_energy: float
    num_symbols: int
    pulse_duration: float
    guard_time: float


def _grid(config: SimConfig):
    res = config.time_resolution
    pulse_len = max(1, round(config.pulse_duration / res))
    period_len = max(pulse_len, round(config.symbol_period / res))
    tap_idx = np.rint(config.pdp.delays / res).astype(np.int64)
    h_power = np.bincount(tap_idx, weights=config.pdp.powers)
    return pulse_len, period_len, h_power


def simulate(config: SimConfig) -> ISIReport:
    pulse_len, period_len, h_power = _grid(config)
    n = int(config.num_symbols)
    total_len = n * period_len + h_power.size + pulse_len
    if total_len > config.max_samples:
        raise GridTooLargeError(
            f"simulation grid of {total_len} samples exceeds cap {config.max_samples}; "
            "use a coarser time_resolution or fewer symbols"
        )

    # Per-source energy of one symbol after the channel; the pulse carries 1/L per sample.
    own_energy = np.convolve(np.full(pulse_len, 1.0 / pulse_len), h_power)
    padded = np.zeros(-(-own_energy.size // period_len) * period_len)
    padded[: own_energy.size] = own_energy
    lag_energy = padded.reshape(-1, period_len).sum(axis=1)
    e_symbol = lag_energy.sum()
    history = lag_energy.size - 1

    # Window k collects lags 1..k from its predecessors.
    lag_cum = np.concatenate(([0.0], np.cumsum(lag_energy[1:])))
    window_isi = lag_cum[np.minimum(np.arange(n), history)]
    steady = slice(history, n) if history < n else slice(1, n)
    attributed = window_isi / e_symbol
    # every window with full history receives the same attributed energy
    residual = float(attributed[history]) if history < n else float(attributed[steady].mean())
    worst = float(attributed[1:].max())

    rng = np.random.default_rng(int(config.rng_seed))
    bits = rng.integers(0, 2, size=n) * 2.0 - 1.0
    tap_signs = rng.integers(0, 2, size=h_power.size) * 2.0 - 1.0
    amp = 1.0 / math.sqrt(pulse_len)
    tx = np.zeros(n * period_len)
    starts = np.arange(n) * period_len
    for offset in range(pulse_len):
        tx[starts + offset] = bits * amp
    h_amp = np.sqrt(h_power) * tap_signs
    rx = fftconvolve(tx, h_amp)[: n * period_len]
    response = np.convolve(np.full(pulse_len, amp), h_amp)
    own = np.zeros(period_len)
    own[: min(period_len, response.size)] = response[:period_len]
    interference = rx.reshape(n, period_len) - np.outer(bits, own)
    coherent = (interference**2).sum(axis=1) / float((response**2).sum())
    coherent_fraction = float(coherent[steady].mean())

    return ISIReport(
        residual_isi_fraction=residual,
        per_symbol_worst=worst,
        coherent_isi_fraction=coherent_fraction,
        symbol_period=config.symbol_period,
        effective_rate=1.0 / config.symbol_period,
        received_energy=float(n * e_symbol),
        num_symbols=n,
        pulse_duration=config.pulse_duration,
        guard_time=config.guard_time,
    )


@dataclass(frozen=True)
class GuardRow:
    guard_time: float
    effective_rate: float
    residual_isi_fraction: float
    report: Optional[ISIReport] = None
    error: Optional[str] = None


def guard_sweep(
    pdp: PowerDelayProfile,
    pulse_duration: float,
    guards: Sequence[float],
    num_symbols: int = 200,
    rng_seed: int = 0,
    time_resolution: Optional[float] = None,
    max_samples: int = DEFAULT_MAX_SAMPLES,
) -> list[GuardRow]:
    """Run :func:`simulate` once per guard time; bad rows are flagged, not raised."""
    rows = []
    for g in guards:
        try:
            rep = simulate(
                SimConfig(pulse_duration, g, pdp, num_symbols, rng_seed, time_resolution, max_samples)
            )
        except DomainError as exc:
            rows.append(GuardRow(g, math.nan, math.nan, None, str(exc)))
            continue
        rows.append(GuardRow(g, rep.effective_rate, rep.residual_isi_fraction, rep))
    return rows
