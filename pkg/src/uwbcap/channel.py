"""Channel delay-spread data and power-delay profiles."""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError, UnknownEnvironmentError

NS = 1e-9


class Band(enum.Enum):
    UWB_3_10GHZ = "3-10GHz"
    UWB_60GHZ = "60GHz"


@dataclass(frozen=True)
class ChannelProfile:
    name: str
    band: Band
    tx_hpbw_deg: float
    rx_hpbw_deg: float
    rms_delay_spread: float
    source: str = ""

    def __post_init__(self):
        if not self.rms_delay_spread > 0:
            raise DomainError("rms_delay_spread must be > 0")
        for bw in (self.tx_hpbw_deg, self.rx_hpbw_deg):
            if not 0 < bw <= 360:
                raise DomainError(f"beamwidth must lie in (0, 360] degrees, got {bw!r}")


def _p(name, band, tx, rx, d_ns, source):
    return ChannelProfile(name, band, tx, rx, d_ns * NS, source)


# IEEE 802.15.4a (3-10 GHz) and 802.15.3c (60 GHz) delay spreads, stored verbatim.
_BUILTIN = (
    _p("Residential LOS", Band.UWB_3_10GHZ, 360, 360, 17, "table1"),
    _p("Industrial LOS", Band.UWB_3_10GHZ, 360, 360, 9, "table1"),
    _p("Industrial NLOS", Band.UWB_3_10GHZ, 360, 360, 89, "table1"),
    _p("Residential LOS 3-10GHz", Band.UWB_3_10GHZ, 360, 360, 17, "table3"),
    _p("60GHz 360°/360°", Band.UWB_60GHZ, 360, 360, 7.718, "table3"),
    _p("60GHz 360°/60°", Band.UWB_60GHZ, 360, 60, 6.2, "table3"),
    _p("60GHz 360°/15°", Band.UWB_60GHZ, 360, 15, 3.455, "table3"),
    _p("60GHz 60°/60°", Band.UWB_60GHZ, 60, 60, 2.147, "table3"),
    _p("60GHz 60°/15°", Band.UWB_60GHZ, 60, 15, 0.948, "table3"),
    _p("60GHz 15°/15°", Band.UWB_60GHZ, 15, 15, 0.87, "table3"),
)


def builtin_environments() -> list[ChannelProfile]:
    return list(_BUILTIN)


def _key(name: str) -> str:
    return re.sub(r"[\s°_\-]+", "", name).lower().replace("deg", "")


def get_environment(name: str) -> ChannelProfile:
    """Look up a built-in environment; case, spaces and degree signs are ignored."""
    wanted = _key(name)
    for env in _BUILTIN:
        if _key(env.name) == wanted:
            return env
    raise UnknownEnvironmentError(name, [e.name for e in _BUILTIN])


@dataclass(frozen=True, eq=False)
class PowerDelayProfile:
    """Discrete taps (delay in s, linear power); arrays are read-only."""

    delays: np.ndarray
    powers: np.ndarray

    def __post_init__(self):
        delays = np.array(self.delays, dtype=float).ravel()
        powers = np.array(self.powers, dtype=float).ravel()
        if delays.size == 0:
            raise DomainError("power-delay profile needs at least one tap")
        if delays.shape != powers.shape:
            raise DomainError("delays and powers must have the same length")
        if not (np.all(np.isfinite(delays)) and np.all(np.isfinite(powers))):
            raise DomainError("tap delays and powers must be finite")
        if np.any(delays < 0):
            raise DomainError("tap delays must be >= 0")
        if np.any(np.diff(delays) <= 0):
            raise DomainError("tap delays must be strictly increasing")
        if np.any(powers < 0):
            raise DomainError("tap powers must be >= 0")
        if not powers.sum() > 0:
            raise DomainError("power-delay profile has zero total power")
        delays.flags.writeable = False
        powers.flags.writeable = False
        object.__setattr__(self, "delays", delays)
        object.__setattr__(self, "powers", powers)

    @classmethod
    def from_taps(cls, taps: Iterable[tuple[float, float]]) -> "PowerDelayProfile":
        taps = list(taps)
        if not taps:
            raise DomainError("power-delay profile needs at least one tap")
        delays, powers = zip(*taps)
        return cls(np.asarray(delays), np.asarray(powers))

    @property
    def total_power(self) -> float:
        return float(self.powers.sum())

    def __len__(self):
        return self.delays.size

    def __eq__(self, other):
        if not isinstance(other, PowerDelayProfile):
            return NotImplemented
        return np.array_equal(self.delays, other.delays) and np.array_equal(self.powers, other.powers)

    __hash__ = None


def mean_excess_delay(pdp: PowerDelayProfile) -> float:
    w = pdp.powers / pdp.powers.sum()
    return float(np.dot(w, pdp.delays))


def rms_delay_spread(pdp: PowerDelayProfile) -> float:
    """Square root of the second central moment of the normalised profile."""
    w = pdp.powers / pdp.powers.sum()
    mean = np.dot(w, pdp.delays)
    # centred form avoids the cancellation of E[t^2] - E[t]^2
    var = np.dot(w, (pdp.delays - mean) ** 2)
    return float(math.sqrt(max(var, 0.0)))


def exponential_pdp(sigma: float, tap_spacing: float, truncation_factor: float = 10.0) -> PowerDelayProfile:
    """Uniformly spaced taps with power ~ exp(-t / sigma), unit total power.

    Taps run from 0 to ``ceil(truncation_factor * sigma / tap_spacing)``
    spacings inclusive.
    """
    if not (sigma > 0 and math.isfinite(sigma)):
        raise DomainError("sigma must be > 0")
    if not 0 < tap_spacing <= sigma / 10 * (1 + 1e-12):
        raise DomainError("tap_spacing must lie in (0, sigma/10]")
    if not truncation_factor >= 5:
        raise DomainError("truncation_factor must be >= 5")
    last = math.ceil(truncation_factor * sigma / tap_spacing - 1e-9)
    k = np.arange(last + 1)
    delays = k * tap_spacing
    powers = np.exp(-delays / sigma)
    return PowerDelayProfile(delays, powers / powers.sum())
