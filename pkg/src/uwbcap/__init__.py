"""Implementation-aware IR-UWB channel capacity toolkit."""

from .capacity import (
    Analog,
    AnalogFrontEnd,
    CapacityResult,
    Digital,
    DigitalFrontEnd,
    ModulationScheme,
    Scaling,
    capacity_analog,
    capacity_asymptote,
    capacity_mary,
    capacity_mostly_digital,
    percent_of_max,
    required_frequency,
    sweep_capacity,
)
from .catalog import CatalogEntry, Kind, bandwidth_of, best_for, builtin_catalog, load_catalog, save_catalog
from .channel import (
    ChannelProfile,
    PowerDelayProfile,
    builtin_environments,
    exponential_pdp,
    get_environment,
    mean_excess_delay,
    rms_delay_spread,
)
from .errors import DomainError, InfeasibleTargetError
from .isi import ISIReport, SimConfig, guard_sweep, residual_isi_fraction, simulate

__version__ = "0.1.0"
