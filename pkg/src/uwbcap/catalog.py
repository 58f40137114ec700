"""Published pulse-generator and data-converter figures.

Catalog file format (UTF-8, comma separated)::

    # uwbcap-catalog v1
    kind,year,author,technology,min_pulse_duration_s,max_pulse_duration_s,sampling_frequency_hz,resolution_bits,citation
    pulse_generator,2006,Bachelet et al.,CMOS 130 nm,9.2e-11,,,,[16]

Blank lines and lines starting with ``#`` are ignored. Empty cells mean
"not given". Values are SI so that save/load round-trips exactly.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Sequence, Union

from .capacity import (
    BINARY,
    Analog,
    AnalogFrontEnd,
    Digital,
    DigitalFrontEnd,
    ModulationScheme,
    capacity_analog,
    capacity_mary,
    capacity_mostly_digital,
)
from .channel import ChannelProfile
from .errors import CatalogKindError, CatalogParseError, CatalogValidationError

FORMAT_VERSION = "v1"
VERSION_LINE = f"# uwbcap-catalog {FORMAT_VERSION}"
FIELDS = (
    "kind",
    "year",
    "author",
    "technology",
    "min_pulse_duration_s",
    "max_pulse_duration_s",
    "sampling_frequency_hz",
    "resolution_bits",
    "citation",
)


class Kind(enum.Enum):
    PULSE_GENERATOR = "pulse_generator"
    ADC = "adc"


@dataclass(frozen=True)
class CatalogEntry:
    kind: Kind
    year: Optional[int]
    author: str
    technology: str = ""
    min_pulse_duration: Optional[float] = None
    max_pulse_duration: Optional[float] = None
    sampling_frequency: Optional[float] = None
    resolution_bits: Optional[int] = None
    citation: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        for name in ("author", "technology", "citation"):
            # one record per line
            if any(not ch.isprintable() for ch in getattr(self, name)):
                raise CatalogValidationError(f"{name} must not contain control characters")
        if self.kind is Kind.PULSE_GENERATOR:
            tmin = self.min_pulse_duration
            if tmin is None or not (tmin > 0 and math.isfinite(tmin)):
                raise CatalogValidationError(
                    f"{self.author}: pulse generator needs min_pulse_duration > 0"
                )
            tmax = self.max_pulse_duration
            if tmax is not None and not tmax >= tmin:
                raise CatalogValidationError(
                    f"{self.author}: max_pulse_duration {tmax!r} < min_pulse_duration {tmin!r}"
                )
        else:
            fs = self.sampling_frequency
            if fs is None or not (fs > 0 and math.isfinite(fs)):
                raise CatalogValidationError(f"{self.author}: ADC needs sampling_frequency > 0")
            if self.resolution_bits is not None and self.resolution_bits < 1:
                raise CatalogValidationError(f"{self.author}: resolution_bits must be positive")


_BUILTIN_TEXT = f"""\
{VERSION_LINE}
{",".join(FIELDS)}
pulse_generator,2007,Deparis et al.,pHEMT,5e-11,8e-10,,,[13]
pulse_generator,2007,Badalawa et al.,CMOS 90 nm,2.24e-10,,,,[14]
pulse_generator,2006,Kim et al.,CMOS,3.8e-10,4e-09,,,[15]
pulse_generator,2006,Bachelet et al.,CMOS 130 nm,9.2e-11,,,,[16]
adc,,representative,flash,,,2000000000.0,,[7]
adc,,representative,flash,,,5000000000.0,,[7]
adc,,representative,flash,,,10000000000.0,,[7]
adc,2001,Yang et al.,CMOS pipeline,,,75000000.0,14,[8]
adc,1987,Akazawa et al.,flash,,,400000000.0,8,[9]
adc,1999,Mehr et al.,CMOS,,,500000000.0,6,[10]
adc,1988,Wakimoto,Si bipolar flash,,,2000000000.0,6,[11]
adc,2006,Park et al.,CMOS 0.18 um flash,,,4000000000.0,4,[12]
"""


def _parse_optional(raw: str, conv, line: int, field: str):
    raw = raw.strip()
    if raw in ("", "-"):
        return None
    try:
        value = conv(raw)
    except ValueError:
        raise CatalogParseError(line, field, f"cannot parse {raw!r}") from None
    if isinstance(value, float) and not math.isfinite(value):
        raise CatalogParseError(line, field, f"non-finite value {raw!r}")
    return value


def load_catalog(source: Union[IO[str], str]) -> list[CatalogEntry]:
    """Parse a catalog stream (or a string holding the whole file)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    entries = []
    header = None
    for lineno, text in enumerate(source, start=1):
        stripped = text.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped.startswith("# uwbcap-catalog") and stripped != VERSION_LINE:
                raise CatalogParseError(lineno, "version", f"unsupported catalog version: {stripped}")
            continue
        cells = next(csv.reader([text]))
        if header is None:
            header = [c.strip() for c in cells]
            missing = [f for f in FIELDS if f not in header]
            if missing:
                raise CatalogParseError(lineno, missing[0], "missing column in header row")
            continue
        if len(cells) != len(header):
            raise CatalogParseError(
                lineno, "row", f"expected {len(header)} fields, found {len(cells)}"
            )
        row = dict(zip(header, cells))
        try:
            kind = Kind(row["kind"].strip())
        except ValueError:
            raise CatalogParseError(lineno, "kind", f"unknown kind {row['kind']!r}") from None
        author = row["author"].strip()
        if not author:
            raise CatalogParseError(lineno, "author", "author is required")
        try:
            entry = CatalogEntry(
                kind=kind,
                year=_parse_optional(row["year"], int, lineno, "year"),
                author=author,
                technology=row["technology"].strip(),
                min_pulse_duration=_parse_optional(row["min_pulse_duration_s"], float, lineno, "min_pulse_duration_s"),
                max_pulse_duration=_parse_optional(row["max_pulse_duration_s"], float, lineno, "max_pulse_duration_s"),
                sampling_frequency=_parse_optional(row["sampling_frequency_hz"], float, lineno, "sampling_frequency_hz"),
                resolution_bits=_parse_optional(row["resolution_bits"], int, lineno, "resolution_bits"),
                citation=row["citation"].strip(),
            )
        except CatalogValidationError as exc:
            raise CatalogValidationError(f"line {lineno}: {exc}") from None
        entries.append(entry)
    return entries


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def save_catalog(entries: Iterable[CatalogEntry], dest: IO[str]) -> None:
    dest.write(VERSION_LINE + "\n")
    writer = csv.writer(dest, lineterminator="\n")
    writer.writerow(FIELDS)
    for e in entries:
        writer.writerow(
            [
                e.kind.value,
                _cell(e.year),
                e.author,
                e.technology,
                _cell(e.min_pulse_duration),
                _cell(e.max_pulse_duration),
                _cell(e.sampling_frequency),
                _cell(e.resolution_bits),
                e.citation,
            ]
        )


def dumps_catalog(entries: Iterable[CatalogEntry]) -> str:
    buf = io.StringIO()
    save_catalog(entries, buf)
    return buf.getvalue()


def builtin_catalog() -> list[CatalogEntry]:
    return load_catalog(_BUILTIN_TEXT)


def pulse_generators(entries: Iterable[CatalogEntry]) -> list[CatalogEntry]:
    return [e for e in entries if e.kind is Kind.PULSE_GENERATOR]


def find(entries: Iterable[CatalogEntry], citation: str) -> CatalogEntry:
    for e in entries:
        if e.citation == citation:
            return e
    raise KeyError(citation)


def bandwidth_of(entry: CatalogEntry) -> float:
    """Bandwidth in Hz of a pulse generator: inverse of its shortest pulse."""
    if entry.kind is not Kind.PULSE_GENERATOR:
        raise CatalogKindError(f"{entry.author}: bandwidth is only defined for pulse generators")
    return 1.0 / entry.min_pulse_duration


def _year_key(entry: CatalogEntry) -> tuple:
    return (entry.year is None, entry.year or 0, entry.author)


def best_for(
    environment: Union[ChannelProfile, float],
    catalog: Sequence[CatalogEntry],
    implementation: Union[Analog, Digital],
    scheme: ModulationScheme = BINARY,
) -> list[tuple[CatalogEntry, float]]:
    """Rank catalog components by achievable capacity in ``environment``.

    Analog ranks pulse generators with F_circuit = bandwidth_of(entry);
    Digital ranks ADCs at their sampling rate. Order is descending capacity,
    then earlier year, then author. An empty list means no entry of the
    matching kind.
    """
    d_rms = environment.rms_delay_spread if isinstance(environment, ChannelProfile) else float(environment)
    scored = []
    for entry in catalog:
        if isinstance(implementation, Analog):
            if entry.kind is not Kind.PULSE_GENERATOR:
                continue
            freq = bandwidth_of(entry)
            binary = capacity_analog(AnalogFrontEnd(freq), d_rms).capacity
        else:
            if entry.kind is not Kind.ADC:
                continue
            freq = entry.sampling_frequency
            fe = DigitalFrontEnd(freq, implementation.sampling_factor)
            binary = capacity_mostly_digital(fe, d_rms).capacity
        scored.append((entry, capacity_mary(binary, scheme), freq))
    # frequency breaks float-level ties so a faster part never ranks below a slower one
    scored.sort(key=lambda t: (-t[1], -t[2]) + _year_key(t[0]))
    return [(entry, cap) for entry, cap, _ in scored]
