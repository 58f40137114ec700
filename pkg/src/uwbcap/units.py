"""Unit-suffixed quantity parsing for the command line.

A suffix is mandatory (``2GHz``, ``17ns``, ``5GSPS``); only a bare ``0``
is accepted without one. Decimal commas (``0,87ns``) are read as points.
"""

from __future__ import annotations

import re

_FREQUENCY = {
    "hz": 1.0, "khz": 1e3, "mhz": 1e6, "ghz": 1e9, "thz": 1e12,
    "sps": 1.0, "ksps": 1e3, "msps": 1e6, "gsps": 1e9,
}
_TIME = {"s": 1.0, "ms": 1e-3, "us": 1e-6, "µs": 1e-6, "ns": 1e-9, "ps": 1e-12, "fs": 1e-15}
_RATE = {"bps": 1.0, "kbps": 1e3, "mbps": 1e6, "gbps": 1e9, "bit/s": 1.0, "mbit/s": 1e6, "gbit/s": 1e9}

_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?)\s*([^\d\s].*?)?\s*$")


def _parse(text: str, table: dict, what: str) -> float:
    m = _QUANTITY.match(text.replace(",", "."))
    if not m:
        raise ValueError(f"cannot parse {what} {text!r}")
    number, unit = m.groups()
    value = float(number)
    if unit is None:
        if value == 0.0:
            return 0.0
        raise ValueError(f"{what} {text!r} needs a unit suffix ({', '.join(table)})")
    scale = table.get(unit.lower())
    if scale is None:
        raise ValueError(f"unknown {what} unit {unit!r} in {text!r}")
    return value * scale


def parse_frequency(text: str) -> float:
    return _parse(text, _FREQUENCY, "frequency")


def parse_time(text: str) -> float:
    return _parse(text, _TIME, "time")


def parse_rate(text: str) -> float:
    return _parse(text, _RATE, "rate")


def parse_list(text: str, parser) -> list[float]:
    """Comma-separated list; decimal commas are not supported inside lists."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty list")
    return [parser(p) for p in parts]


def parse_range(text: str, parser) -> tuple[float, float, float]:
    """``start:stop:step`` with units on each part."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range {text!r} must look like START:STOP:STEP")
    return tuple(parser(p) for p in parts)
