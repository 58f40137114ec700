"""Write the capacity figure datasets and both computed tables as CSV files.

    python scripts/reproduce_figures.py --out results/

One CSV per figure: ``fig2.csv`` (capacity vs sampling frequency for several
sampling factors), ``fig3.csv`` (the same sweep as percent of the delay
spread asymptote), ``fig4.csv`` (reference environments with catalog ADC
rates marked) and ``fig6.csv`` (analog implementation vs circuit frequency).
"""

from __future__ import annotations

import argparse
import csv
import pathlib

from uwbcap import tables
from uwbcap.capacity import Analog, Digital, frequency_grid, sweep_capacity
from uwbcap.catalog import Kind, builtin_catalog
from uwbcap.channel import get_environment

GHZ = 1e9
NS = 1e-9

# delay spreads of the three reference environments
DIGITAL_DELAY_SPREADS = tuple(get_environment(n).rms_delay_spread for n in tables.TABLE1_ENVIRONMENTS)
SAMPLING_FACTORS = (1, 2, 4, 8)
ANALOG_DELAY_SPREADS = (1 * NS, 5 * NS, 10 * NS)


def _write(path: pathlib.Path, header, rows) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def digital_sweep(freqs, factors=SAMPLING_FACTORS, d_list=DIGITAL_DELAY_SPREADS):
    rows = []
    for n in factors:
        for r in sweep_capacity(d_list, freqs, Digital(n)):
            rows.append((r.d_rms / NS, n, r.frequency / GHZ, r.capacity / 1e6, r.percent))
    return rows


def adc_markers(d_list=DIGITAL_DELAY_SPREADS, n=tables.TABLE1_SAMPLING_FACTOR):
    adcs = [e for e in builtin_catalog() if e.kind is Kind.ADC]
    freqs = sorted({e.sampling_frequency for e in adcs})
    return [
        (r.d_rms / NS, r.frequency / GHZ, r.capacity / 1e6)
        for r in sweep_capacity(d_list, freqs, Digital(n))
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("results"))
    ap.add_argument("--fs-step", type=float, default=0.1, help="sampling-frequency step in GSPS")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    fs = frequency_grid(0.1 * GHZ, 10 * GHZ, args.fs_step * GHZ)
    digital = digital_sweep(fs)
    _write(args.out / "fig2.csv", ("d_rms_ns", "n", "fs_gsps", "capacity_mbps"), [r[:4] for r in digital])
    _write(args.out / "fig3.csv", ("d_rms_ns", "n", "fs_gsps", "percent_of_max"), [r[:3] + r[4:] for r in digital])

    fig4 = [r[:4] for r in digital_sweep(fs, (tables.TABLE1_SAMPLING_FACTOR,))]
    _write(args.out / "fig4.csv", ("d_rms_ns", "n", "fs_gsps", "capacity_mbps"), fig4)
    _write(args.out / "fig4_adc.csv", ("d_rms_ns", "fs_gsps", "capacity_mbps"), adc_markers())

    fc = frequency_grid(1 * GHZ, 60 * GHZ, 0.5 * GHZ)
    fig6 = [
        (r.d_rms / NS, r.frequency / GHZ, r.capacity / 1e6, r.percent)
        for r in sweep_capacity(ANALOG_DELAY_SPREADS, fc, Analog())
    ]
    _write(args.out / "fig6.csv", ("d_rms_ns", "fcircuit_ghz", "capacity_mbps", "percent_of_max"), fig6)

    t1 = [
        (r.environment, r.d_rms / NS, r.sampling_frequency / GHZ, r.capacity / 1e6)
        for r in tables.table1_rows()
    ]
    _write(args.out / "table1.csv", ("environment", "d_rms_ns", "fs_gsps", "capacity_mbps"), t1)
    t4 = [
        (r.environment, r.citation, r.d_rms / NS, r.bandwidth / GHZ) + tuple(c / 1e6 for c in r.capacities)
        for r in tables.table4_rows()
    ]
    _write(
        args.out / "table4.csv",
        ("environment", "citation", "d_rms_ns", "bandwidth_ghz", "binary_mbps", "ternary_mbps", "m4_mbps"),
        t4,
    )

    bad = tables.check_table1(tables.table1_rows()) + tables.check_table4(tables.table4_rows())
    for m in bad:
        print(f"MISMATCH {m}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
