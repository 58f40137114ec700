"""Command-line front end.

Examples::

    uwbcap capacity --digital --fs 2GHz --n 4 --env "Industrial LOS"
    uwbcap capacity --analog --fcircuit 10.87GHz --drms 0.87ns --M 4
    uwbcap table table1 --check
    uwbcap sweep --analog --drms 1ns,5ns,10ns --f 1GHz:60GHz:0.5GHz
    uwbcap catalog rank --env "60GHz 15°/15°" --analog
    uwbcap simulate --sigma 17ns --pulse 0.25ns --guard 51ns --seed 42 --oracle

Exit status: 0 success, 2 usage error, 3 domain or infeasible input,
4 table check mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from typing import Optional, Sequence

from . import tables
from .capacity import (
    Analog,
    Digital,
    ModulationScheme,
    Scaling,
    capacity_mary,
    frequency_grid,
    required_frequency,
    sweep_capacity,
)
from .catalog import Kind, bandwidth_of, best_for, builtin_catalog, dumps_catalog, load_catalog
from .channel import exponential_pdp, get_environment, mean_excess_delay, rms_delay_spread
from .errors import CatalogError, DomainError, UnknownEnvironmentError
from .isi import guard_sweep, residual_isi_fraction
from .units import parse_frequency, parse_list, parse_range, parse_rate, parse_time

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4

MBPS = 1e6
GHZ = 1e9
NS = 1e-9
PS = 1e-12
FRACTION_DECIMALS = 6


class UsageError(Exception):
    pass


def _typed(parser, what):
    def conv(text):
        try:
            return parser(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    conv.__name__ = what
    return conv


def _listed(parser, what):
    return _typed(lambda t: parse_list(t, parser), what)


def _times(text):
    """Guard times as ``a,b,c`` or ``START:STOP:STEP`` (inclusive)."""
    if ":" in text:
        start, stop, step = parse_range(text, parse_time)
        if not (step > 0 and stop >= start):
            raise ValueError("guard range needs STEP > 0 and STOP >= START")
        return frequency_grid(start, stop, step).tolist()
    return parse_list(text, parse_time)


def _precision(text):
    p = int(text)
    if not 0 <= p <= 12:
        raise argparse.ArgumentTypeError("precision must be in [0, 12]")
    return p


# ---------------------------------------------------------------- output


class Output:
    def __init__(self, args, default_format="text", default_precision=2):
        self.format = args.format or default_format
        self.precision = default_precision if args.precision is None else args.precision
        self.path = args.out

    def rate(self, bits_per_s):
        return self.fixed(bits_per_s / MBPS)

    def fixed(self, value, decimals=None):
        if value is None:
            return ""
        if isinstance(value, float) and math.isnan(value):
            return "nan"
        return f"{value:.{self.precision if decimals is None else decimals}f}"

    def emit(self, headers, rows, notes=()):
        buf = io.StringIO()
        if self.format == "csv":
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(headers)
            writer.writerows(rows)
        else:
            widths = [len(h) for h in headers]
            for r in rows:
                widths = [max(w, len(c)) for w, c in zip(widths, r)]
            line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
            buf.write(line(headers) + "\n")
            buf.write("  ".join("-" * w for w in widths) + "\n")
            for r in rows:
                buf.write(line(r) + "\n")
            for n in notes:
                buf.write(n + "\n")
        text = buf.getvalue()
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def g(value):
    return f"{value:.10g}"


def _delay_arg(args) -> tuple[float, str]:
    if getattr(args, "env", None):
        env = get_environment(args.env)
        return env.rms_delay_spread, env.name
    if args.drms is None:
        raise UsageError("one of --drms or --env is required")
    return args.drms, ""


def _mode(args):
    return Analog() if args.analog else Digital(args.n)


# ---------------------------------------------------------------- commands


def cmd_capacity(args) -> int:
    d_rms, env_name = _delay_arg(args)
    mode = _mode(args)
    freq = args.fcircuit if args.analog else args.fs
    if freq is None:
        raise UsageError("--fcircuit is required with --analog" if args.analog else "--fs is required with --digital")
    res = mode.capacity(freq, d_rms)
    scheme = ModulationScheme(args.M, Scaling(args.scaling))
    out = Output(args)
    headers = ["mode", "environment", "frequency_ghz", "n_sampling", "d_rms_ns", "M",
               "capacity_mbps", "binary_capacity_mbps", "asymptote_mbps", "percent_of_max"]
    row = [
        mode.name, env_name, g(freq / GHZ), g(mode.sampling_factor), g(d_rms / NS), str(args.M),
        out.rate(capacity_mary(res.capacity, scheme)), out.rate(res.capacity),
        "inf" if math.isinf(res.asymptote) else out.rate(res.asymptote),
        out.fixed(100.0 * res.fraction_of_max),
    ]
    out.emit(headers, [row])
    return EXIT_OK


def cmd_required(args) -> int:
    d_rms, env_name = _delay_arg(args)
    mode = _mode(args)
    f = required_frequency(args.target, d_rms, mode)
    out = Output(args)
    out.emit(
        ["mode", "environment", "target_mbps", "d_rms_ns", "n_sampling", "required_frequency_ghz"],
        [[mode.name, env_name, out.rate(args.target), g(d_rms / NS), g(mode.sampling_factor), g(f / GHZ)]],
    )
    return EXIT_OK


def cmd_table(args) -> int:
    which = args.which
    if which == "table1":
        out = Output(args, default_precision=8)
        rows = tables.table1_rows()
        out.emit(
            ["environment", "d_rms_ns", "sampling_gsps", "n_sampling", "capacity_mbps"],
            [[r.environment, g(r.d_rms / NS), g(r.sampling_frequency / GHZ), g(r.sampling_factor),
              out.rate(r.capacity)] for r in rows],
        )
        if args.check:
            return _report_check(tables.check_table1(rows), len(rows))
    elif which == "table4":
        out = Output(args)
        rows = tables.table4_rows()
        out.emit(
            ["environment", "d_rms_ns", "pulse_generator", "bandwidth_ghz", "binary_mbps", "ternary_mbps", "m4_mbps"],
            [[r.environment, g(r.d_rms / NS), r.citation, out.fixed(r.bandwidth / GHZ, 2)]
             + [out.rate(c) for c in r.capacities] for r in rows],
        )
        if args.check:
            return _report_check(tables.check_table4(rows), len(rows))
    elif which == "table2":
        out = Output(args)
        out.emit(
            ["year", "author", "technology", "min_ps", "max_ps", "bandwidth_ghz", "citation"],
            [[str(e.year), e.author, e.technology, g(e.min_pulse_duration / PS),
              "-" if e.max_pulse_duration is None else g(e.max_pulse_duration / PS),
              out.fixed(bandwidth_of(e) / GHZ), e.citation] for e in tables.table2_rows()],
        )
    else:
        out = Output(args)
        out.emit(
            ["band", "tx_hpbw_deg", "rx_hpbw_deg", "d_rms_ns"],
            [[e.band.value, g(e.tx_hpbw_deg), g(e.rx_hpbw_deg), g(e.rms_delay_spread / NS)]
             for e in tables.table3_rows()],
        )
        if args.check:
            raise UsageError("--check applies to table1 and table4 only")
    return EXIT_OK


def _report_check(mismatches, nrows) -> int:
    if mismatches:
        for m in mismatches:
            print(f"MISMATCH {m}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"check ok: {nrows} rows match", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(args) -> int:
    start, stop, step = args.f
    freqs = frequency_grid(start, stop, step)
    out = Output(args, default_format="csv")
    quantity = "percent_of_max" if args.percent else "capacity_mbps"
    headers = ["mode", "n_sampling", "d_rms_ns", "frequency_ghz", quantity, "asymptote_mbps", "flag"]
    rows = []
    modes = [Analog()] if args.analog else [Digital(n) for n in args.n]
    for mode in modes:
        for r in sweep_capacity(args.drms, freqs, mode):
            value = out.fixed(r.percent) if args.percent else out.rate(r.capacity)
            asym = "inf" if math.isinf(r.asymptote) else out.rate(r.asymptote)
            rows.append([mode.name, g(mode.sampling_factor), g(r.d_rms / NS), g(r.frequency / GHZ),
                         value, asym, r.error or ""])
    out.emit(headers, rows)
    return EXIT_OK


def _catalog_source(args):
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return load_catalog(fh)
    return builtin_catalog()


def cmd_catalog(args) -> int:
    action = args.action
    if action == "export":
        text = dumps_catalog(_catalog_source(args))
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if action == "validate":
        entries = _catalog_source(args)
        print(f"ok: {len(entries)} entries", file=sys.stderr)
        return EXIT_OK
    out = Output(args)
    if action == "list":
        entries = _catalog_source(args)
        out.emit(
            ["kind", "year", "author", "technology", "min_ps", "max_ps", "sampling_gsps", "bits", "citation"],
            [[e.kind.value, "" if e.year is None else str(e.year), e.author, e.technology,
              "" if e.min_pulse_duration is None else g(e.min_pulse_duration / PS),
              "" if e.max_pulse_duration is None else g(e.max_pulse_duration / PS),
              "" if e.sampling_frequency is None else g(e.sampling_frequency / GHZ),
              "" if e.resolution_bits is None else str(e.resolution_bits), e.citation] for e in entries],
        )
        return EXIT_OK
    # rank
    d_rms, env_name = _delay_arg(args)
    env = get_environment(args.env) if args.env else d_rms
    mode = _mode(args)
    scheme = ModulationScheme(args.M, Scaling(args.scaling))
    ranked = best_for(env, _catalog_source(args), mode, scheme)
    if not ranked:
        print("no catalog entries of the matching kind", file=sys.stderr)
    out.emit(
        ["rank", "kind", "year", "author", "citation", "frequency_ghz", "capacity_mbps"],
        [[str(i + 1), e.kind.value, "" if e.year is None else str(e.year), e.author, e.citation,
          g((bandwidth_of(e) if e.kind is Kind.PULSE_GENERATOR else e.sampling_frequency) / GHZ),
          out.rate(c)] for i, (e, c) in enumerate(ranked)],
    )
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.env:
        sigma = get_environment(args.env).rms_delay_spread
    elif args.sigma is not None:
        sigma = args.sigma
    else:
        raise UsageError("one of --sigma or --env is required")
    spacing = args.tap_spacing if args.tap_spacing is not None else sigma / 100
    pdp = exponential_pdp(sigma, spacing, args.truncation)
    guards = args.guard_sweep if args.guard_sweep is not None else [args.guard]
    if guards == [None]:
        raise UsageError("one of --guard or --guard-sweep is required")
    out = Output(args, default_format="csv" if args.guard_sweep is not None else "text")
    headers = ["sigma_ns", "d_rms_ns", "pulse_ns", "guard_ns", "symbol_period_ns", "effective_rate_mbps",
               "residual_isi_fraction", "per_symbol_worst", "coherent_isi_fraction", "flag"]
    if args.oracle:
        headers.insert(-1, "oracle_fraction")
    d_rms = rms_delay_spread(pdp)
    rows = []
    for row in guard_sweep(pdp, args.pulse, guards, args.symbols, args.seed, args.resolution, args.max_samples):
        if row.error and len(guards) == 1:
            raise DomainError(row.error)
        rep = row.report
        cells = [g(sigma / NS), g(d_rms / NS), g(args.pulse / NS), g(row.guard_time / NS)]
        if rep is None:
            cells += ["nan"] * 5
        else:
            cells += [g(rep.symbol_period / NS), out.rate(rep.effective_rate),
                      out.fixed(rep.residual_isi_fraction, FRACTION_DECIMALS),
                      out.fixed(rep.per_symbol_worst, FRACTION_DECIMALS),
                      out.fixed(rep.coherent_isi_fraction, FRACTION_DECIMALS)]
        if args.oracle:
            cells.append(out.fixed(residual_isi_fraction(pdp, row.guard_time), FRACTION_DECIMALS))
        cells.append(row.error or "")
        rows.append(cells)
    notes = [f"profile: {len(pdp)} taps, mean excess delay {g(mean_excess_delay(pdp) / NS)} ns, "
             f"d_rms {g(d_rms / NS)} ns; guard = d_rms leaves ~37% tail energy for an exponential profile"]
    out.emit(headers, rows, notes)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _global_options(default):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv"), default=default, help="output format")
    common.add_argument("--out", metavar="PATH", default=default, help="write output to PATH instead of stdout")
    common.add_argument("--precision", type=_precision, default=default,
                        help="decimal places for rate columns (default 2; table1 uses 8)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uwbcap", description="IR-UWB implementation-aware capacity toolkit",
                                     parents=[_global_options(None)])
    # SUPPRESS keeps a subcommand from resetting options given before it
    common = _global_options(argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def mode_args(p):
        m = p.add_mutually_exclusive_group(required=True)
        m.add_argument("--digital", action="store_true", help="mostly-digital radio (converter-limited)")
        m.add_argument("--analog", action="store_true", help="analog radio (circuit-limited)")

    def delay_args(p):
        d = p.add_mutually_exclusive_group()
        d.add_argument("--drms", type=_typed(parse_time, "time"), help="RMS delay spread, e.g. 17ns")
        d.add_argument("--env", help="built-in environment name (see `table table3`)")

    def mary_args(p):
        p.add_argument("--M", type=int, default=2, help="modulation order")
        p.add_argument("--scaling", choices=[s.value for s in Scaling], default=Scaling.ORDER_MINUS_ONE.value,
                       help="M-ary rate factor: M-1 or log2(M)")

    p = sub.add_parser("capacity", parents=[common], help="capacity at one operating point")
    mode_args(p)
    p.add_argument("--fs", type=_typed(parse_frequency, "frequency"), help="converter sampling rate, e.g. 2GHz")
    p.add_argument("--fcircuit", type=_typed(parse_frequency, "frequency"), help="minimum analog circuit frequency")
    p.add_argument("--n", type=float, default=4.0, help="sampling factor (digital)")
    delay_args(p)
    mary_args(p)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("required", parents=[common], help="frequency needed for a target rate")
    mode_args(p)
    p.add_argument("--target", type=_typed(parse_rate, "rate"), required=True, help="target rate, e.g. 90Mbps")
    p.add_argument("--n", type=float, default=4.0, help="sampling factor (digital)")
    delay_args(p)
    p.set_defaults(func=cmd_required)

    p = sub.add_parser("table", parents=[common], help="reproduce a published table")
    p.add_argument("which", choices=("table1", "table2", "table3", "table4"))
    p.add_argument("--check", action="store_true", help="compare with published values; exit 4 on mismatch")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", parents=[common], help="figure datasets (CSV by default)")
    mode_args(p)
    p.add_argument("--drms", type=_listed(parse_time, "time list"), required=True, help="e.g. 1ns,5ns,10ns")
    p.add_argument("--f", type=_typed(lambda t: parse_range(t, parse_frequency), "range"), required=True,
                   help="frequency range START:STOP:STEP, e.g. 1GHz:60GHz:0.5GHz")
    p.add_argument("--n", type=_typed(lambda t: parse_list(t, float), "list"), default=[4.0],
                   help="sampling factor(s), comma separated (digital)")
    p.add_argument("--percent", action="store_true", help="emit percent of the 1/d_rms maximum")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("catalog", parents=[common], help="component catalog tools")
    csub = p.add_subparsers(dest="action", required=True)
    for name, text in (("list", "list entries"), ("validate", "parse and validate a catalog file"),
                       ("export", "write the catalog in file format")):
        c = csub.add_parser(name, parents=[common], help=text)
        c.add_argument("--file", required=(name == "validate"), help="catalog file (default: built-in)")
        c.set_defaults(func=cmd_catalog)
    c = csub.add_parser("rank", parents=[common], help="rank components for an environment")
    mode_args(c)
    c.add_argument("--n", type=float, default=4.0, help="sampling factor (digital)")
    c.add_argument("--file", help="catalog file (default: built-in)")
    delay_args(c)
    mary_args(c)
    c.set_defaults(func=cmd_catalog)

    p = sub.add_parser("simulate", parents=[common], help="ISI simulation of the guard-time assumption")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--sigma", type=_typed(parse_time, "time"), help="exponential profile decay constant")
    src.add_argument("--env", help="exponential profile with sigma = environment d_rms")
    p.add_argument("--pulse", type=_typed(parse_time, "time"), required=True, help="pulse duration")
    gg = p.add_mutually_exclusive_group()
    gg.add_argument("--guard", type=_typed(parse_time, "time"), help="guard time")
    gg.add_argument("--guard-sweep", type=_typed(_times, "guard list"),
                    help="guard times, comma-separated or START:STOP:STEP")
    p.add_argument("--symbols", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=_typed(parse_time, "time"), default=None,
                   help="grid step (default pulse/4)")
    p.add_argument("--tap-spacing", type=_typed(parse_time, "time"), default=None,
                   help="profile tap spacing (default sigma/100)")
    p.add_argument("--truncation", type=float, default=10.0, help="profile length in units of sigma")
    p.add_argument("--max-samples", type=int, default=20_000_000, help="grid size cap")
    p.add_argument("--oracle", action="store_true", help="also print the closed-form tail fraction")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"uwbcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownEnvironmentError as exc:
        print(f"uwbcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"uwbcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, CatalogError) as exc:
        print(f"uwbcap: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
