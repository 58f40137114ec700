"""Acceptance criteria; a PASS/FAIL line per criterion is printed at the end of the run."""

import math
import time

import numpy as np
import pytest

from uwbcap import tables
from uwbcap.capacity import (
    Analog,
    AnalogFrontEnd,
    Digital,
    DigitalFrontEnd,
    capacity_analog,
    capacity_asymptote,
    capacity_mostly_digital,
    percent_of_max,
    required_frequency,
)
from uwbcap.catalog import bandwidth_of, builtin_catalog, find
from uwbcap.channel import Band, PowerDelayProfile, builtin_environments, exponential_pdp, rms_delay_spread
from uwbcap.cli import main
from uwbcap.isi import SimConfig, simulate

NS = 1e-9
PS = 1e-12
GHZ = 1e9
MBPS = 1e6

# published values, Mbit/s
TABLE1 = [
    (17, 2, 52.63157895), (17, 5, 56.17977528), (17, 10, 57.47126437),
    (9, 2, 90.90909091), (9, 5, 102.0408163), (9, 10, 106.3829787),
    (89, 2, 10.98901099), (89, 5, 11.13585746), (89, 10, 11.18568233),
]
TABLE4 = [
    (17, 2.63, 57.54, 115.07, 172.61),
    (17, 4.46, 58.06, 116.12, 174.17),
    (17, 10.87, 58.51, 117.01, 175.52),
    (7.718, 10.87, 128.04, 256.08, 384.12),
    (6.2, 10.87, 158.93, 317.86, 476.80),
    (3.455, 10.87, 281.93, 563.86, 845.79),
    (2.147, 10.87, 446.63, 893.26, 1339.89),
    (0.948, 10.87, 961.54, 1923.08, 2884.63),
    (0.87, 10.87, 1039.51, 2079.01, 3118.52),
    (0.87, 20.00, 1086.96, 2173.91, 3260.87),
]


@pytest.mark.criterion(1, "Table I: 9 cells from the mostly-digital formula within 1e-8 relative")
def test_table1_reproduction():
    for d_ns, fs_gsps, published in TABLE1:
        cap = capacity_mostly_digital(DigitalFrontEnd(fs_gsps * GHZ, 4), d_ns * NS).capacity / MBPS
        assert abs(cap - published) <= 1e-8 * published, (d_ns, fs_gsps, cap, published)
    assert len(tables.table1_rows()) == 9
    assert tables.check_table1(tables.table1_rows()) == []


@pytest.mark.criterion(2, "Table IV: 10 rows x binary/ternary/M=4 within 0.01 Mbit/s; bandwidth column")
def test_table4_reproduction():
    cat = builtin_catalog()
    assert round(bandwidth_of(find(cat, "[16]")) / GHZ, 2) == 10.87
    assert round(bandwidth_of(find(cat, "[13]")) / GHZ, 2) == 20.00
    rows = tables.table4_rows()
    assert len(rows) == 10
    for row, (d_ns, bw_ghz, *published) in zip(rows, TABLE4):
        assert row.d_rms == d_ns * NS
        assert round(row.bandwidth / GHZ, 2) == bw_ghz
        binary = capacity_analog(AnalogFrontEnd(bw_ghz * GHZ), d_ns * NS).capacity
        for m, got, want in zip((2, 3, 4), row.capacities, published):
            assert got == pytest.approx(binary * (m - 1), rel=1e-15)
            assert abs(got / MBPS - want) <= 0.01, (d_ns, m, got / MBPS, want)


@pytest.mark.criterion(3, "10 ns channel: capacity at 5 GHz >= 98% of capacity at 60 GHz")
def test_operating_frequency_saturation():
    c5 = capacity_analog(AnalogFrontEnd(5 * GHZ), 10 * NS).capacity
    c60 = capacity_analog(AnalogFrontEnd(60 * GHZ), 10 * NS).capacity
    assert c5 >= 0.98 * c60


@pytest.mark.criterion(4, "1000 random triples: bound, monotonicity, mode consistency, 1e-9 round trip")
def test_asymptote_property_suite():
    rng = np.random.default_rng(20081015)
    f = 10 ** rng.uniform(6, 12, 1000)
    n = rng.uniform(1, 32, 1000)
    d = 10 ** rng.uniform(-12, -6, 1000)
    for fi, ni, di in zip(f, n, d):
        fi, ni, di = float(fi), float(ni), float(di)
        cd = capacity_mostly_digital(DigitalFrontEnd(fi, ni), di).capacity
        ca = capacity_analog(AnalogFrontEnd(fi), di).capacity
        assert cd < 1 / di and ca < 1 / di
        assert cd < capacity_asymptote(di)
        assert capacity_mostly_digital(DigitalFrontEnd(fi * 1.5, ni), di).capacity > cd
        assert capacity_mostly_digital(DigitalFrontEnd(fi, ni * 1.5), di).capacity < cd
        assert capacity_mostly_digital(DigitalFrontEnd(fi, ni), di * 1.5).capacity < cd
        assert capacity_analog(AnalogFrontEnd(fi * 1.5), di).capacity > ca
        assert capacity_analog(AnalogFrontEnd(fi), di * 1.5).capacity < ca
        assert ca == capacity_mostly_digital(DigitalFrontEnd(fi, 1.0), di).capacity
        assert abs(required_frequency(cd, di, Digital(ni)) - fi) <= 1e-9 * fi
        assert abs(required_frequency(ca, di, Analog()) - fi) <= 1e-9 * fi


@pytest.mark.criterion(5, "percent of max at 2/5/10 GSPS, n=4, 17 ns = 89.47/95.51/97.70 +-0.01; gains shrink")
def test_percent_of_max_behaviour():
    pct = [percent_of_max(DigitalFrontEnd(fs * GHZ, 4), 17 * NS) for fs in (2, 5, 10)]
    for got, want in zip(pct, (89.47, 95.51, 97.70)):
        assert abs(got - want) <= 0.01
    assert pct[1] - pct[0] > pct[2] - pct[1]


@pytest.mark.criterion(6, "exponential profile rms within 1% of sigma; two-tap closed form to 1e-12")
def test_delay_spread_oracle():
    sigma = 17 * NS
    d = rms_delay_spread(exponential_pdp(sigma, 0.1 * NS, 10))
    assert abs(d - sigma) <= 0.01 * sigma
    for tau in (1 * NS, 17 * NS, 0.25):
        got = rms_delay_spread(PowerDelayProfile.from_taps([(0.0, 1.0), (2 * tau, 1.0)]))
        assert abs(got - tau) <= 1e-12 * tau


@pytest.mark.criterion(7, "ISI simulation vs exp(-guard/sigma) within 0.02; byte-identical reruns; < 60 s")
def test_isi_simulator_vs_oracle(capsys):
    start = time.perf_counter()
    for sigma_ns in (9, 17):
        sigma = sigma_ns * NS
        pdp = exponential_pdp(sigma, 0.1 * NS, 10)
        for m in (1, 2, 3):
            cfg = SimConfig(0.25 * NS, m * sigma, pdp, 200, 42)
            rep = simulate(cfg)
            assert abs(rep.residual_isi_fraction - math.exp(-m)) <= 0.02, (sigma_ns, m, rep)
            assert simulate(cfg) == rep
    argv = ["simulate", "--sigma", "17ns", "--pulse", "0.25ns", "--guard-sweep", "17ns,34ns,51ns", "--seed", "42"]
    assert main(argv) == 0
    first = capsys.readouterr().out.encode()
    assert main(argv) == 0
    assert capsys.readouterr().out.encode() == first
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(8, "60 GHz delay spreads strictly decrease as beamwidth narrows")
def test_directive_antenna_ordering():
    d = {(e.tx_hpbw_deg, e.rx_hpbw_deg): e.rms_delay_spread
         for e in builtin_environments() if e.band is Band.UWB_60GHZ}
    assert d[(360, 360)] > d[(360, 60)] > d[(360, 15)]
    assert d[(60, 60)] > d[(60, 15)] > d[(15, 15)]


@pytest.mark.criterion(9, "table1/table4 --check exit 0; perturbed constants exit 4")
def test_table_checks(capsys, monkeypatch):
    assert main(["table", "table1", "--check"]) == 0
    assert main(["table", "table4", "--check"]) == 0
    table1, table4 = dict(tables.TABLE1_EXPECTED), tables.TABLE4_EXPECTED
    for key in table1:
        for sign in (1, -1):
            bad = dict(table1)
            bad[key] *= 1 + sign * 2 * tables.TABLE1_REL_TOL
            monkeypatch.setattr(tables, "TABLE1_EXPECTED", bad)
            assert main(["table", "table1", "--check"]) == 4
    for i in range(len(table4)):
        for j in range(4):
            for sign in (1, -1):
                bad = [list(r) for r in table4]
                bad[i][j] += sign * 2 * tables.TABLE4_ABS_TOL_MBPS
                monkeypatch.setattr(tables, "TABLE4_EXPECTED", tuple(map(tuple, bad)))
                assert main(["table", "table4", "--check"]) == 4
    capsys.readouterr()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
