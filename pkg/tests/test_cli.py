import csv
import io
import math

import pytest

from uwbcap import tables
from uwbcap.capacity import AnalogFrontEnd, capacity_analog
from uwbcap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_capacity_digital_environment(capsys):
    code, out, _ = run(capsys, "--format", "csv", "capacity", "--digital", "--fs", "2GHz", "--n", "4",
                       "--env", "Industrial LOS")
    assert code == 0
    (row,) = rows_of(out)
    assert row["capacity_mbps"] == "90.91"


def test_capacity_analog_mary(capsys):
    code, out, _ = run(capsys, "capacity", "--analog", "--fcircuit", "10.87GHz", "--drms", "0.87ns", "--M", "4",
                       "--format", "csv")
    assert code == 0
    assert rows_of(out)[0]["capacity_mbps"] == "3118.52"


def test_capacity_ideal_channel(capsys):
    code, out, _ = run(capsys, "capacity", "--analog", "--fcircuit", "1GHz", "--drms", "0", "--format", "csv")
    assert code == 0
    row = rows_of(out)[0]
    assert row["capacity_mbps"] == "1000.00"
    assert row["asymptote_mbps"] == "inf"


def test_rendered_number_equals_library(capsys):
    _, out, _ = run(capsys, "capacity", "--analog", "--fcircuit", "3.3GHz", "--drms", "4.2ns",
                    "--format", "csv", "--precision", "9")
    lib = capacity_analog(AnalogFrontEnd(3.3e9), 4.2e-9).capacity / 1e6
    assert rows_of(out)[0]["capacity_mbps"] == f"{lib:.9f}"


def test_unknown_environment_lists_names(capsys):
    code, _, err = run(capsys, "capacity", "--digital", "--fs", "2GHz", "--env", "Moon base")
    assert code == 2
    assert "Industrial NLOS" in err


def test_missing_suffix_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["capacity", "--digital", "--fs", "2", "--drms", "17ns"])
    assert info.value.code == 2


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "capacity", "--digital", "--fs", "2GHz", "--n", "0.5", "--drms", "1ns")
    assert code == 3
    assert "sampling_factor" in err


def test_required_infeasible(capsys):
    code, _, _ = run(capsys, "required", "--analog", "--target", "60Mbps", "--drms", "17ns")
    assert code == 3
    code, out, _ = run(capsys, "required", "--digital", "--n", "4", "--target", "52.63157895Mbps",
                       "--drms", "17ns", "--format", "csv")
    assert code == 0
    assert float(rows_of(out)[0]["required_frequency_ghz"]) == pytest.approx(2.0, rel=1e-8)


def test_table1_check(capsys):
    code, out, err = run(capsys, "table", "table1", "--check")
    assert code == 0
    assert "52.63157895" in out and "102.04081633" in out and "11.18568233" in out
    assert "9 rows" in err


def test_table4_check(capsys):
    code, out, err = run(capsys, "table", "table4", "--check", "--format", "csv")
    assert code == 0
    rows = rows_of(out)
    assert len(rows) == 10
    assert rows[-1]["m4_mbps"] == "3260.87"


def test_table3_and_table2(capsys):
    code, out, _ = run(capsys, "table", "table3", "--format", "csv")
    assert code == 0
    assert [r["d_rms_ns"] for r in rows_of(out)] == ["17", "7.718", "6.2", "3.455", "2.147", "0.948", "0.87"]
    code, out, _ = run(capsys, "table", "table2", "--format", "csv")
    assert [r["min_ps"] for r in rows_of(out)] == ["50", "224", "380", "92"]


def perturbed_table1(key, delta_rel):
    d = dict(tables.TABLE1_EXPECTED)
    d[key] = d[key] * (1 + delta_rel)
    return d


@pytest.mark.parametrize("key", list(tables.TABLE1_EXPECTED))
@pytest.mark.parametrize("sign", [1, -1])
def test_table1_perturbation_fails_check(capsys, monkeypatch, key, sign):
    monkeypatch.setattr(tables, "TABLE1_EXPECTED", perturbed_table1(key, sign * 2 * tables.TABLE1_REL_TOL))
    code, _, err = run(capsys, "table", "table1", "--check")
    assert code == 4
    assert "MISMATCH" in err


@pytest.mark.parametrize("row", range(10))
@pytest.mark.parametrize("col", range(4))
@pytest.mark.parametrize("sign", [1, -1])
def test_table4_perturbation_fails_check(capsys, monkeypatch, row, col, sign):
    expected = [list(r) for r in tables.TABLE4_EXPECTED]
    expected[row][col] += sign * 2 * tables.TABLE4_ABS_TOL_MBPS
    monkeypatch.setattr(tables, "TABLE4_EXPECTED", tuple(tuple(r) for r in expected))
    code, _, _ = run(capsys, "table", "table4", "--check")
    assert code == 4


def test_sweep_fig6_dataset(capsys):
    code, out, _ = run(capsys, "sweep", "--analog", "--drms", "1ns,5ns,10ns", "--f", "1GHz:60GHz:0.5GHz",
                       "--precision", "6")
    assert code == 0
    rows = rows_of(out)
    assert len(rows) == 3 * 119
    ten = {float(r["frequency_ghz"]): float(r["capacity_mbps"]) for r in rows if r["d_rms_ns"] == "10"}
    assert ten[5.0] >= 0.98 * ten[60.0]


def test_sweep_percent(capsys):
    code, out, _ = run(capsys, "sweep", "--digital", "--n", "4", "--drms", "17ns", "--f", "2GHz:10GHz:1GHz",
                       "--percent")
    assert code == 0
    pct = [float(r["percent_of_max"]) for r in rows_of(out)]
    assert pct[0] == 89.47 and pct[-1] == 97.70
    assert all(b > a for a, b in zip(pct, pct[1:]))


def test_sweep_multiple_sampling_factors(capsys):
    code, out, _ = run(capsys, "sweep", "--digital", "--n", "2,4,8", "--drms", "5ns", "--f", "1GHz:2GHz:1GHz")
    assert code == 0
    assert [r["n_sampling"] for r in rows_of(out)] == ["2", "2", "4", "4", "8", "8"]


def test_sweep_empty_range(capsys):
    code, _, _ = run(capsys, "sweep", "--analog", "--drms", "1ns", "--f", "5GHz:1GHz:1GHz")
    assert code == 3


def test_sweep_flags_bad_cells(capsys):
    code, out, _ = run(capsys, "sweep", "--analog", "--drms=-1ns,1ns", "--f", "1GHz:1GHz:1GHz")
    assert code == 0
    rows = rows_of(out)
    assert rows[0]["flag"] and rows[0]["capacity_mbps"] == "nan"
    assert not rows[1]["flag"]


def test_csv_round_trip_at_precision(capsys, tmp_path):
    path = tmp_path / "fig2.csv"
    code, _, _ = run(capsys, "sweep", "--digital", "--n", "4", "--drms", "17ns", "--f", "1GHz:3GHz:1GHz",
                     "--out", str(path), "--precision", "4")
    assert code == 0
    rows = rows_of(path.read_text())
    for r in rows:
        assert f"{float(r['capacity_mbps']):.4f}" == r["capacity_mbps"]


def test_catalog_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list", "--format", "csv")
    assert code == 0 and len(rows_of(out)) == 12
    path = tmp_path / "cat.csv"
    assert run(capsys, "catalog", "export", "--out", str(path))[0] == 0
    assert run(capsys, "catalog", "validate", "--file", str(path))[0] == 0
    code, out, _ = run(capsys, "catalog", "rank", "--analog", "--env", "60GHz 15°/15°", "--format", "csv",
                       "--file", str(path))
    ranked = rows_of(out)
    assert ranked[0]["citation"] == "[13]" and ranked[0]["capacity_mbps"] == "1086.96"


def test_catalog_validate_reports_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("kind,year,author,technology,min_pulse_duration_s,max_pulse_duration_s,"
                    "sampling_frequency_hz,resolution_bits,citation\npulse_generator,x,A,B,1e-9,,,,[1]\n")
    code, _, err = run(capsys, "catalog", "validate", "--file", str(path))
    assert code == 3
    assert "line 2" in err and "year" in err


def test_simulate_with_oracle(capsys):
    code, out, _ = run(capsys, "simulate", "--sigma", "17ns", "--pulse", "0.25ns", "--guard", "51ns",
                       "--symbols", "200", "--seed", "42", "--oracle", "--format", "csv")
    assert code == 0
    (row,) = rows_of(out)
    assert float(row["residual_isi_fraction"]) == pytest.approx(math.exp(-3), abs=0.002)
    assert float(row["oracle_fraction"]) == pytest.approx(math.exp(-3), abs=0.002)


def test_simulate_guard_sweep_monotone_and_deterministic(capsys):
    argv = ["simulate", "--sigma", "9ns", "--pulse", "0.5ns", "--guard-sweep", "4.5ns,9ns,18ns,27ns"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    fr = [float(r["residual_isi_fraction"]) for r in rows_of(first)]
    assert all(b < a for a, b in zip(fr, fr[1:]))
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_simulate_guard_sweep_range_matches_list(capsys):
    base = ["simulate", "--sigma", "2ns", "--pulse", "0.5ns", "--symbols", "64", "--guard-sweep"]
    _, ranged, _ = run(capsys, *base, "0ns:3ns:1ns")
    _, listed, _ = run(capsys, *base, "0ns,1ns,2ns,3ns")
    assert ranged == listed
    assert len(rows_of(ranged)) == 4
    with pytest.raises(SystemExit) as exc:
        main(base + ["0ns:3ns:0ns"])
    assert exc.value.code == 2


def test_simulate_environment_profile(capsys):
    code, out, _ = run(capsys, "simulate", "--env", "Industrial LOS", "--pulse", "0.5ns", "--guard", "9ns",
                       "--format", "csv")
    assert code == 0
    assert rows_of(out)[0]["sigma_ns"] == "9"


def test_simulate_grid_cap(capsys):
    code, _, err = run(capsys, "simulate", "--sigma", "17ns", "--pulse", "0.25ns", "--guard", "51ns",
                       "--max-samples", "1000")
    assert code == 3
    assert "coarser" in err
