from uwbcap import tables


def test_table_rows_pass_their_checks():
    assert tables.check_table1(tables.table1_rows()) == []
    assert tables.check_table4(tables.table4_rows()) == []


def test_unrounded_bandwidth_misses_published_m4_column():
    # the published M=4 cells for the most directive channels were computed from 10.87 GHz, not 1/92 ps
    bad = tables.check_table4(tables.table4_rows(round_bandwidth=False))
    assert {(m.row, m.column) for m in bad} >= {(7, "m4_mbps"), (8, "m4_mbps")}


def test_missing_rows_are_reported():
    rows = tables.table1_rows()[:-1]
    assert any("missing" in m.column for m in tables.check_table1(rows))
    assert tables.check_table4(tables.table4_rows()[:-1])


def test_stored_tables():
    assert len(tables.table2_rows()) == 4
    assert [round(e.rms_delay_spread * 1e9, 3) for e in tables.table3_rows()] == [
        17, 7.718, 6.2, 3.455, 2.147, 0.948, 0.87
    ]
