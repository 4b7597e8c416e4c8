"""CSV serialization: byte-stable round trips and strict parsing."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crsec.estimator import sweep
from crsec.tableio import CSV_HEADER, TableFormatError, read_csv, write_csv
from tests.conftest import make_params


@pytest.fixture()
def small_table():
    return sweep(
        ["direct", "opportunistic"],
        make_params(),
        [0, 10],
        relay_counts=[2],
        trials=4_000,
        seed=11,
    )


def test_header_contract():
    assert CSV_HEADER == (
        "scheme,n_relays,secrecy_rate,gamma_s_db,trials,outages,estimate,ci_low,ci_high,seed"
    )


def test_round_trip_preserves_rows(tmp_path, small_table):
    path = tmp_path / "table.csv"
    write_csv(small_table, path)
    assert read_csv(path) == small_table


def test_reemit_is_byte_identical(tmp_path, small_table):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    write_csv(small_table, first)
    write_csv(read_csv(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_file_layout(tmp_path, small_table):
    path = tmp_path / "table.csv"
    write_csv(small_table, path)
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + len(small_table.rows)
    assert path.read_text().endswith("\n")


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_seventeen_digit_floats_round_trip(value):
    assert float(format(value, ".17g")) == value


def _write(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    return path


def test_empty_file_rejected(tmp_path):
    with pytest.raises(TableFormatError, match="line 1"):
        read_csv(_write(tmp_path, ""))


def test_wrong_header_rejected(tmp_path):
    with pytest.raises(TableFormatError, match="line 1"):
        read_csv(_write(tmp_path, "scheme,n_relays\n"))


def test_field_count_error_names_line(tmp_path):
    text = CSV_HEADER + "\ndirect,0,0.1\n"
    with pytest.raises(TableFormatError, match="line 2"):
        read_csv(_write(tmp_path, text))


def test_non_numeric_field_error_names_line(tmp_path):
    good = "direct,0,0.1,0,1000,100,0.1,0.09,0.12,7"
    bad = "direct,0,0.1,5,1000,many,0.1,0.09,0.12,7"
    text = CSV_HEADER + "\n" + good + "\n" + bad + "\n"
    with pytest.raises(TableFormatError, match="line 3"):
        read_csv(_write(tmp_path, text))


def test_blank_line_rejected(tmp_path):
    text = CSV_HEADER + "\n\n"
    with pytest.raises(TableFormatError, match="line 2"):
        read_csv(_write(tmp_path, text))


def test_inconsistent_estimate_rejected(tmp_path):
    # 123/1000 is not 0.5; the row lies about its own count
    text = CSV_HEADER + "\ndirect,0,0.1,0,1000,123,0.5,0.4,0.6,7\n"
    with pytest.raises(TableFormatError, match="line 2"):
        read_csv(_write(tmp_path, text))


def test_unsorted_rows_rejected(tmp_path):
    row_hi = "direct,0,0.1,10,1000,100,0.1,0.09,0.12,7"
    row_lo = "direct,0,0.1,0,1000,200,0.2,0.18,0.23,8"
    text = CSV_HEADER + "\n" + row_hi + "\n" + row_lo + "\n"
    with pytest.raises(TableFormatError):
        read_csv(_write(tmp_path, text))


def test_header_only_file_is_an_empty_table(tmp_path):
    table = read_csv(_write(tmp_path, CSV_HEADER + "\n"))
    assert table.rows == ()
