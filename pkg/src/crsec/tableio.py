"""CSV interchange for sweep tables.

Floats are written with %.17g so every IEEE-754 double round-trips to the
identical bit pattern; two runs that produce equal tables produce
byte-identical files.
"""

from __future__ import annotations

import os

from .estimator import OutageEstimate, SweepRow, SweepTable
from .params import ParameterError

CSV_HEADER = "scheme,n_relays,secrecy_rate,gamma_s_db,trials,outages,estimate,ci_low,ci_high,seed"


class TableFormatError(ValueError):
    """Raised when a sweep CSV is malformed."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(table: SweepTable, path: str | os.PathLike) -> None:
    """Write a sweep table; one row per estimate, trailing newline, no quoting."""
    lines = [CSV_HEADER]
    for row in table.rows:
        e = row.estimate
        lines.append(
            ",".join(
                (
                    row.scheme,
                    str(row.n_relays),
                    _fmt(row.secrecy_rate),
                    _fmt(row.gamma_s_db),
                    str(e.trials),
                    str(e.outages),
                    _fmt(e.estimate),
                    _fmt(e.ci_low),
                    _fmt(e.ci_high),
                    str(e.seed),
                )
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_int(field: str, value: str, line_no: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise TableFormatError(f"line {line_no}: {field} must be an integer, got {value!r}") from None


def _parse_float(field: str, value: str, line_no: int) -> float:
    try:
        return float(value)
    except ValueError:
        raise TableFormatError(f"line {line_no}: {field} must be a number, got {value!r}") from None


def read_csv(path: str | os.PathLike) -> SweepTable:
    """Read a sweep table written by write_csv, validating structure as it goes."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TableFormatError("line 1: empty file, expected header")
    if lines[0] != CSV_HEADER:
        raise TableFormatError(f"line 1: bad header {lines[0]!r}")
    rows = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line:
            raise TableFormatError(f"line {line_no}: blank line")
        fields = line.split(",")
        if len(fields) != 10:
            raise TableFormatError(f"line {line_no}: expected 10 fields, got {len(fields)}")
        scheme = fields[0]
        try:
            estimate = OutageEstimate(
                outages=_parse_int("outages", fields[5], line_no),
                trials=_parse_int("trials", fields[4], line_no),
                estimate=_parse_float("estimate", fields[6], line_no),
                ci_low=_parse_float("ci_low", fields[7], line_no),
                ci_high=_parse_float("ci_high", fields[8], line_no),
                seed=_parse_int("seed", fields[9], line_no),
            )
        except ParameterError as exc:
            raise TableFormatError(f"line {line_no}: {exc}") from None
        rows.append(
            SweepRow(
                scheme=scheme,
                n_relays=_parse_int("n_relays", fields[1], line_no),
                secrecy_rate=_parse_float("secrecy_rate", fields[2], line_no),
                gamma_s_db=_parse_float("gamma_s_db", fields[3], line_no),
                estimate=estimate,
            )
        )
    try:
        return SweepTable(tuple(rows))
    except ParameterError as exc:
        raise TableFormatError(str(exc)) from None
