"""CSV / JSON / gnuplot serialization of census records.

Exact keys travel as the canonical minimal polynomial text plus the root
index; ``key_approx`` is a 20-digit courtesy value and is ignored on read.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

from .algnum import RealAlgebraic
from .census import CensusRecord
from .polyz import IntPoly

COLUMNS = ("key_minpoly", "key_root_index", "key_approx", "d", "k", "count", "deg_Hd")
APPROX_DIGITS = 20


def record_row(r: CensusRecord) -> dict:
    return {
        "key_minpoly": str(r.key.minpoly),
        "key_root_index": r.key.index,
        "key_approx": r.key.approx(APPROX_DIGITS),
        "d": r.d,
        "k": r.k,
        "count": r.count,
        "deg_Hd": r.deg_Hd,
    }


def row_record(row: dict) -> CensusRecord:
    key = RealAlgebraic.from_key(IntPoly.parse(str(row["key_minpoly"])).coeffs, int(row["key_root_index"]))
    return CensusRecord(key, int(row["d"]), int(row["k"]), int(row["count"]), int(row["deg_Hd"]))


def write_csv(records: Iterable[CensusRecord], fh: TextIO) -> None:
    w = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(record_row(r))


def read_csv(fh: TextIO) -> list[CensusRecord]:
    return [row_record(row) for row in csv.DictReader(fh)]


def write_json(records: Iterable[CensusRecord], fh: TextIO) -> None:
    json.dump([record_row(r) for r in records], fh, indent=1)
    fh.write("\n")


def read_json(fh: TextIO) -> list[CensusRecord]:
    return [row_record(row) for row in json.load(fh)]


def records_text(records: Iterable[CensusRecord], fmt: str = "csv") -> str:
    buf = io.StringIO()
    if fmt == "csv":
        write_csv(records, buf)
    elif fmt == "json":
        write_json(records, buf)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return buf.getvalue()


def write_gnuplot(points: Iterable[tuple[float, int]], fh: TextIO) -> None:
    """Two whitespace-separated columns: x and count."""
    fh.write("# x count\n")
    for x, y in points:
        fh.write(f"{float(x):.17g} {int(y)}\n")
