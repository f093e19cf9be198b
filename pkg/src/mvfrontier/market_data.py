"""Historical price files: parsing and date alignment.

The expected layout is the Yahoo Finance daily export::

    Date,Open,High,Low,Close,Adj Close,Volume
    2010-01-04,79.0,80.0,78.5,79.06,61.2,10000

Only ``Date`` and ``Close`` are required; ``Adj Close`` is kept when present
and every other column is ignored.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import BadRow, DataError, DuplicateDate, EmptyIntersection, InsufficientData, MissingColumn


@dataclass(frozen=True)
class PriceRow:
    date: date
    close: float
    adj_close: Optional[float] = None


@dataclass(frozen=True)
class PriceSeries:
    asset_id: str
    rows: tuple

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) < 2:
            raise InsufficientData(f"{self.asset_id}: need at least 2 price rows, got {len(rows)}")
        for prev, cur in zip(rows, rows[1:]):
            if not cur.date > prev.date:
                raise DataError(f"{self.asset_id}: dates not strictly increasing at {cur.date}")
        for r in rows:
            if not r.close > 0 or (r.adj_close is not None and not r.adj_close > 0):
                raise DataError(f"{self.asset_id}: non-positive price on {r.date}")

    @property
    def dates(self):
        return [r.date for r in self.rows]

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True, eq=False)
class AlignedPrices:
    """Prices of N assets on T common trading dates.

    ``adjusted`` holds NaN wherever the source row had no adjusted close.
    """

    asset_ids: tuple
    dates: tuple
    close: np.ndarray
    adjusted: np.ndarray

    @property
    def shape(self):
        return self.close.shape

    def to_series(self) -> list:
        out = []
        for j, aid in enumerate(self.asset_ids):
            rows = []
            for t, d in enumerate(self.dates):
                adj = self.adjusted[t, j]
                rows.append(PriceRow(d, float(self.close[t, j]), None if math.isnan(adj) else float(adj)))
            out.append(PriceSeries(aid, tuple(rows)))
        return out

    def __eq__(self, other):
        if not isinstance(other, AlignedPrices):
            return NotImplemented
        return (
            self.asset_ids == other.asset_ids
            and self.dates == other.dates
            and np.array_equal(self.close, other.close)
            and np.array_equal(self.adjusted, other.adjusted, equal_nan=True)
        )


def _norm(name: str) -> str:
    return "".join(name.split()).replace("_", "").lower()


def _price(text: str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise BadRow(line, f"{column} is not a number: {text!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise BadRow(line, f"{column} must be a positive number, got {text!r}")
    return value


def parse_price_csv(data, asset_id: str) -> PriceSeries:
    """Parse one asset's price CSV (bytes or str) into a date-sorted series."""
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise DataError(f"input is not valid UTF-8: {exc}") from None
    elif data.startswith("﻿"):
        data = data[1:]

    reader = csv.reader(io.StringIO(data, newline=""))
    header = next(reader, None)
    if header is None:
        raise MissingColumn("empty input, no header row")
    cols = {_norm(h): i for i, h in enumerate(header)}
    if "date" not in cols:
        raise MissingColumn("no Date column in header")
    if "close" not in cols:
        raise MissingColumn("no Close column in header")
    i_date, i_close, i_adj = cols["date"], cols["close"], cols.get("adjclose")
    width = max(i for i in (i_date, i_close, i_adj) if i is not None) + 1

    seen = {}
    rows = []
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) < width:
            raise BadRow(line, f"expected at least {width} fields, got {len(fields)}")
        raw_date = fields[i_date].strip()
        try:
            d = date.fromisoformat(raw_date)
        except ValueError:
            raise BadRow(line, f"unparseable date {raw_date!r}") from None
        if d in seen:
            raise DuplicateDate(line, d)
        seen[d] = line
        close = _price(fields[i_close].strip(), line, "Close")
        adj = None
        if i_adj is not None and fields[i_adj].strip():
            adj = _price(fields[i_adj].strip(), line, "Adj Close")
        rows.append(PriceRow(d, close, adj))

    rows.sort(key=lambda r: r.date)
    return PriceSeries(asset_id, tuple(rows))


def read_price_csv(path, asset_id: Optional[str] = None) -> PriceSeries:
    path = Path(path)
    return parse_price_csv(path.read_bytes(), asset_id or path.stem)


def format_price_csv(series: PriceSeries) -> str:
    """Serialize a series back to CSV; ``repr`` floats round-trip exactly."""
    with_adj = any(r.adj_close is not None for r in series.rows)
    lines = ["Date,Close,Adj Close" if with_adj else "Date,Close"]
    for r in series.rows:
        cells = [r.date.isoformat(), repr(r.close)]
        if with_adj:
            cells.append("" if r.adj_close is None else repr(r.adj_close))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def align(series: Sequence[PriceSeries]) -> AlignedPrices:
    """Keep the dates present in every series; columns follow input order."""
    series = list(series)
    if not series:
        raise ValueError("align needs at least one series")
    ids = tuple(s.asset_id for s in series)
    if len(set(ids)) != len(ids):
        raise DataError(f"duplicate asset ids: {list(ids)}")

    common = set(series[0].dates)
    for s in series[1:]:
        common.intersection_update(s.dates)
    if len(common) < 2:
        raise EmptyIntersection(
            f"assets {', '.join(ids)} share {len(common)} common date(s); at least 2 are required"
        )
    dates = tuple(sorted(common))

    T, N = len(dates), len(series)
    close = np.empty((T, N))
    adjusted = np.full((T, N), np.nan)
    for j, s in enumerate(series):
        by_date = {r.date: r for r in s.rows}
        for t, d in enumerate(dates):
            r = by_date[d]
            close[t, j] = r.close
            if r.adj_close is not None:
                adjusted[t, j] = r.adj_close
    close.setflags(write=False)
    adjusted.setflags(write=False)
    return AlignedPrices(ids, dates, close, adjusted)
