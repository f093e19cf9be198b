from datetime import date, timedelta

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvfrontier.errors import BadRow, DuplicateDate, EmptyIntersection, InsufficientData, MissingColumn
from mvfrontier.market_data import (
    PriceRow,
    PriceSeries,
    align,
    format_price_csv,
    parse_price_csv,
    read_price_csv,
)

D = [date(2010, 1, 4) + timedelta(days=i) for i in range(6)]


def series(aid, days, start=100.0):
    return PriceSeries(aid, tuple(PriceRow(d, start + i) for i, d in enumerate(days)))


def test_parse_sorts_by_date():
    s = parse_price_csv(b"Date,Close\n2010-01-05,100.0\n2010-01-04,99.0", "X")
    assert [(r.date, r.close) for r in s.rows] == [(date(2010, 1, 4), 99.0), (date(2010, 1, 5), 100.0)]
    assert s.asset_id == "X"


def test_parse_rejects_negative_price_with_line():
    with pytest.raises(BadRow) as exc:
        parse_price_csv(b"Date,Close\n2010-01-04,-5\n2010-01-05,1", "X")
    assert exc.value.line == 2
    assert "line 2" in str(exc.value)


def test_parse_full_yahoo_header():
    text = (
        "Date,Open,High,Low,Close,Adj Close,Volume\n"
        "2010-01-04,79.0,80.0,78.5,79.06,61.2,10000\n"
        "2010-01-05,79.5,80.1,78.9,79.62,61.6,12000\n"
    )
    s = parse_price_csv(text.encode(), "CVX")
    assert s.rows[0] == PriceRow(date(2010, 1, 4), 79.06, 61.2)
    assert s.rows[1].adj_close == 61.6


def test_parse_header_case_insensitive_crlf_and_bom():
    text = "﻿DATE,adj close,close\r\n2010-01-04,1.5,2.0\r\n2010-01-05,1.6,2.1\r\n"
    s = parse_price_csv(text.encode("utf-8"), "X")
    assert s.rows[0] == PriceRow(date(2010, 1, 4), 2.0, 1.5)


def test_parse_blank_adj_close_is_none():
    s = parse_price_csv("Date,Close,Adj Close\n2010-01-04,2.0,\n2010-01-05,2.1,2.0\n", "X")
    assert s.rows[0].adj_close is None
    assert s.rows[1].adj_close == 2.0


@pytest.mark.parametrize("text", ["Close\n1.0\n2.0", "Date,Open\n2010-01-04,1.0\n2010-01-05,1.0", ""])
def test_parse_missing_column(text):
    with pytest.raises(MissingColumn):
        parse_price_csv(text, "X")


@pytest.mark.parametrize("text,line", [
    ("Date,Close\n2010-01-04,1.0\n04/01/2010,2.0\n", 3),
    ("Date,Close\n2010-01-04,null\n2010-01-05,2.0\n", 2),
    ("Date,Close\n2010-01-04,1.0\n2010-01-05,0\n", 3),
    ("Date,Close\n2010-01-04,1.0\n2010-01-05,nan\n", 3),
    ("Date,Close\n2010-01-04,1.0\n2010-01-05\n", 3),
    ("Date,Close,Adj Close\n2010-01-04,1.0,abc\n2010-01-05,1.0,1.0\n", 2),
])
def test_parse_bad_rows(text, line):
    with pytest.raises(BadRow) as exc:
        parse_price_csv(text, "X")
    assert exc.value.line == line


def test_parse_duplicate_date():
    with pytest.raises(DuplicateDate) as exc:
        parse_price_csv("Date,Close\n2010-01-04,1.0\n2010-01-05,2.0\n2010-01-04,3.0\n", "X")
    assert exc.value.line == 4


def test_parse_needs_two_rows():
    with pytest.raises(InsufficientData):
        parse_price_csv("Date,Close\n2010-01-04,1.0\n", "X")


def test_read_price_csv_uses_file_stem(tmp_path):
    p = tmp_path / "MSFT.csv"
    p.write_text("Date,Close\n2010-01-04,30.95\n2010-01-05,30.96\n")
    assert read_price_csv(p).asset_id == "MSFT"
    assert read_price_csv(p, "M").asset_id == "M"


def test_align_identical_dates():
    a = align([series("A", D[:3]), series("B", D[:3], 50.0)])
    assert a.dates == tuple(D[:3])
    assert a.asset_ids == ("A", "B")
    np.testing.assert_array_equal(a.close, [[100, 50], [101, 51], [102, 52]])
    assert np.isnan(a.adjusted).all()


def test_align_intersection():
    a = align([series("A", D[0:3]), series("B", D[1:4])])
    assert a.dates == (D[1], D[2])
    np.testing.assert_array_equal(a.close, [[101, 100], [102, 101]])


def test_align_disjoint_raises():
    with pytest.raises(EmptyIntersection):
        align([series("A", D[0:3]), series("B", D[3:6])])


def test_align_single_common_date_raises():
    with pytest.raises(EmptyIntersection):
        align([series("A", D[0:3]), series("B", D[2:5])])


@st.composite
def series_lists(draw):
    core = draw(st.sets(st.integers(0, 30), min_size=2, max_size=5))
    k = draw(st.integers(1, 4))
    out = []
    for j in range(k):
        extra = draw(st.sets(st.integers(0, 30), max_size=10))
        days = sorted(core | extra)
        prices = draw(st.lists(st.floats(0.01, 1e4), min_size=len(days), max_size=len(days)))
        out.append(PriceSeries(
            f"S{j}",
            tuple(PriceRow(date(2011, 1, 1) + timedelta(days=d), p) for d, p in zip(days, prices)),
        ))
    return out


@settings(max_examples=100, deadline=None)
@given(series_lists())
def test_align_idempotent(ss):
    a = align(ss)
    assert align(a.to_series()) == a
    for j, s in enumerate(ss):
        by_date = {r.date: r.close for r in s.rows}
        assert [by_date[d] for d in a.dates] == list(a.close[:, j])


@settings(max_examples=100, deadline=None)
@given(series_lists(), st.randoms())
def test_align_permutation_consistent(ss, rnd):
    perm = list(range(len(ss)))
    rnd.shuffle(perm)
    a = align(ss)
    b = align([ss[i] for i in perm])
    assert b.dates == a.dates
    assert b.asset_ids == tuple(a.asset_ids[i] for i in perm)
    np.testing.assert_array_equal(b.close, a.close[:, perm])


@settings(max_examples=100, deadline=None)
@given(series_lists())
def test_parse_format_roundtrip(ss):
    for s in ss:
        back = parse_price_csv(format_price_csv(s).encode(), s.asset_id)
        assert [(r.date, r.close) for r in back.rows] == [(r.date, r.close) for r in s.rows]
