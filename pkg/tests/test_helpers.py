#!/usr/bin/python3
# -*- coding: utf-8 -*-

from datetime import datetime, timedelta, timezone
from fractions import Fraction

import pytest

from __version__ import get_version
from utils.helpers import (
    clean_filename,
    format_timestamp,
    parse_rational,
    rational_to_dict,
    rational_to_str,
    read_graph6_lines,
)


@pytest.mark.parametrize("text, cleaned", [
    ("Bw", "Bw"),
    ("C~", "C"),
    ("K1,2,3 graph", "K123_graph"),
    ("D?{", "D"),
])
def test_clean_filename(text, cleaned):
    assert clean_filename(text) == cleaned


def test_clean_filename_truncates(caplog):
    assert len(clean_filename("a" * 300)) == 255
    assert "truncated" in caplog.text


def test_format_timestamp():
    moment = datetime(2024, 5, 1, 14, 0, 0, tzinfo=timezone(timedelta(hours=2)))
    assert format_timestamp(moment) == '2024-05-01T12:00:00Z'
    assert format_timestamp().endswith('Z')


def test_rationals():
    assert rational_to_dict(Fraction(5, 2)) == {'num': 5, 'den': 2}
    assert rational_to_dict(3) == {'num': 3, 'den': 1}
    assert rational_to_dict(None) is None
    assert rational_to_str(Fraction(5, 2)) == '5/2'
    assert rational_to_str(Fraction(6, 2)) == '3'
    assert rational_to_str(None) == ''
    assert parse_rational('0.1') == Fraction(1, 10)
    assert parse_rational(' 1/10 ') == Fraction(1, 10)
    with pytest.raises(ValueError):
        parse_rational('one tenth')


def test_read_graph6_lines(tmp_path):
    path = tmp_path / 'graphs.g6'
    path.write_text("# header\nBw\n\n  C~  \n", encoding='ascii')
    assert read_graph6_lines(str(path)) == ['Bw', 'C~']


def test_get_version(tmp_path):
    release = tmp_path / 'VERSION'
    release.write_text("1.2.0\n", encoding='utf-8')
    assert get_version(str(release)) == '1.2.0'
    assert get_version(str(tmp_path / 'missing')) == 'unknown'
    release.write_text("\n", encoding='utf-8')
    assert get_version(str(release)) == 'unknown'
