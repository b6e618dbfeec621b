"""Parsing and canonical rendering of the year field.

A fixed table of accepted formats is tried in order; calendar validity
(month lengths, leap years) is enforced through ``datetime.date``. Numeric
``NN-NN-YYYY`` forms read month-first by default with a day-first switch.
"""
from __future__ import annotations

import datetime
import re

from .model import DateParts


class UnparseableDateError(ValueError):
    """Raised when a year field matches none of the accepted formats."""


_MONTHS = {
    name: i + 1
    for i, name in enumerate(
        [
            "january", "february", "march", "april", "may", "june",
            "july", "august", "september", "october", "november", "december",
        ]
    )
}
_MONTHS.update({name[:3]: num for name, num in list(_MONTHS.items())})

_YEAR_ONLY = re.compile(r"^(\d{4})$")
_ISO_FULL = re.compile(r"^(\d{4})-(\d{1,2})-(\d{1,2})$")
_ISO_MONTH = re.compile(r"^(\d{4})-(\d{1,2})$")
_SLASH_YMD = re.compile(r"^(\d{4})/(\d{1,2})/(\d{1,2})$")
_DASH_NUMERIC = re.compile(r"^(\d{1,2})-(\d{1,2})-(\d{4})$")
_SLASH_NUMERIC = re.compile(r"^(\d{1,2})/(\d{1,2})/(\d{4})$")
_MONTH_DD_YYYY = re.compile(r"^([A-Za-z]+)\.?\s+(\d{1,2}),?\s+(\d{4})$")
_DD_MONTH_YYYY = re.compile(r"^(\d{1,2})\s+([A-Za-z]+)\.?\s+(\d{4})$")
_MONTH_YYYY = re.compile(r"^([A-Za-z]+)\.?,?\s+(\d{4})$")


def _calendar_ok(year: int, month: int, day: int) -> bool:
    try:
        datetime.date(year, month, day)
    except ValueError:
        return False
    return True


def _full(year: int, month: int, day: int) -> DateParts | None:
    if _calendar_ok(year, month, day):
        return DateParts(year, month, day)
    return None


def _month_only(year: int, month: int) -> DateParts | None:
    if 1 <= month <= 12:
        return DateParts(year, month)
    return None


def parse_year_field(value: str, day_first: bool = False) -> DateParts:
    """Parse a year field into calendar parts.

    Raises UnparseableDateError when no accepted format matches or the
    matched numbers are not a real calendar date.
    """
    text = value.strip()
    m = _YEAR_ONLY.match(text)
    if m:
        return DateParts(int(m.group(1)))
    for pattern in (_ISO_FULL, _SLASH_YMD):
        m = pattern.match(text)
        if m:
            parts = _full(int(m.group(1)), int(m.group(2)), int(m.group(3)))
            if parts:
                return parts
    m = _ISO_MONTH.match(text)
    if m:
        parts = _month_only(int(m.group(1)), int(m.group(2)))
        if parts:
            return parts
    for pattern in (_DASH_NUMERIC, _SLASH_NUMERIC):
        m = pattern.match(text)
        if m:
            first, second, year = int(m.group(1)), int(m.group(2)), int(m.group(3))
            month, day = (second, first) if day_first else (first, second)
            parts = _full(year, month, day)
            if parts:
                return parts
    m = _MONTH_DD_YYYY.match(text)
    if m and m.group(1).lower() in _MONTHS:
        parts = _full(int(m.group(3)), _MONTHS[m.group(1).lower()], int(m.group(2)))
        if parts:
            return parts
    m = _DD_MONTH_YYYY.match(text)
    if m and m.group(2).lower() in _MONTHS:
        parts = _full(int(m.group(3)), _MONTHS[m.group(2).lower()], int(m.group(1)))
        if parts:
            return parts
    m = _MONTH_YYYY.match(text)
    if m and m.group(1).lower() in _MONTHS:
        return DateParts(int(m.group(2)), _MONTHS[m.group(1).lower()])
    raise UnparseableDateError(f"unrecognized date: {value!r}")


def render_iso(parts: DateParts) -> str:
    """Canonical text form: YYYY, YYYY-MM, or YYYY-MM-DD."""
    if parts.month is None:
        return f"{parts.year:04d}"
    if parts.day is None:
        return f"{parts.year:04d}-{parts.month:02d}"
    return f"{parts.year:04d}-{parts.month:02d}-{parts.day:02d}"


def is_canonical_form(value: str) -> bool:
    """True when the text is already in a canonical ISO-style form."""
    text = value.strip()
    for pattern in (_YEAR_ONLY, _ISO_MONTH, _ISO_FULL):
        if pattern.match(text):
            try:
                return render_iso(parse_year_field(text)) == text
            except UnparseableDateError:
                return False
    return False
