"""Domain types for scholarly metadata records and the shared normalization primitive.

A record carries seven fields. Every field value remembers where it came
from (original ingest, extraction, correction, canonicalization), the
advisor field may carry a parsed role, and the year field may carry parsed
date parts.
"""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional


class FieldKey(Enum):
    """The seven metadata fields handled by the pipeline, in report order."""

    TITLE = "title"
    AUTHOR = "author"
    ADVISOR = "advisor"
    UNIVERSITY = "university"
    YEAR = "year"
    DEGREE = "degree"
    DEPARTMENT = "department"


_DC_NAMES = {
    FieldKey.TITLE: "dc.title",
    FieldKey.AUTHOR: "dc.creator",
    FieldKey.ADVISOR: "dc.contributor",
    FieldKey.UNIVERSITY: "thesis.degree.generator",
    FieldKey.YEAR: "dc.date.issued",
    FieldKey.DEGREE: "thesis.degree.name",
    FieldKey.DEPARTMENT: "thesis.degree.discipline",
}


def dc_field_name(key: FieldKey) -> str:
    """Dublin Core element name for a field key."""
    return _DC_NAMES[key]


class Provenance(Enum):
    ORIGINAL = "original"
    EXTRACTED = "extracted"
    CORRECTED = "corrected"
    CANONICALIZED = "canonicalized"


@dataclass(frozen=True)
class DateParts:
    """Parsed calendar parts of a year field. Month may be absent; a day
    without a month is not representable."""

    year: int
    month: Optional[int] = None
    day: Optional[int] = None

    def __post_init__(self) -> None:
        if self.month is None and self.day is not None:
            raise ValueError("day without month")
        if self.month is not None and not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")
        if self.day is not None and not 1 <= self.day <= 31:
            raise ValueError(f"day out of range: {self.day}")


@dataclass
class FieldValue:
    raw: Optional[str] = None
    provenance: Provenance = Provenance.ORIGINAL
    role: Optional[str] = None
    parts: Optional[DateParts] = None

    def copy(self) -> "FieldValue":
        return replace(self)

    def to_dict(self) -> dict:
        d: dict = {"raw": self.raw, "provenance": self.provenance.value}
        if self.role is not None:
            d["role"] = self.role
        if self.parts is not None:
            d["parts"] = {
                "year": self.parts.year,
                "month": self.parts.month,
                "day": self.parts.day,
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FieldValue":
        parts = None
        if d.get("parts") is not None:
            p = d["parts"]
            parts = DateParts(p["year"], p.get("month"), p.get("day"))
        return cls(
            raw=d.get("raw"),
            provenance=Provenance(d.get("provenance", "original")),
            role=d.get("role"),
            parts=parts,
        )


@dataclass
class EtdRecord:
    """One scholarly record. All seven field keys are always present; a
    missing field is a FieldValue with absent raw, never an absent key."""

    id: str
    fields: dict[FieldKey, FieldValue] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.id or not self.id.strip():
            raise ValueError("record id must be non-empty")
        for key in FieldKey:
            self.fields.setdefault(key, FieldValue())

    def value(self, key: FieldKey) -> FieldValue:
        return self.fields[key]

    def raw(self, key: FieldKey) -> Optional[str]:
        return self.fields[key].raw

    def copy(self) -> "EtdRecord":
        return EtdRecord(self.id, {k: v.copy() for k, v in self.fields.items()})

    def to_dict(self) -> dict:
        return {key.value: self.fields[key].to_dict() for key in FieldKey}

    @classmethod
    def from_dict(cls, record_id: str, d: dict) -> "EtdRecord":
        fields = {}
        for key in FieldKey:
            raw_entry = d.get(key.value)
            if raw_entry is None:
                fields[key] = FieldValue()
            elif isinstance(raw_entry, str):
                fields[key] = FieldValue(raw=raw_entry)
            else:
                fields[key] = FieldValue.from_dict(raw_entry)
        return cls(record_id, fields)


# Symbol characters stripped alongside Unicode punctuation; covers the ASCII
# noise seen in repository exports (backtick, tilde, caret, comparisons, ...).
_SYMBOL_CHARS = set("`~^$|<>=+")
_WS_RUN = re.compile(r"\s+")


def _is_punct(ch: str) -> bool:
    return ch in _SYMBOL_CHARS or unicodedata.category(ch).startswith("P")


def normalize_surface(s: str) -> str:
    """Uppercase, strip punctuation, and collapse whitespace.

    Idempotent; preserves the order of alphanumeric content. Used for every
    dictionary lookup and surface comparison in the pipeline.
    """
    cleaned = "".join(ch for ch in s if not _is_punct(ch))
    return _WS_RUN.sub(" ", cleaned).strip().upper()


#: Literal strings treated as an absent value, compared case-insensitively.
MISSING_SENTINELS = frozenset({"null", "none", "n/a", "na"})


def is_missing_text(raw: Optional[str], sentinels: frozenset[str] = MISSING_SENTINELS) -> bool:
    if raw is None:
        return True
    stripped = raw.strip()
    return not stripped or stripped.lower() in sentinels


def is_missing(v: FieldValue, sentinels: frozenset[str] = MISSING_SENTINELS) -> bool:
    """True when the field value is absent, blank, or a missing sentinel."""
    return is_missing_text(v.raw, sentinels)
