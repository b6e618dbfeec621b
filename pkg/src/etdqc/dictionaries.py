"""Alias dictionaries, the word-frequency list, and the valid-year range.

Dictionaries are plain TSV so curators can edit them: the first column is
the canonical name, remaining columns are aliases. Lookups go through
``normalize_surface`` on both sides, so case and punctuation never matter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from .model import normalize_surface


class DictionaryError(Exception):
    """Raised when a dictionary or word-frequency file cannot be loaded."""


class MatchKind(Enum):
    CANONICAL = "canonical"
    ALIAS = "alias"
    NOT_FOUND = "not_found"


@dataclass(frozen=True)
class Match:
    kind: MatchKind
    canonical: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.kind is not MatchKind.NOT_FOUND


NOT_FOUND = Match(MatchKind.NOT_FOUND)


@dataclass
class AliasDictionary:
    """Canonical entries with alias sets and a normalized lookup index."""

    entries: list[tuple[str, frozenset[str]]] = field(default_factory=list)
    index: dict[str, str] = field(default_factory=dict)
    _canonical_keys: set[str] = field(default_factory=set)

    def add_entry(self, canonical: str, aliases: list[str]) -> None:
        canonical = canonical.strip()
        if not canonical:
            raise DictionaryError("empty canonical name")
        norm_canonical = normalize_surface(canonical)
        self._claim(norm_canonical, canonical)
        self._canonical_keys.add(norm_canonical)
        kept = []
        for alias in aliases:
            alias = alias.strip()
            if not alias:
                continue
            norm = normalize_surface(alias)
            if norm == norm_canonical:
                continue
            self._claim(norm, canonical)
            kept.append(alias)
        self.entries.append((canonical, frozenset(kept)))

    def _claim(self, norm_key: str, canonical: str) -> None:
        existing = self.index.get(norm_key)
        if existing is not None and existing != canonical:
            raise DictionaryError(
                f"normalized key {norm_key!r} maps to both "
                f"{existing!r} and {canonical!r}"
            )
        self.index[norm_key] = canonical

    def lookup(self, surface: str) -> Match:
        key = normalize_surface(surface)
        canonical = self.index.get(key)
        if canonical is None:
            return NOT_FOUND
        if key in self._canonical_keys:
            return Match(MatchKind.CANONICAL, canonical)
        return Match(MatchKind.ALIAS, canonical)

    def canonicals(self) -> list[str]:
        return [canonical for canonical, _ in self.entries]

    def aliases_of(self, canonical: str) -> frozenset[str]:
        for name, aliases in self.entries:
            if name == canonical:
                return aliases
        raise KeyError(canonical)

    def __len__(self) -> int:
        return len(self.entries)


def load_alias_dictionary(path: str | Path) -> AliasDictionary:
    """Load a TSV of canonical names and aliases; reject normalized-key
    collisions rather than silently shadowing one entry with another."""
    d = AliasDictionary()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DictionaryError(f"cannot read dictionary {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        columns = line.split("\t")
        try:
            d.add_entry(columns[0], columns[1:])
        except DictionaryError as exc:
            raise DictionaryError(f"{path}:{lineno}: {exc}") from exc
    return d


def lookup(d: AliasDictionary, surface: str) -> Match:
    return d.lookup(surface)


class WordFrequencyList(dict):
    """Lowercase word -> positive count. Plain dict plus a containment check
    that tolerates None."""

    def frequency(self, word: str) -> int:
        return self.get(word, 0)


def load_word_frequencies(path: str | Path) -> WordFrequencyList:
    """Load ``word<TAB>count`` lines; duplicate words have their counts
    summed, non-positive counts are rejected."""
    freqs = WordFrequencyList()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DictionaryError(f"cannot read word list {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            word, count_text = line.split("\t")
            count = int(count_text)
        except ValueError as exc:
            raise DictionaryError(f"{path}:{lineno}: malformed line {line!r}") from exc
        word = word.strip().lower()
        if not word or any(ch.isspace() for ch in word):
            raise DictionaryError(f"{path}:{lineno}: bad word {word!r}")
        if count <= 0:
            raise DictionaryError(f"{path}:{lineno}: non-positive count for {word!r}")
        freqs[word] = freqs.get(word, 0) + count
    return freqs


@dataclass(frozen=True)
class YearRange:
    """Inclusive bounds for a plausible publication year."""

    min_year: int = 1880
    max_year: int = 2023

    def __post_init__(self) -> None:
        if self.min_year > self.max_year:
            raise ValueError("min_year exceeds max_year")

    def contains(self, year: int) -> bool:
        return self.min_year <= year <= self.max_year


def data_path(name: str) -> Path:
    """Path of a bundled data file."""
    return Path(__file__).parent / "data" / name
