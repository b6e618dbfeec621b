"""Edit-distance spell checking against a word-frequency list.

Candidate generation enumerates every single edit (insert, delete, replace,
transpose) and intersects with the known-word list; two-edit candidates are
tried only when no one-edit candidate exists. The most frequent candidate
wins, ties broken alphabetically.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .dictionaries import WordFrequencyList

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

#: Spell checking ignores tokens shorter than this.
MIN_TOKEN_LENGTH = 3


def damerau_levenshtein(a: str, b: str) -> int:
    """Edit distance counting insertions, deletions, substitutions, and
    adjacent transpositions (optimal string alignment)."""
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    prev2: list[int] = []
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                cur[j] = min(cur[j], prev2[j - 2] + 1)
        prev2, prev = prev, cur
    return prev[lb]


def edits1(word: str) -> set[str]:
    """All strings one edit away from ``word``."""
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [L + R[1:] for L, R in splits if R]
    transposes = [L + R[1] + R[0] + R[2:] for L, R in splits if len(R) > 1]
    replaces = [L + c + R[1:] for L, R in splits if R for c in ALPHABET]
    inserts = [L + c + R for L, R in splits for c in ALPHABET]
    return set(deletes + transposes + replaces + inserts)


def edits2(word: str) -> Iterable[str]:
    return (e2 for e1 in edits1(word) for e2 in edits1(e1))


def known(words: Iterable[str], freqs: WordFrequencyList) -> set[str]:
    return {w for w in words if w in freqs}


def has_close_known_word(token: str, freqs: WordFrequencyList) -> bool:
    """True when some known word lies within edit distance 2 of ``token``."""
    if known(edits1(token), freqs):
        return True
    return bool(known(edits2(token), freqs))


def correct_spelling(token: str, freqs: WordFrequencyList) -> Optional[str]:
    """Best known replacement for ``token``, or None.

    Already-known tokens and tokens with no in-distance candidate return
    None. Distance-1 candidates always beat distance-2 candidates; among
    candidates the highest frequency wins, ties broken alphabetically.
    """
    if len(token) < MIN_TOKEN_LENGTH or token in freqs:
        return None
    candidates = known(edits1(token), freqs) or known(edits2(token), freqs)
    if not candidates:
        return None
    return min(candidates, key=lambda w: (-freqs[w], w))
