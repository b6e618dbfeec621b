"""Embedding provider for fuzzy department matching.

The default provider builds character-trigram TF-IDF vectors over the
canonical department list. Trigrams hash into a fixed-width vector, so any
non-empty text embeds to a non-zero vector and cosine against itself is 1.
The provider interface admits neural embedders as drop-in replacements.
"""
from __future__ import annotations

import math
import zlib
from collections import Counter
from typing import Iterable, Protocol, Sequence

import numpy as np

from .model import normalize_surface

VECTOR_DIM = 8192


class SimilarityProvider(Protocol):
    def embed(self, text: str) -> np.ndarray: ...


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b)) / (na * nb)


def _trigrams(text: str) -> Counter:
    padded = f"  {normalize_surface(text).lower()}  "
    return Counter(padded[i : i + 3] for i in range(len(padded) - 2))


def _bucket(trigram: str) -> int:
    return zlib.crc32(trigram.encode("utf-8")) % VECTOR_DIM


class TrigramTfidfSimilarity:
    """Character-trigram TF-IDF embedder fitted on a name corpus."""

    def __init__(self, corpus: Sequence[str]):
        if not corpus:
            raise ValueError("empty similarity corpus")
        self._n_docs = len(corpus)
        df: Counter = Counter()
        for name in corpus:
            df.update(set(_trigrams(name)))
        self._idf = {
            gram: math.log((1 + self._n_docs) / (1 + count)) + 1.0
            for gram, count in df.items()
        }
        self._default_idf = math.log(1 + self._n_docs) + 1.0

    def embed(self, text: str) -> np.ndarray:
        vec = np.zeros(VECTOR_DIM)
        for gram, count in _trigrams(text).items():
            weight = count * self._idf.get(gram, self._default_idf)
            vec[_bucket(gram)] += weight
        return vec


def best_match(
    provider: SimilarityProvider, surface: str, candidates: Iterable[str]
) -> tuple[str | None, float]:
    """Highest-cosine candidate and its score; ties pick the
    alphabetically smallest candidate."""
    query = provider.embed(surface)
    best_name: str | None = None
    best_score = -1.0
    for name in sorted(candidates):
        score = cosine(query, provider.embed(name))
        if score > best_score:
            best_name, best_score = name, score
    return best_name, max(best_score, 0.0)
