"""The unified four-emotion lexicon and the three-stage merge that builds it.

Merge precedence: the affect-intensity lexicon is the base; words from the
eight-dimension news lexicon are added when missing (their representation
shortened to anger/fear/sadness/joy); remaining VAD-only words are added via
the anchor-cosine mapping. Every stored vector is sum-1 normalized or
all-zero (neutral-degenerate).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import gestalt
from .core import EmotionVector4, normalize_sum1
from .vadmap import map_vad_batch

SOURCES = ("AFFECT", "DM", "VAD")
_SOURCE_CODE = {name: i for i, name in enumerate(SOURCES)}


@dataclass(frozen=True)
class RawDmEntry:
    """One row of the eight-dimension news lexicon (scores in [0, 1])."""

    word: str
    anger: float
    anticipation: float
    disgust: float
    fear: float
    joy: float
    sadness: float
    surprise: float
    trust: float


@dataclass(frozen=True)
class RawAffectEntry:
    """One pivoted affect-intensity entry; absent emotions are 0."""

    word: str
    anger: float = 0.0
    fear: float = 0.0
    sadness: float = 0.0
    joy: float = 0.0


@dataclass(frozen=True)
class RawVadEntry:
    """One VAD lexicon row on the raw [0, 1] scale."""

    word: str
    valence: float
    arousal: float
    dominance: float


class UnifiedLexicon:
    """Immutable word -> (four-emotion vector, source) map, sorted by word.

    Vectors live in one (n, 4) float64 block so corpus scoring and fuzzy
    search never materialize per-word objects. Length buckets for the fuzzy
    index are built lazily and cached on the instance.
    """

    def __init__(self, words: list[str], vectors: np.ndarray, sources: np.ndarray):
        self.words = words
        self.vectors = vectors
        self.sources = sources
        self.index = {w: i for i, w in enumerate(words)}
        if len(self.index) != len(words):
            raise ValueError("duplicate words in lexicon")
        self._buckets: dict[int, tuple[np.ndarray, np.ndarray, list[str]]] | None = None
        self._fuzzy_memo: dict = {}

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[str, object, str]]) -> "UnifiedLexicon":
        """Build from (word, 4-vector, source) triples; words must be unique."""
        rows = sorted(entries, key=lambda e: e[0])
        words = [w for w, _, _ in rows]
        n = len(words)
        vectors = np.zeros((n, 4))
        sources = np.zeros(n, np.uint8)
        for i, (_, vec, src) in enumerate(rows):
            arr = vec.as_array() if isinstance(vec, EmotionVector4) else np.asarray(vec, float)
            vectors[i] = arr
            sources[i] = _SOURCE_CODE[src]
        return cls(words, vectors, sources)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def row(self, word: str) -> int | None:
        return self.index.get(word)

    def get(self, word: str) -> EmotionVector4 | None:
        i = self.index.get(word)
        if i is None:
            return None
        return EmotionVector4.from_array(self.vectors[i])

    def source_of(self, word: str) -> str | None:
        i = self.index.get(word)
        return None if i is None else SOURCES[self.sources[i]]

    def items(self) -> Iterator[tuple[str, EmotionVector4, str]]:
        for i, w in enumerate(self.words):
            yield w, EmotionVector4.from_array(self.vectors[i]), SOURCES[self.sources[i]]

    def source_counts(self) -> dict[str, int]:
        counts = np.bincount(self.sources, minlength=len(SOURCES))
        return {name: int(counts[i]) for i, name in enumerate(SOURCES)}

    def length_buckets(self) -> dict[int, tuple[np.ndarray, np.ndarray, list[str]]]:
        """length -> (codes matrix (n, length), row indices, words), lazily built.

        Words inside a bucket keep global lexicographic order, so the first
        maximum in a bucket scan is also the lexicographically smallest.
        """
        if self._buckets is None:
            by_len: dict[int, list[int]] = {}
            for i, w in enumerate(self.words):
                by_len.setdefault(len(w), []).append(i)
            buckets = {}
            for length, idx in by_len.items():
                mat = np.zeros((len(idx), length), np.int32)
                for r, i in enumerate(idx):
                    mat[r] = gestalt.encode(self.words[i])
                buckets[length] = (mat, np.array(idx, np.int64), [self.words[i] for i in idx])
            self._buckets = buckets
        return self._buckets


def project_depechemood(e: RawDmEntry) -> EmotionVector4:
    """Shorten an 8-dimension entry to (anger, fear, sadness, joy) and rescale."""
    return EmotionVector4.from_array(normalize_sum1([e.anger, e.fear, e.sadness, e.joy]))


def normalize_affect(e: RawAffectEntry) -> EmotionVector4:
    """Rescale an affect-intensity entry to sum 1 (joy maps to happiness)."""
    return EmotionVector4.from_array(normalize_sum1([e.anger, e.fear, e.sadness, e.joy]))


def merge(
    affect: Iterable[RawAffectEntry],
    dm: Iterable[RawDmEntry],
    vad: Iterable[RawVadEntry],
    recenter: bool = True,
) -> UnifiedLexicon:
    """Three-stage union of the source lexicons with fixed precedence.

    Words present in several sources keep the entry from the earliest stage:
    AFFECT, then DM, then VAD. The result covers exactly the word union.
    """
    merged: dict[str, tuple[np.ndarray, str]] = {}
    for a in affect:
        if a.word not in merged:
            merged[a.word] = (normalize_affect(a).as_array(), "AFFECT")
    for d in dm:
        if d.word not in merged:
            merged[d.word] = (project_depechemood(d).as_array(), "DM")
    # VAD stage is batched through one matrix product; keep first occurrence
    # of any in-stage duplicate.
    seen: set[str] = set()
    todo: list[RawVadEntry] = []
    for v in vad:
        if v.word not in merged and v.word not in seen:
            seen.add(v.word)
            todo.append(v)
    if todo:
        mat = np.array([[v.valence, v.arousal, v.dominance] for v in todo])
        mapped = map_vad_batch(mat, recenter=recenter)
        for v, rowvec in zip(todo, mapped):
            merged[v.word] = (rowvec, "VAD")
    return UnifiedLexicon.from_entries((w, vec, src) for w, (vec, src) in merged.items())
