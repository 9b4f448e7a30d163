"""Parsers for the three source lexicon formats and the unified lexicon TSV.

Canonical input formats (published distributions that differ must be
converted first, see README):

* eight-dimension news lexicon: TSV with header
  ``word anger anticipation disgust fear joy sadness surprise trust``
* affect-intensity lexicon: long-format TSV ``word<TAB>emotion<TAB>score``
  with emotion in {anger, fear, sadness, joy}, no header
* VAD lexicon: TSV ``word<TAB>valence<TAB>arousal<TAB>dominance``, no header
* unified lexicon: TSV with header
  ``word anger fear sadness happiness source``, 6-decimal fixed point,
  UTF-8, LF line endings, rows sorted by word

Every parser lowercases words, keeps the first occurrence of a duplicate
(with a `ParseWarning`) and raises `LexiconParseError` with a 1-based line
number for malformed rows.
"""

from __future__ import annotations

import warnings
from typing import IO, Iterable

from .errors import LexiconParseError, ParseWarning
from .lexicon import RawAffectEntry, RawDmEntry, RawVadEntry, SOURCES, UnifiedLexicon

DM_HEADER = ("word", "anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust")
UNIFIED_HEADER = ("word", "anger", "fear", "sadness", "happiness", "source")
AFFECT_EMOTIONS = ("anger", "fear", "sadness", "joy")

# Sum tolerance for unified rows: four components each quantized to six
# decimals can drift the sum by up to 2e-6 from the computed value.
FILE_SUM_TOL = 5e-6


def _rows(stream: IO[str]) -> Iterable[tuple[int, list[str]]]:
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            continue
        yield lineno, line.split("\t")


def _score(field: str, lineno: int, what: str) -> float:
    try:
        x = float(field)
    except ValueError:
        raise LexiconParseError(f"non-numeric {what} {field!r}", lineno) from None
    if not 0.0 <= x <= 1.0:
        raise LexiconParseError(f"{what} {x!r} outside [0, 1]", lineno)
    return x


def parse_depechemood(stream: IO[str]) -> list[RawDmEntry]:
    """Parse the eight-dimension TSV; a leading header row is skipped."""
    entries: list[RawDmEntry] = []
    seen: set[str] = set()
    for lineno, fields in _rows(stream):
        if lineno == 1 and fields[0].strip().lower() == "word":
            got = tuple(f.strip().lower() for f in fields)
            if got != DM_HEADER:
                raise LexiconParseError(f"unexpected header {got!r}", lineno)
            continue
        if len(fields) != 9:
            raise LexiconParseError(f"expected 9 columns, got {len(fields)}", lineno)
        word = fields[0].strip().lower()
        if not word:
            raise LexiconParseError("empty word", lineno)
        scores = [_score(f, lineno, "score") for f in fields[1:]]
        if word in seen:
            warnings.warn(ParseWarning(f"line {lineno}: duplicate word {word!r}, keeping first"))
            continue
        seen.add(word)
        entries.append(RawDmEntry(word, *scores))
    return entries


def parse_nrc_affect(stream: IO[str]) -> list[RawAffectEntry]:
    """Parse long-format affect rows and pivot them to wide entries."""
    scores: dict[str, dict[str, float]] = {}
    order: list[str] = []
    for lineno, fields in _rows(stream):
        if len(fields) != 3:
            raise LexiconParseError(f"expected 3 columns, got {len(fields)}", lineno)
        word = fields[0].strip().lower()
        emotion = fields[1].strip().lower()
        if not word:
            raise LexiconParseError("empty word", lineno)
        if emotion not in AFFECT_EMOTIONS:
            raise LexiconParseError(f"unknown emotion {emotion!r}", lineno)
        value = _score(fields[2], lineno, "score")
        if word not in scores:
            scores[word] = {}
            order.append(word)
        if emotion in scores[word]:
            warnings.warn(
                ParseWarning(f"line {lineno}: duplicate ({word!r}, {emotion!r}), keeping first")
            )
            continue
        scores[word][emotion] = value
    return [RawAffectEntry(word=w, **scores[w]) for w in order]


def parse_nrc_vad(stream: IO[str]) -> list[RawVadEntry]:
    """Parse VAD rows on the raw [0, 1] scale."""
    entries: list[RawVadEntry] = []
    seen: set[str] = set()
    for lineno, fields in _rows(stream):
        if len(fields) != 4:
            raise LexiconParseError(f"expected 4 columns, got {len(fields)}", lineno)
        word = fields[0].strip().lower()
        if not word:
            raise LexiconParseError("empty word", lineno)
        vad = [_score(f, lineno, c) for f, c in zip(fields[1:], ("valence", "arousal", "dominance"))]
        if word in seen:
            warnings.warn(ParseWarning(f"line {lineno}: duplicate word {word!r}, keeping first"))
            continue
        seen.add(word)
        entries.append(RawVadEntry(word, *vad))
    return entries


def write_unified(lexicon: UnifiedLexicon, stream: IO[str]) -> None:
    """Serialize sorted by word, values at 6-decimal fixed point."""
    stream.write("\t".join(UNIFIED_HEADER) + "\n")
    for i, word in enumerate(lexicon.words):
        a, f, s, h = lexicon.vectors[i]
        src = SOURCES[lexicon.sources[i]]
        stream.write(f"{word}\t{a:.6f}\t{f:.6f}\t{s:.6f}\t{h:.6f}\t{src}\n")


def read_unified(stream: IO[str]) -> UnifiedLexicon:
    """Read a unified lexicon file; duplicate words are an error."""
    entries: list[tuple[str, list[float], str]] = []
    seen: set[str] = set()
    header_seen = False
    for lineno, fields in _rows(stream):
        if not header_seen:
            got = tuple(f.strip().lower() for f in fields)
            if got != UNIFIED_HEADER:
                raise LexiconParseError(f"expected header {UNIFIED_HEADER!r}, got {got!r}", lineno)
            header_seen = True
            continue
        if len(fields) != 6:
            raise LexiconParseError(f"expected 6 columns, got {len(fields)}", lineno)
        word = fields[0].strip().lower()
        if not word:
            raise LexiconParseError("empty word", lineno)
        if word in seen:
            raise LexiconParseError(f"duplicate word {word!r}", lineno)
        seen.add(word)
        vec = [_score(f, lineno, name) for f, name in zip(fields[1:5], UNIFIED_HEADER[1:5])]
        total = sum(vec)
        if total != 0.0 and abs(total - 1.0) > FILE_SUM_TOL:
            raise LexiconParseError(f"row sum {total!r} is neither ~1 nor 0", lineno)
        source = fields[5].strip().upper()
        if source not in SOURCES:
            raise LexiconParseError(f"unknown source {source!r}", lineno)
        entries.append((word, vec, source))
    if not header_seen:
        raise LexiconParseError("missing unified lexicon header", 1)
    return UnifiedLexicon.from_entries(entries)
