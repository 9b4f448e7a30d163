"""Bag-of-words emotion scoring with a fuzzy out-of-vocabulary fallback.

A text is tokenized, stop words are dropped, and every surviving token
contributes one five-dimension vector: lexicon hits (exact, or the closest
word above the similarity threshold) contribute their four-emotion vector
with zero neutral mass, everything else contributes pure neutral. The score
is the arithmetic mean over tokens, re-normalized to sum exactly 1.

Fuzzy search is exhaustive in semantics but served from per-length buckets:
a candidate of length n can only beat the threshold t when
2*min(|a|, n) / (|a| + n) > t, so whole buckets are skipped up front.
Thresholds are exact rationals, which makes the strict ``> 0.9`` boundary
bit-exact instead of float-approximate.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from . import gestalt
from .core import EmotionVector4, EmotionVector5, normalize_sum1
from .lexicon import UnifiedLexicon

DEFAULT_FUZZY_THRESHOLD = Fraction(9, 10)

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_TOKEN_RE = re.compile(r"(?:[^\W_]|')+")


def tokenize(text: str) -> list[str]:
    """Lowercase tokens; URLs and @mentions vanish, '#' only separates."""
    text = text.lower()
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    tokens = []
    for tok in _TOKEN_RE.findall(text):
        tok = tok.strip("'")
        if tok:
            tokens.append(tok)
    return tokens


def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Stop-word set from a file, or the bundled list when no path is given."""
    if path is None:
        text = resources.files("emofuse").joinpath("data/stopwords_en.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    words = set()
    for line in text.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def stopwords_fingerprint() -> str:
    """sha256 of the bundled stop-word list, embedded in the version string."""
    data = resources.files("emofuse").joinpath("data/stopwords_en.txt").read_bytes()
    return hashlib.sha256(data).hexdigest()[:12]


def remove_stopwords(tokens: list[str], stoplist: frozenset[str]) -> list[str]:
    return [t for t in tokens if t not in stoplist]


def as_threshold(value) -> Fraction:
    """Coerce a threshold to an exact Fraction in (0, 1)."""
    if isinstance(value, Fraction):
        t = value
    elif isinstance(value, str):
        t = Fraction(value)
    else:
        # Go through the decimal repr so 0.9 means 9/10, not its binary float.
        t = Fraction(repr(float(value)))
    if not 0 < t < 1:
        raise ValueError(f"fuzzy threshold must lie strictly inside (0, 1), got {value!r}")
    return t


def _bucket_admissible(la: int, lb: int, t: Fraction) -> bool:
    # Upper bound on the ratio for lengths (la, lb) is 2*min/(la+lb); prune
    # the bucket when even that cannot exceed t.
    return 2 * min(la, lb) * t.denominator > t.numerator * (la + lb)


def _fuzzy_search(
    lexicon: UnifiedLexicon, token: str, threshold: Fraction, prefilter: bool = True
) -> tuple[str, int] | None:
    """Best lexicon word strictly above the threshold, or None.

    Returns (word, row). Ties on the exact ratio go to the lexicographically
    smallest word. Results are memoized per lexicon instance.
    """
    key = (token, threshold.numerator, threshold.denominator, prefilter)
    memo = lexicon._fuzzy_memo
    if key in memo:
        return memo[key]
    la = len(token)
    qcodes = gestalt.encode(token)
    best: tuple[str, int, int, int] | None = None  # word, row, M, lb
    for lb in sorted(lexicon.length_buckets()):
        if prefilter and not _bucket_admissible(la, lb, threshold):
            continue
        mat, rows, words = lexicon.length_buckets()[lb]
        totals = gestalt.match_totals_bucket(qcodes, mat, words)
        r = int(np.argmax(totals))
        m = int(totals[r])
        if m == 0:
            continue
        if best is None:
            best = (words[r], int(rows[r]), m, lb)
            continue
        # Exact cross-bucket comparison: 2m/(la+lb) vs 2m'/(la+lb').
        lhs = m * (la + best[3])
        rhs = best[2] * (la + lb)
        if lhs > rhs or (lhs == rhs and words[r] < best[0]):
            best = (words[r], int(rows[r]), m, lb)
    if best is None:
        memo[key] = None
        return None
    word, row, m, lb = best
    hit = (word, row) if 2 * m * threshold.denominator > threshold.numerator * (la + lb) else None
    memo[key] = hit
    return hit


@dataclass(frozen=True)
class LookupHit:
    word: str
    vector: EmotionVector4
    exact: bool


def fuzzy_lookup(
    lexicon: UnifiedLexicon,
    token: str,
    threshold=DEFAULT_FUZZY_THRESHOLD,
    prefilter: bool = True,
) -> LookupHit | None:
    """Exact entry when present, else the closest word above the threshold."""
    if not token:
        raise ValueError("fuzzy_lookup requires a nonempty token")
    row = lexicon.row(token)
    if row is not None:
        return LookupHit(token, EmotionVector4.from_array(lexicon.vectors[row]), True)
    found = _fuzzy_search(lexicon, token, as_threshold(threshold), prefilter)
    if found is None:
        return None
    word, row = found
    return LookupHit(word, EmotionVector4.from_array(lexicon.vectors[row]), False)


@dataclass(frozen=True)
class ScoreResult:
    """Five-dimension score plus per-token bookkeeping for one text."""

    vector: EmotionVector5
    matched: int
    fuzzy: int
    neutral_tokens: int
    k: int

    def as_array(self) -> np.ndarray:
        return self.vector.as_array()


_PURE_NEUTRAL = EmotionVector5(0.0, 0.0, 0.0, 0.0, 1.0)


def score_text(
    lexicon: UnifiedLexicon,
    text: str,
    stoplist: frozenset[str],
    threshold=DEFAULT_FUZZY_THRESHOLD,
    use_fuzzy: bool = True,
) -> ScoreResult:
    """Mean per-token emotion vector of a text, extended with neutrality."""
    t = as_threshold(threshold)
    tokens = remove_stopwords(tokenize(text), stoplist)
    k = len(tokens)
    if k == 0:
        return ScoreResult(_PURE_NEUTRAL, 0, 0, 0, 0)
    acc = np.zeros(5)
    matched = fuzzy = neutral = 0
    vectors = lexicon.vectors
    index = lexicon.index
    for tok in tokens:
        row = index.get(tok)
        if row is not None:
            matched += 1
        elif use_fuzzy:
            found = _fuzzy_search(lexicon, tok, t)
            if found is not None:
                row = found[1]
                fuzzy += 1
        if row is None:
            neutral += 1
            acc[4] += 1.0
            continue
        vec = vectors[row]
        if vec[0] == 0.0 and vec[1] == 0.0 and vec[2] == 0.0 and vec[3] == 0.0:
            acc[4] += 1.0  # neutral-degenerate entry carries no signal
        else:
            acc[:4] += vec
    mean = acc / k
    out = normalize_sum1(mean)
    return ScoreResult(EmotionVector5.from_array(out), matched, fuzzy, neutral, k)
