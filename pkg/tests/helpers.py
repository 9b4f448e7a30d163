"""Shared builders for synthetic lexicons plus independent scoring oracles.

The oracle functions deliberately reimplement lookup and scoring from plain
dicts, stdlib difflib and exact fractions so tests never compare the library
against itself.
"""

import difflib
import string
from fractions import Fraction

import numpy as np

from emofuse.lexicon import UnifiedLexicon


def build_lexicon(entries, source="AFFECT"):
    """UnifiedLexicon from {word: 4-tuple}; vectors must already be valid."""
    return UnifiedLexicon.from_entries(
        (w, np.asarray(v, float), source) for w, v in entries.items()
    )


def random_word(rng, lo=3, hi=10, alphabet=string.ascii_lowercase):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def random_vector4(rng, p_degenerate=0.1):
    if rng.random() < p_degenerate:
        return (0.0, 0.0, 0.0, 0.0)
    raw = [rng.random() for _ in range(4)]
    s = sum(raw)
    return tuple(x / s for x in raw)


def random_lexicon(rng, n, lo=3, hi=10):
    words = set()
    while len(words) < n:
        words.add(random_word(rng, lo, hi))
    return build_lexicon({w: random_vector4(rng) for w in sorted(words)})


def random_entries(rng, n, lo=3, hi=10):
    """Plain {word: 4-tuple} dict for oracle-side use."""
    words = set()
    while len(words) < n:
        words.add(random_word(rng, lo, hi))
    return {w: random_vector4(rng) for w in sorted(words)}


def oracle_ratio(a, b):
    sm = difflib.SequenceMatcher(None, a, b, autojunk=False)
    m = sum(block.size for block in sm.get_matching_blocks())
    return Fraction(2 * m, len(a) + len(b))


def oracle_lookup(entries, token, threshold=Fraction(9, 10)):
    """Exhaustive closest-word search over a plain dict; None when below t."""
    if token in entries:
        return token
    best_word = None
    best_ratio = Fraction(0)
    for w in sorted(entries):
        r = oracle_ratio(token, w)
        if r > best_ratio:
            best_word, best_ratio = w, r
    if best_word is not None and best_ratio > threshold:
        return best_word
    return None


def oracle_score5(entries, tokens, threshold=Fraction(9, 10)):
    """Brute-force mean of per-token five-dimension contributions."""
    k = len(tokens)
    if k == 0:
        return [0.0, 0.0, 0.0, 0.0, 1.0]
    acc = [0.0] * 5
    for tok in tokens:
        w = oracle_lookup(entries, tok, threshold)
        if w is None or all(x == 0.0 for x in entries[w]):
            acc[4] += 1.0
        else:
            for d in range(4):
                acc[d] += entries[w][d]
    return [x / k for x in acc]
