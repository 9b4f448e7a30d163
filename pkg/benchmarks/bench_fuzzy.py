#!/usr/bin/env python3
"""Benchmark the fuzzy-matching backends: numba kernel vs difflib fallback.

The backend flag is read per call, so both paths can be timed in one
process. Run from the repo root:

    python benchmarks/bench_fuzzy.py [--words 74366] [--queries 300]
"""

import argparse
import random
import string
import time

import numpy as np

from emofuse import gestalt
from emofuse.lexicon import UnifiedLexicon
from emofuse.scoring import fuzzy_lookup, load_stopwords, score_text


def make_lexicon(rng, n_words):
    words = set()
    while len(words) < n_words:
        length = rng.randint(3, 12)
        words.add("".join(rng.choice(string.ascii_lowercase) for _ in range(length)))
    words = sorted(words)
    vectors = np.random.default_rng(7).dirichlet([1.0] * 4, size=n_words)
    return UnifiedLexicon(words, vectors, np.zeros(n_words, np.uint8))


def bench_lookups(lex, queries, label):
    lex._fuzzy_memo.clear()
    start = time.perf_counter()
    hits = sum(1 for q in queries if fuzzy_lookup(lex, q) is not None)
    elapsed = time.perf_counter() - start
    per = elapsed / len(queries) * 1e3
    print(f"{label:28} {elapsed:7.2f} s total  {per:8.3f} ms/lookup  ({hits} hits)")
    return elapsed


def bench_scoring(lex, texts, label):
    lex._fuzzy_memo.clear()
    stop = load_stopwords()
    start = time.perf_counter()
    for t in texts:
        score_text(lex, t, stop)
    elapsed = time.perf_counter() - start
    print(f"{label:28} {elapsed:7.2f} s for {len(texts)} texts "
          f"({len(texts) / elapsed:,.0f} texts/s)")
    return elapsed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=74366)
    ap.add_argument("--queries", type=int, default=300)
    ap.add_argument("--texts", type=int, default=2000)
    args = ap.parse_args()

    rng = random.Random(11)
    print(f"building synthetic lexicon ({args.words} words)...")
    lex = make_lexicon(rng, args.words)
    lex.length_buckets()

    # Unique OOV queries: misspelled lexicon words plus random junk.
    queries = []
    for _ in range(args.queries):
        if rng.random() < 0.7:
            queries.append(rng.choice(lex.words) + rng.choice("abcde"))
        else:
            queries.append("".join(rng.choice("abcdefgh") for _ in range(rng.randint(3, 12))))

    texts = []
    for _ in range(args.texts):
        toks = [rng.choice(lex.words) if rng.random() < 0.9 else rng.choice(queries)
                for _ in range(rng.randint(5, 10))]
        texts.append(" ".join(toks))

    if not gestalt.NUMBA_ENABLED:
        print("numba unavailable or disabled; benchmarking the fallback only\n")
        bench_lookups(lex, queries, "difflib fallback")
        bench_scoring(lex, texts, "difflib scoring")
        return

    gestalt.warmup()
    print(f"\n-- fuzzy lookups ({args.queries} unique OOV tokens, memo cleared) --")
    t_nb = bench_lookups(lex, queries, "numba kernel")
    gestalt.NUMBA_ENABLED = False
    try:
        t_py = bench_lookups(lex, queries, "difflib fallback")
    finally:
        gestalt.NUMBA_ENABLED = True
    print(f"speedup: {t_py / t_nb:.1f}x")

    print(f"\n-- end-to-end scoring ({args.texts} texts, repeated OOV pool) --")
    t_nb = bench_scoring(lex, texts, "numba scoring")
    gestalt.NUMBA_ENABLED = False
    try:
        t_py = bench_scoring(lex, texts, "difflib scoring")
    finally:
        gestalt.NUMBA_ENABLED = True
    print(f"speedup: {t_py / t_nb:.1f}x")


if __name__ == "__main__":
    main()
