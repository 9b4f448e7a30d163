"""Ratcliff/Obershelp (gestalt) string similarity.

Similarity of two strings is 2M/(|a|+|b|) where M is the total number of
matched characters obtained by recursively taking the longest common
contiguous block and descending into the unmatched left and right remainders.
Block selection follows ``difflib.SequenceMatcher`` (junk handling disabled):
of all maximal blocks, the one starting earliest in ``a``, then earliest in
``b``, wins. The two implementations here are exchangeable:

* a numba ``@njit`` kernel over character-code arrays (the default), and
* a pure-Python path on stdlib ``difflib`` (selected when numba is missing
  or the ``EMOFUSE_NO_NUMBA`` environment variable is set to a truthy value).

Both return the integer M so callers can do exact rational threshold
arithmetic instead of trusting float division.
"""

from __future__ import annotations

import difflib
import os

import numpy as np

_ENV_FLAG = "EMOFUSE_NO_NUMBA"


def _env_disabled() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")


try:
    if _env_disabled():
        raise ImportError("numba disabled via environment")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised via subprocess in tests
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True, nogil=True)
def _match_total_kernel(a, b, j2len, new, stack):
    """Total matched characters of the recursive block decomposition.

    ``j2len``/``new`` are scratch arrays of length >= len(b)+1 and ``stack``
    an (n, 4) int64 scratch with n >= min(len(a), len(b)) + 2. The inner DP
    mirrors difflib's find_longest_match so tie-breaking is identical.
    """
    la = a.shape[0]
    lb = b.shape[0]
    top = 0
    stack[top, 0] = 0
    stack[top, 1] = la
    stack[top, 2] = 0
    stack[top, 3] = lb
    top += 1
    total = 0
    while top > 0:
        top -= 1
        alo = stack[top, 0]
        ahi = stack[top, 1]
        blo = stack[top, 2]
        bhi = stack[top, 3]
        if alo >= ahi or blo >= bhi:
            continue
        besti = alo
        bestj = blo
        bestsize = 0
        for x in range(blo, bhi + 1):
            j2len[x] = 0
        for i in range(alo, ahi):
            for x in range(blo, bhi + 1):
                new[x] = 0
            ai = a[i]
            for j in range(blo, bhi):
                if b[j] == ai:
                    k = j2len[j] + 1
                    new[j + 1] = k
                    if k > bestsize:
                        besti = i - k + 1
                        bestj = j - k + 1
                        bestsize = k
            for x in range(blo, bhi + 1):
                j2len[x] = new[x]
        if bestsize > 0:
            total += bestsize
            stack[top, 0] = alo
            stack[top, 1] = besti
            stack[top, 2] = blo
            stack[top, 3] = bestj
            top += 1
            stack[top, 0] = besti + bestsize
            stack[top, 1] = ahi
            stack[top, 2] = bestj + bestsize
            stack[top, 3] = bhi
            top += 1
    return total


@njit(cache=True, nogil=True)
def _match_totals_bucket(q, bucket, j2len, new, stack, out):
    """M for one query against every row of an equal-length code matrix."""
    n = bucket.shape[0]
    for r in range(n):
        out[r] = _match_total_kernel(q, bucket[r], j2len, new, stack)
    return out


def encode(s: str) -> np.ndarray:
    """Code-point array used by the numba path."""
    return np.array([ord(c) for c in s], dtype=np.int32)


def _match_total_numba(a: str, b: str) -> int:
    ca, cb = encode(a), encode(b)
    lb = cb.shape[0]
    j2len = np.zeros(lb + 1, np.int64)
    new = np.zeros(lb + 1, np.int64)
    stack = np.empty((min(len(a), lb) + 3, 4), np.int64)
    return int(_match_total_kernel(ca, cb, j2len, new, stack))


def _match_total_difflib(a: str, b: str) -> int:
    sm = difflib.SequenceMatcher(None, a, b, autojunk=False)
    return sum(block.size for block in sm.get_matching_blocks())


def match_total(a: str, b: str) -> int:
    """Integer M of the gestalt decomposition, via the active backend."""
    if NUMBA_ENABLED:
        return _match_total_numba(a, b)
    return _match_total_difflib(a, b)


def match_totals_bucket(query_codes: np.ndarray, bucket: np.ndarray, words=None) -> np.ndarray:
    """Vector of M values for one query against an (n, L) code matrix.

    ``words`` carries the decoded bucket rows for the fallback path (the
    difflib engine wants strings, not code arrays).
    """
    n, lb = bucket.shape
    out = np.empty(n, np.int64)
    if NUMBA_ENABLED:
        j2len = np.zeros(lb + 1, np.int64)
        new = np.zeros(lb + 1, np.int64)
        stack = np.empty((min(query_codes.shape[0], lb) + 3, 4), np.int64)
        _match_totals_bucket(query_codes, bucket, j2len, new, stack, out)
        return out
    query = "".join(chr(c) for c in query_codes)
    for r in range(n):
        word = words[r] if words is not None else "".join(chr(c) for c in bucket[r])
        out[r] = _match_total_difflib(query, word)
    return out


def gestalt_similarity(a: str, b: str) -> float:
    """Ratcliff/Obershelp ratio 2M/(|a|+|b|) in [0, 1]."""
    if not a or not b:
        raise ValueError("gestalt_similarity requires nonempty strings")
    return 2.0 * match_total(a, b) / (len(a) + len(b))


def warmup() -> None:
    """Trigger JIT compilation so timed sections exclude compile cost."""
    if NUMBA_ENABLED:
        match_total("warm", "ward")
        match_totals_bucket(encode("warm"), np.array([encode("ward")]), ["ward"])
