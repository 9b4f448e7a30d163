import difflib
import os
import string
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from emofuse import gestalt

words = st.text(alphabet=string.ascii_lowercase[:6], min_size=1, max_size=14)


def difflib_total(a, b):
    sm = difflib.SequenceMatcher(None, a, b, autojunk=False)
    return sum(block.size for block in sm.get_matching_blocks())


class TestGestaltSimilarity:
    def test_identical(self):
        assert gestalt.gestalt_similarity("virus", "virus") == 1.0

    def test_abc_abd(self):
        # Longest block "ab" (M=2), remainders disjoint: 2*2/6.
        assert gestalt.gestalt_similarity("abc", "abd") == pytest.approx(2 / 3, abs=1e-4)

    def test_disjoint(self):
        assert gestalt.gestalt_similarity("abc", "xyz") == 0.0

    def test_misspelling(self):
        assert gestalt.gestalt_similarity("deadlyy", "deadly") == pytest.approx(12 / 13)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            gestalt.gestalt_similarity("", "abc")
        with pytest.raises(ValueError):
            gestalt.gestalt_similarity("abc", "")

    @given(words, words)
    @settings(max_examples=300, deadline=None)
    def test_backends_agree(self, a, b):
        assert gestalt._match_total_numba(a, b) == difflib_total(a, b)

    @given(words, words)
    @settings(max_examples=100, deadline=None)
    def test_ratio_bounds(self, a, b):
        r = gestalt.gestalt_similarity(a, b)
        assert 0.0 <= r <= 1.0


class TestBucketKernel:
    def test_matches_scalar_backend(self, rng):
        for _ in range(50):
            length = rng.randint(1, 10)
            qlen = rng.randint(1, 12)
            q = "".join(rng.choice("abcd") for _ in range(qlen))
            bucket_words = [
                "".join(rng.choice("abcd") for _ in range(length)) for _ in range(rng.randint(1, 8))
            ]
            mat = np.array([gestalt.encode(w) for w in bucket_words], np.int32)
            got = gestalt.match_totals_bucket(gestalt.encode(q), mat, bucket_words)
            expected = [difflib_total(q, w) for w in bucket_words]
            assert got.tolist() == expected


@pytest.mark.skipif(not gestalt.NUMBA_ENABLED, reason="numba already disabled")
def test_env_flag_selects_fallback():
    code = (
        "from emofuse import gestalt; "
        "assert not gestalt.NUMBA_ENABLED; "
        "print(gestalt.match_total('deadlyy', 'deadly'))"
    )
    env = dict(os.environ, EMOFUSE_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "6"
