import io
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from emofuse.errors import LexiconParseError, ParseWarning
from emofuse.lexicon import RawAffectEntry, RawDmEntry, RawVadEntry, UnifiedLexicon
from emofuse.lexio import (
    parse_depechemood,
    parse_nrc_affect,
    parse_nrc_vad,
    read_unified,
    write_unified,
)

DM_HEADER = "word\tanger\tanticipation\tdisgust\tfear\tjoy\tsadness\tsurprise\ttrust\n"


class TestParseDepechemood:
    def test_deadly_row(self):
        row = DM_HEADER + "deadly\t0.17\t0.05\t0.08\t0.36\t0\t0.21\t0.07\t0.06\n"
        entries = parse_depechemood(io.StringIO(row))
        assert entries == [RawDmEntry("deadly", 0.17, 0.05, 0.08, 0.36, 0.0, 0.21, 0.07, 0.06)]

    def test_empty_stream(self):
        assert parse_depechemood(io.StringIO("")) == []
        assert parse_depechemood(io.StringIO(DM_HEADER)) == []

    def test_wrong_column_count_names_line(self):
        with pytest.raises(LexiconParseError, match="line 2"):
            parse_depechemood(io.StringIO(DM_HEADER + "w\t0.1\t0.1\t0.1\t0.1\t0.1\t0.1\n"))

    def test_score_out_of_range(self):
        with pytest.raises(LexiconParseError, match="outside"):
            parse_depechemood(io.StringIO("w\t1.2\t0\t0\t0\t0\t0\t0\t0\n"))

    def test_non_numeric_score(self):
        with pytest.raises(LexiconParseError, match="non-numeric"):
            parse_depechemood(io.StringIO("w\tx\t0\t0\t0\t0\t0\t0\t0\n"))

    def test_duplicate_keeps_first_and_warns(self):
        text = "w\t0.5\t0\t0\t0\t0\t0\t0\t0\nW\t0.9\t0\t0\t0\t0\t0\t0\t0\n"
        with pytest.warns(ParseWarning):
            entries = parse_depechemood(io.StringIO(text))
        assert len(entries) == 1
        assert entries[0].anger == 0.5

    def test_case_normalized(self):
        upper = parse_depechemood(io.StringIO("DEADLY\t0.1\t0\t0\t0\t0\t0\t0\t0\n"))
        lower = parse_depechemood(io.StringIO("deadly\t0.1\t0\t0\t0\t0\t0\t0\t0\n"))
        assert upper == lower

    def test_bad_header(self):
        with pytest.raises(LexiconParseError, match="header"):
            parse_depechemood(io.StringIO("word\tanger\n"))


class TestParseNrcAffect:
    def test_deadly_pivots_wide(self):
        text = "deadly\tanger\t0.76\ndeadly\tfear\t0.90\ndeadly\tsadness\t0.88\n"
        entries = parse_nrc_affect(io.StringIO(text))
        assert entries == [RawAffectEntry("deadly", anger=0.76, fear=0.90, sadness=0.88, joy=0.0)]

    def test_single_joy_row(self):
        entries = parse_nrc_affect(io.StringIO("w\tjoy\t1.0\n"))
        assert entries == [RawAffectEntry("w", anger=0.0, fear=0.0, sadness=0.0, joy=1.0)]

    def test_unknown_emotion(self):
        with pytest.raises(LexiconParseError, match="disgust"):
            parse_nrc_affect(io.StringIO("w\tdisgust\t0.5\n"))

    def test_duplicate_pair_keeps_first(self):
        text = "w\tanger\t0.3\nw\tanger\t0.9\n"
        with pytest.warns(ParseWarning):
            entries = parse_nrc_affect(io.StringIO(text))
        assert entries[0].anger == 0.3

    def test_score_out_of_range(self):
        with pytest.raises(LexiconParseError):
            parse_nrc_affect(io.StringIO("w\tanger\t1.01\n"))


class TestParseNrcVad:
    def test_deadly(self):
        entries = parse_nrc_vad(io.StringIO("deadly\t0.14\t0.85\t0.55\n"))
        assert entries == [RawVadEntry("deadly", 0.14, 0.85, 0.55)]

    def test_midpoint(self):
        entries = parse_nrc_vad(io.StringIO("calm\t0.5\t0.5\t0.5\n"))
        assert entries == [RawVadEntry("calm", 0.5, 0.5, 0.5)]

    def test_out_of_range(self):
        with pytest.raises(LexiconParseError, match="valence"):
            parse_nrc_vad(io.StringIO("w\t1.2\t0\t0\n"))

    def test_wrong_columns(self):
        with pytest.raises(LexiconParseError, match="4 columns"):
            parse_nrc_vad(io.StringIO("w\t0.5\t0.5\n"))


def roundtrip(lexicon: UnifiedLexicon) -> UnifiedLexicon:
    buf = io.StringIO()
    write_unified(lexicon, buf)
    return read_unified(io.StringIO(buf.getvalue()))


class TestUnifiedRoundTrip:
    def test_empty_lexicon_writes_header_only(self):
        lex = UnifiedLexicon.from_entries([])
        buf = io.StringIO()
        write_unified(lex, buf)
        assert buf.getvalue() == "word\tanger\tfear\tsadness\thappiness\tsource\n"
        assert len(roundtrip(lex)) == 0

    def test_single_entry_bit_identical(self):
        lex = UnifiedLexicon.from_entries([("deadly", [0.2992, 0.3543, 0.3465, 0.0], "AFFECT")])
        back = roundtrip(lex)
        assert back.words == ["deadly"]
        assert np.array_equal(back.vectors, lex.vectors)
        assert back.source_of("deadly") == "AFFECT"

    def test_duplicate_word_on_read_is_error(self):
        text = (
            "word\tanger\tfear\tsadness\thappiness\tsource\n"
            "w\t1.000000\t0.000000\t0.000000\t0.000000\tAFFECT\n"
            "w\t0.000000\t1.000000\t0.000000\t0.000000\tDM\n"
        )
        with pytest.raises(LexiconParseError, match="duplicate"):
            read_unified(io.StringIO(text))

    def test_quantized_roundtrip_is_stable(self, rng):
        # Arbitrary sum-1 vectors quantize once on the first write; after
        # that, read/write cycles are byte-identical.
        from helpers import random_lexicon

        lex = random_lexicon(rng, 60)
        first = io.StringIO()
        write_unified(lex, first)
        back = read_unified(io.StringIO(first.getvalue()))
        second = io.StringIO()
        write_unified(back, second)
        assert second.getvalue() == first.getvalue()
        assert np.allclose(back.vectors, lex.vectors, atol=5e-7)

    def test_bad_row_sum_rejected(self):
        text = (
            "word\tanger\tfear\tsadness\thappiness\tsource\n"
            "w\t0.400000\t0.100000\t0.000000\t0.000000\tVAD\n"
        )
        with pytest.raises(LexiconParseError, match="sum"):
            read_unified(io.StringIO(text))

    def test_missing_header_rejected(self):
        with pytest.raises(LexiconParseError, match="header"):
            read_unified(io.StringIO("w\t1.0\t0\t0\t0\tAFFECT\n"))

    def test_rows_sorted_by_word(self):
        lex = UnifiedLexicon.from_entries(
            [("zebra", [1, 0, 0, 0], "DM"), ("apple", [0, 1, 0, 0], "VAD")]
        )
        buf = io.StringIO()
        write_unified(lex, buf)
        lines = buf.getvalue().splitlines()
        assert lines[1].startswith("apple\t")
        assert lines[2].startswith("zebra\t")


@pytest.mark.parametrize("parser", [parse_depechemood, parse_nrc_affect, parse_nrc_vad, read_unified])
@given(text=st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=300))
@settings(max_examples=150, deadline=None)
def test_parsing_is_total(parser, text):
    # Every stream yields entries or a positioned parse error, never a crash.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ParseWarning)
        try:
            parser(io.StringIO(text))
        except LexiconParseError:
            pass
