import numpy as np
import pytest
from hypothesis import given, strategies as st

from emofuse.core import (
    EmotionLabel,
    EmotionVector4,
    EmotionVector5,
    VadVector,
    dominant_emotion,
    normalize_sum1,
)

nonneg = st.floats(min_value=0.0, max_value=1e6, allow_nan=False)


class TestNormalizeSum1:
    def test_plain_scaling(self):
        out = normalize_sum1([2.0, 2.0, 0.0, 0.0])
        assert np.allclose(out, [0.5, 0.5, 0.0, 0.0])

    def test_zero_vector_is_neutral_degenerate(self):
        out = normalize_sum1([0.0, 0.0, 0.0, 0.0])
        assert not out.any()
        assert EmotionVector4.from_array(out).is_neutral_degenerate

    def test_affect_deadly_row(self):
        # Reference arithmetic: division by the raw intensity sum 2.54.
        out = normalize_sum1([0.76, 0.90, 0.88, 0.0])
        expected = [0.76 / 2.54, 0.90 / 2.54, 0.88 / 2.54, 0.0]
        assert np.allclose(out, expected, atol=1e-12)
        assert out == pytest.approx([0.2992, 0.3543, 0.3465, 0.0], abs=1e-4)

    def test_negative_component_rejected(self):
        with pytest.raises(ValueError):
            normalize_sum1([0.5, -0.1, 0.0, 0.0])

    @given(st.lists(nonneg, min_size=1, max_size=8))
    def test_idempotent(self, values):
        once = normalize_sum1(values)
        twice = normalize_sum1(once)
        assert np.allclose(once, twice, atol=1e-12)

    # Components bounded away from the subnormal range: c*v underflowing to
    # zero breaks the identity in float64 no matter the implementation.
    @given(
        st.lists(
            st.one_of(st.just(0.0), st.floats(min_value=1e-9, max_value=1e6)),
            min_size=1,
            max_size=8,
        ),
        st.floats(min_value=1e-3, max_value=1e3),
    )
    def test_positive_scale_invariant(self, values, c):
        a = normalize_sum1(values)
        b = normalize_sum1([c * v for v in values])
        assert np.allclose(a, b, atol=1e-9)

    @given(st.lists(nonneg, min_size=1, max_size=8))
    def test_output_sums_to_one_or_zero(self, values):
        out = normalize_sum1(values)
        s = float(out.sum())
        assert s == 0.0 or abs(s - 1.0) <= 1e-9


class TestVectors:
    def test_vector4_component_range_enforced(self):
        with pytest.raises(ValueError):
            EmotionVector4(1.2, 0.0, 0.0, 0.0)
        with pytest.raises(ValueError):
            EmotionVector4(-0.1, 0.5, 0.3, 0.3)

    def test_vector4_sum_contract(self):
        EmotionVector4(0.25, 0.25, 0.25, 0.25).check_sum()
        EmotionVector4(0.0, 0.0, 0.0, 0.0).check_sum()
        with pytest.raises(ValueError):
            EmotionVector4(0.5, 0.1, 0.0, 0.0).check_sum()

    def test_extend_neutral(self):
        v = EmotionVector4(0.5, 0.5, 0.0, 0.0).extend_neutral()
        assert v == EmotionVector5(0.5, 0.5, 0.0, 0.0, 0.0)
        degenerate = EmotionVector4(0.0, 0.0, 0.0, 0.0).extend_neutral()
        assert degenerate == EmotionVector5(0.0, 0.0, 0.0, 0.0, 1.0)

    def test_vad_scale_validation(self):
        VadVector(0.0, 1.0, 0.5)
        VadVector(-1.0, 1.0, 0.0, scale="signed")
        with pytest.raises(ValueError):
            VadVector(-0.2, 0.5, 0.5)  # negative on raw01
        with pytest.raises(ValueError):
            VadVector(0.5, 0.5, 0.5, scale="bogus")


class TestDominantEmotion:
    def test_deadly_vector(self):
        v = EmotionVector5(0.4583, 0.3997, 0.1419, 0.0, 0.0)
        assert dominant_emotion(v) is EmotionLabel.ANGER

    def test_tie_break_follows_canonical_order(self):
        v = EmotionVector5(0.25, 0.25, 0.25, 0.25, 0.0)
        assert dominant_emotion(v) is EmotionLabel.ANGER
        v = EmotionVector5(0.0, 0.3, 0.3, 0.3, 0.1)
        assert dominant_emotion(v) is EmotionLabel.FEAR

    def test_pure_neutral(self):
        assert dominant_emotion(EmotionVector5(0, 0, 0, 0, 1)) is EmotionLabel.NEUTRAL

    def test_deterministic(self):
        v = EmotionVector5(0.2, 0.2, 0.2, 0.2, 0.2)
        assert dominant_emotion(v) is dominant_emotion(v)

    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=4, max_size=4))
    def test_argmax_invariant_under_normalization(self, values):
        # For vectors with a strict maximum, rescaling cannot move the argmax.
        if sum(values) == 0:
            return
        mx = max(values)
        if sum(1 for v in values if v == mx) != 1:
            return
        normalized = normalize_sum1(values)
        raw5 = EmotionVector5(*values, 0.0)
        norm5 = EmotionVector5(*normalized.tolist(), 0.0)
        assert dominant_emotion(raw5) is dominant_emotion(norm5)

    def test_serialized_names_are_lowercase(self):
        assert [str(lab) for lab in EmotionLabel] == [
            "anger",
            "fear",
            "sadness",
            "happiness",
            "neutral",
        ]
