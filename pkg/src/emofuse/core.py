"""Emotion value types, sum-1 normalization and dominant-emotion selection.

The four-emotion vector spans anger, fear, sadness and happiness; the
five-emotion vector adds a neutral dimension. Canonical component order is
exactly that listing order everywhere in the package, and ties are always
broken by it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

SUM_TOL = 1e-9


class EmotionLabel(enum.Enum):
    """The five emotion labels in canonical (tie-breaking) order."""

    ANGER = "anger"
    FEAR = "fear"
    SADNESS = "sadness"
    HAPPINESS = "happiness"
    NEUTRAL = "neutral"

    def __str__(self) -> str:
        return self.value


# Canonical orderings used for array layouts.
LABELS4 = (EmotionLabel.ANGER, EmotionLabel.FEAR, EmotionLabel.SADNESS, EmotionLabel.HAPPINESS)
LABELS5 = LABELS4 + (EmotionLabel.NEUTRAL,)
FIELDS4 = tuple(lab.value for lab in LABELS4)
FIELDS5 = tuple(lab.value for lab in LABELS5)


def normalize_sum1(values) -> np.ndarray:
    """Rescale a nonnegative vector so its components sum to 1.

    An all-zero input is legal and returned unchanged: the all-zero vector is
    the "neutral-degenerate" value, meaning no emotional signal. Anything
    with a negative component is rejected.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.size and float(v.min()) < 0.0:
        raise ValueError(f"normalize_sum1 requires nonnegative components, got {values!r}")
    s = float(v.sum())
    if s == 0.0:
        return np.zeros_like(v)
    return v / s


@dataclass(frozen=True)
class EmotionVector4:
    """Intensities over (anger, fear, sadness, happiness).

    Either the components sum to 1 (within ``SUM_TOL`` for freshly computed
    vectors, a little looser for the 6-decimal file format) or the vector is
    all-zero / neutral-degenerate. Never anything in between.
    """

    anger: float
    fear: float
    sadness: float
    happiness: float

    def __post_init__(self):
        for name in FIELDS4:
            x = getattr(self, name)
            if not 0.0 <= x <= 1.0:
                raise ValueError(f"{name} component {x!r} outside [0, 1]")

    @classmethod
    def from_array(cls, arr) -> "EmotionVector4":
        a = np.asarray(arr, dtype=np.float64)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.anger, self.fear, self.sadness, self.happiness])

    @property
    def is_neutral_degenerate(self) -> bool:
        return self.anger == self.fear == self.sadness == self.happiness == 0.0

    def check_sum(self, tol: float = SUM_TOL) -> None:
        """Assert the sum-1-or-all-zero contract at the given tolerance."""
        if self.is_neutral_degenerate:
            return
        s = self.anger + self.fear + self.sadness + self.happiness
        if abs(s - 1.0) > tol:
            raise ValueError(f"component sum {s!r} is neither 1 (tol {tol}) nor all-zero")

    def extend_neutral(self) -> "EmotionVector5":
        """Lift to five dimensions: degenerate vectors become pure neutral."""
        if self.is_neutral_degenerate:
            return EmotionVector5(0.0, 0.0, 0.0, 0.0, 1.0)
        return EmotionVector5(self.anger, self.fear, self.sadness, self.happiness, 0.0)


@dataclass(frozen=True)
class EmotionVector5:
    """Proportions over (anger, fear, sadness, happiness, neutral); sums to 1."""

    anger: float
    fear: float
    sadness: float
    happiness: float
    neutral: float

    def __post_init__(self):
        for name in FIELDS5:
            x = getattr(self, name)
            if x < 0.0:
                raise ValueError(f"{name} component {x!r} is negative")

    @classmethod
    def from_array(cls, arr) -> "EmotionVector5":
        a = np.asarray(arr, dtype=np.float64)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]), float(a[4]))

    def as_array(self) -> np.ndarray:
        return np.array([self.anger, self.fear, self.sadness, self.happiness, self.neutral])

    def check_sum(self, tol: float = SUM_TOL) -> None:
        s = sum(getattr(self, name) for name in FIELDS5)
        if abs(s - 1.0) > tol:
            raise ValueError(f"component sum {s!r} differs from 1 beyond tol {tol}")


@dataclass(frozen=True)
class VadVector:
    """A valence/arousal/dominance triple with its scale tag.

    ``raw01`` components live in [0, 1] (the intensity-lexicon convention),
    ``signed`` components in [-1, 1] (the anchor convention).
    """

    valence: float
    arousal: float
    dominance: float
    scale: str = "raw01"

    def __post_init__(self):
        if self.scale not in ("raw01", "signed"):
            raise ValueError(f"unknown VAD scale {self.scale!r}")
        lo = 0.0 if self.scale == "raw01" else -1.0
        for name in ("valence", "arousal", "dominance"):
            x = getattr(self, name)
            if not lo <= x <= 1.0:
                raise ValueError(f"{name} component {x!r} outside [{lo}, 1] for scale {self.scale}")

    def as_array(self) -> np.ndarray:
        return np.array([self.valence, self.arousal, self.dominance])


def dominant_emotion(v: EmotionVector5) -> EmotionLabel:
    """Label with the maximal component; first maximum in canonical order wins."""
    return LABELS5[int(np.argmax(v.as_array()))]


def dominant_from_array(arr) -> EmotionLabel:
    """`dominant_emotion` over a raw length-5 array in canonical order."""
    return LABELS5[int(np.argmax(np.asarray(arr)))]
