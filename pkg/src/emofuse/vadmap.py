"""Map VAD triples to four-emotion vectors via cosine similarity to anchors.

The anchor coordinates for happiness, anger, fear and sadness come from the
Russell & Mehrabian dimensional-emotion tables and live on a signed [-1, 1]
scale, while intensity-lexicon VAD entries live on [0, 1]. The default
pipeline therefore recenters raw entries with x -> 2x - 1 before taking
cosines. Passing ``recenter=False`` applies the cosine directly to the raw
coordinates; that variant makes strongly negative words score happiest and
exists only so the two behaviors can be compared.
"""

from __future__ import annotations

import numpy as np

from .core import EmotionVector4, VadVector
from .errors import ScaleError

# Signed VAD anchors, rows in canonical emotion order (anger, fear, sadness,
# happiness) to line up with EmotionVector4 components.
ANCHORS = np.array(
    [
        [-0.51, 0.59, 0.25],   # anger
        [-0.64, 0.60, -0.43],  # fear
        [-0.63, -0.27, -0.33], # sadness
        [0.76, 0.48, 0.35],    # happiness
    ]
)
ANCHORS.setflags(write=False)

_ANCHOR_NORMS = np.linalg.norm(ANCHORS, axis=1)


def recenter_vad(v: VadVector) -> VadVector:
    """Rescale a raw01 triple onto the signed anchor scale via x -> 2x - 1."""
    if v.scale != "raw01":
        raise ScaleError(f"recenter_vad expects raw01 input, got scale {v.scale!r}")
    return VadVector(
        2.0 * v.valence - 1.0, 2.0 * v.arousal - 1.0, 2.0 * v.dominance - 1.0, scale="signed"
    )


def cosine_similarity(a: VadVector, b: VadVector) -> float:
    """dot(a, b) / (|a||b|) for two signed vectors."""
    if a.scale != "signed" or b.scale != "signed":
        raise ScaleError("cosine_similarity expects signed-scale vectors")
    av, bv = a.as_array(), b.as_array()
    na, nb = np.linalg.norm(av), np.linalg.norm(bv)
    if na == 0.0 or nb == 0.0:
        raise ValueError("cosine similarity undefined for a zero vector")
    return float(av @ bv / (na * nb))


def map_vad_batch(raw: np.ndarray, recenter: bool = True) -> np.ndarray:
    """Map an (n, 3) raw01 matrix to an (n, 4) emotion matrix.

    Per row: recenter (unless disabled), take the cosine against each anchor,
    clamp negatives to zero and rescale to sum 1. Rows whose cosine profile
    is entirely nonpositive, or whose recentered vector is zero, come back
    all-zero (neutral-degenerate).
    """
    raw = np.asarray(raw, dtype=np.float64)
    if raw.ndim != 2 or raw.shape[1] != 3:
        raise ValueError(f"expected an (n, 3) matrix, got shape {raw.shape}")
    if raw.size and (raw.min() < 0.0 or raw.max() > 1.0):
        raise ValueError("raw01 VAD components must lie in [0, 1]")
    pts = 2.0 * raw - 1.0 if recenter else raw
    # Elementwise expressions instead of a BLAS matmul: dgemm may round
    # differently per batch size, and scalar/batch results must be
    # bit-identical for deterministic outputs.
    v0, v1, v2 = pts[:, 0], pts[:, 1], pts[:, 2]
    norms = np.sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    ok = norms > 0.0
    out = np.zeros((raw.shape[0], 4))
    if not ok.any():
        return out
    dots = (
        v0[ok, None] * ANCHORS[:, 0]
        + v1[ok, None] * ANCHORS[:, 1]
        + v2[ok, None] * ANCHORS[:, 2]
    )
    cos = dots / (norms[ok, None] * _ANCHOR_NORMS[None, :])
    np.clip(cos, 0.0, None, out=cos)
    sums = cos.sum(axis=1)
    pos = sums > 0.0
    cos[pos] /= sums[pos, None]
    cos[~pos] = 0.0
    out[ok] = cos
    return out


def map_vad_to_emotions(v: VadVector, recenter: bool = True) -> EmotionVector4:
    """Map one raw01 triple to a four-emotion vector (see `map_vad_batch`)."""
    if v.scale != "raw01":
        raise ScaleError(f"map_vad_to_emotions expects raw01 input, got {v.scale!r}")
    row = map_vad_batch(v.as_array()[None, :], recenter=recenter)[0]
    return EmotionVector4.from_array(row)


def anchor_cosines(v: VadVector) -> np.ndarray:
    """Cosine profile of a signed vector against the four anchors."""
    if v.scale != "signed":
        raise ScaleError("anchor_cosines expects a signed vector")
    av = v.as_array()
    n = np.linalg.norm(av)
    if n == 0.0:
        raise ValueError("cosine profile undefined for the zero vector")
    return (ANCHORS @ av) / (n * _ANCHOR_NORMS)


__all__ = [
    "ANCHORS",
    "recenter_vad",
    "cosine_similarity",
    "map_vad_batch",
    "map_vad_to_emotions",
    "anchor_cosines",
]
