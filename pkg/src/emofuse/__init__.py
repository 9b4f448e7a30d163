"""emofuse: lexicon-fusion emotion scoring for claims and replies.

Three emotion lexicons with incompatible representations (four-emotion
intensities, eight-dimension news scores, VAD triples) are merged into a
single word -> (anger, fear, sadness, happiness) map. Texts are scored by
averaging per-word vectors with a neutral dimension for everything the
lexicon cannot explain, and claim/reply corpora are aggregated into
per-credibility descriptive reports.
"""

__version__ = "0.1.0"

from .core import (
    EmotionLabel,
    EmotionVector4,
    EmotionVector5,
    VadVector,
    dominant_emotion,
    normalize_sum1,
)
from .gestalt import gestalt_similarity
from .lexicon import (
    RawAffectEntry,
    RawDmEntry,
    RawVadEntry,
    UnifiedLexicon,
    merge,
    normalize_affect,
    project_depechemood,
)
from .lexio import (
    parse_depechemood,
    parse_nrc_affect,
    parse_nrc_vad,
    read_unified,
    write_unified,
)
from .scoring import (
    ScoreResult,
    fuzzy_lookup,
    load_stopwords,
    remove_stopwords,
    score_text,
    tokenize,
)
from .vadmap import cosine_similarity, map_vad_to_emotions, recenter_vad

__all__ = [
    "EmotionLabel",
    "EmotionVector4",
    "EmotionVector5",
    "VadVector",
    "dominant_emotion",
    "normalize_sum1",
    "gestalt_similarity",
    "RawAffectEntry",
    "RawDmEntry",
    "RawVadEntry",
    "UnifiedLexicon",
    "merge",
    "normalize_affect",
    "project_depechemood",
    "parse_depechemood",
    "parse_nrc_affect",
    "parse_nrc_vad",
    "read_unified",
    "write_unified",
    "ScoreResult",
    "fuzzy_lookup",
    "load_stopwords",
    "remove_stopwords",
    "score_text",
    "tokenize",
    "cosine_similarity",
    "map_vad_to_emotions",
    "recenter_vad",
]
