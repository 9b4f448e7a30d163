"""Corpus ingestion, scoring and the descriptive claim/reply reports.

Claims arrive as JSONL objects {id, text, topic, credibility, retweets,
likes} with credibility "true" or "false"; replies as {claim_id, text}.
Replies referencing unknown claims are skipped (counted, warned once).

All group statistics are macro-averages over claim-level vectors. The
correlation and t-statistic outputs are plain descriptive quantities
(Pearson r, Welch t), not structural path coefficients, and the report
headers say so.
"""

from __future__ import annotations

import csv
import json
import os
import warnings
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .core import EmotionLabel, EmotionVector5, FIELDS5, LABELS5, dominant_from_array
from .errors import CorpusError, EmptyGroupError, InsufficientDataError, ParseWarning
from .lexicon import UnifiedLexicon
from .scoring import DEFAULT_FUZZY_THRESHOLD, ScoreResult, score_text

CREDIBILITIES = ("false", "true")

REPORT_FILES = (
    "emotion_means.csv",
    "pattern.csv",
    "engagement_table.csv",
    "reply_means.csv",
    "correlations.csv",
    "ttests.csv",
)


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    text: str
    topic: str
    credibility: str
    retweets: int
    likes: int


@dataclass(frozen=True)
class ReplyRecord:
    claim_id: str
    text: str


@dataclass(frozen=True)
class Corpus:
    claims: list[ClaimRecord]
    replies: dict[str, list[str]]
    skipped_replies: int


@dataclass(frozen=True)
class ScoredClaim:
    claim: ClaimRecord
    vector: EmotionVector5
    dominant: EmotionLabel
    reply_count: int
    reply_mean: EmotionVector5


@dataclass(frozen=True)
class EngagementRow:
    emotion: EmotionLabel
    credibility: str
    n_claims: int
    avg_retweet: float
    avg_like: float
    avg_reply: float


def _require(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise CorpusError(f"{where}: {msg}")


def _check_count(obj: dict, field: str, where: str) -> int:
    val = obj.get(field)
    if isinstance(val, bool) or not isinstance(val, int):
        raise CorpusError(f"{where}: {field} must be a nonnegative integer, got {val!r}")
    if val < 0:
        raise CorpusError(f"{where}: {field} must be nonnegative, got {val}")
    return val


def load_corpus(claims: Iterable[dict], replies: Iterable[dict] = ()) -> Corpus:
    """Validate records and attach replies to their claims.

    Duplicate claim ids are an error; replies to unknown ids are skipped and
    counted. A reply-less corpus is fine.
    """
    out: list[ClaimRecord] = []
    by_id: dict[str, list[str]] = {}
    for n, obj in enumerate(claims, start=1):
        where = f"claim {n}"
        _require(isinstance(obj, dict), "not an object", where)
        cid = obj.get("id")
        _require(isinstance(cid, str) and cid != "", "id must be a nonempty string", where)
        _require(isinstance(obj.get("text"), str), "text must be a string", where)
        _require(isinstance(obj.get("topic"), str), "topic must be a string", where)
        cred = obj.get("credibility")
        _require(cred in CREDIBILITIES, 'credibility must be "true" or "false"', where)
        if cid in by_id:
            raise CorpusError(f"{where}: duplicate claim id {cid!r}")
        by_id[cid] = []
        out.append(
            ClaimRecord(
                id=cid,
                text=obj["text"],
                topic=obj["topic"],
                credibility=cred,
                retweets=_check_count(obj, "retweets", where),
                likes=_check_count(obj, "likes", where),
            )
        )
    skipped = 0
    for n, obj in enumerate(replies, start=1):
        where = f"reply {n}"
        _require(isinstance(obj, dict), "not an object", where)
        cid = obj.get("claim_id")
        _require(isinstance(cid, str) and cid != "", "claim_id must be a nonempty string", where)
        _require(isinstance(obj.get("text"), str), "text must be a string", where)
        if cid not in by_id:
            skipped += 1
            continue
        by_id[cid].append(obj["text"])
    if skipped:
        warnings.warn(ParseWarning(f"skipped {skipped} replies referencing unknown claim ids"))
    return Corpus(claims=out, replies=by_id, skipped_replies=skipped)


def iter_jsonl(stream: IO[str], what: str = "record") -> Iterable[dict]:
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{what} line {lineno}: invalid JSON ({exc.msg})") from None
        yield obj


def _score_one(
    claim: ClaimRecord,
    reply_texts: list[str],
    lexicon: UnifiedLexicon,
    stoplist: frozenset[str],
    threshold,
) -> ScoredClaim:
    res: ScoreResult = score_text(lexicon, claim.text, stoplist, threshold)
    if reply_texts:
        acc = np.zeros(5)
        for text in reply_texts:
            acc += score_text(lexicon, text, stoplist, threshold).as_array()
        reply_mean = EmotionVector5.from_array(acc / len(reply_texts))
    else:
        reply_mean = EmotionVector5(0.0, 0.0, 0.0, 0.0, 1.0)
    return ScoredClaim(
        claim=claim,
        vector=res.vector,
        dominant=dominant_from_array(res.as_array()),
        reply_count=len(reply_texts),
        reply_mean=reply_mean,
    )


def score_corpus(
    corpus: Corpus,
    lexicon: UnifiedLexicon,
    stoplist: frozenset[str],
    threshold=DEFAULT_FUZZY_THRESHOLD,
    parallelism: int = 1,
) -> list[ScoredClaim]:
    """Score every claim and its replies; output order follows claim order.

    Scoring is a pure function per claim, so any parallelism degree yields
    the same list.
    """
    if parallelism > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            return list(
                pool.map(
                    lambda c: _score_one(c, corpus.replies[c.id], lexicon, stoplist, threshold),
                    corpus.claims,
                )
            )
    return [
        _score_one(c, corpus.replies[c.id], lexicon, stoplist, threshold) for c in corpus.claims
    ]


def mean_emotions(claims: list[ScoredClaim]) -> EmotionVector5:
    """Componentwise arithmetic mean of claim vectors."""
    if not claims:
        raise EmptyGroupError("cannot average an empty group of claims")
    acc = np.zeros(5)
    for sc in claims:
        acc += sc.vector.as_array()
    return EmotionVector5.from_array(acc / len(claims))


def mean_reply_emotions(claims: list[ScoredClaim]) -> tuple[EmotionVector5 | None, int]:
    """Mean of reply_mean vectors over claims that actually have replies."""
    withreplies = [sc for sc in claims if sc.reply_count > 0]
    if not withreplies:
        return None, 0
    acc = np.zeros(5)
    for sc in withreplies:
        acc += sc.reply_mean.as_array()
    return EmotionVector5.from_array(acc / len(withreplies)), len(withreplies)


def partition_by_dominant(claims: list[ScoredClaim]) -> dict[EmotionLabel, list[ScoredClaim]]:
    """Disjoint buckets keyed by dominant emotion; every label gets a bucket."""
    buckets: dict[EmotionLabel, list[ScoredClaim]] = {lab: [] for lab in LABELS5}
    for sc in claims:
        buckets[sc.dominant].append(sc)
    return buckets


def engagement_table(claims: list[ScoredClaim]) -> list[EngagementRow]:
    """Mean engagement per (dominant emotion, credibility) group.

    Means are exact sum/count; rows follow canonical emotion order with
    false before true, and empty groups are not emitted.
    """
    buckets = partition_by_dominant(claims)
    rows: list[EngagementRow] = []
    for lab in LABELS5:
        for cred in CREDIBILITIES:
            group = [sc for sc in buckets[lab] if sc.claim.credibility == cred]
            if not group:
                continue
            n = len(group)
            rows.append(
                EngagementRow(
                    emotion=lab,
                    credibility=cred,
                    n_claims=n,
                    avg_retweet=sum(sc.claim.retweets for sc in group) / n,
                    avg_like=sum(sc.claim.likes for sc in group) / n,
                    avg_reply=sum(sc.reply_count for sc in group) / n,
                )
            )
    return rows


def pearson_r(x, y) -> float | None:
    """Plain Pearson correlation; None when either column is constant."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    if x.size != y.size or x.size < 2:
        raise InsufficientDataError("pearson_r needs two columns of length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return None
    return float(dx @ dy / np.sqrt(sxx * syy))


def claim_reply_correlation(claims: list[ScoredClaim]) -> tuple[list[tuple[str, float | None]], int]:
    """Per-dimension Pearson r between claim scores and their reply means.

    Only claims with at least one reply participate. Constant dimensions
    report None (printed as "undefined").
    """
    usable = [sc for sc in claims if sc.reply_count > 0]
    if len(usable) < 2:
        raise InsufficientDataError(
            f"claim/reply correlation needs >= 2 claims with replies, got {len(usable)}"
        )
    cmat = np.array([sc.vector.as_array() for sc in usable])
    rmat = np.array([sc.reply_mean.as_array() for sc in usable])
    out = []
    for d, name in enumerate(FIELDS5):
        out.append((name, pearson_r(cmat[:, d], rmat[:, d])))
    return out, len(usable)


def welch_t(group_a, group_b) -> tuple[float, float]:
    """Welch t statistic and Welch-Satterthwaite degrees of freedom."""
    a = np.asarray(group_a, float)
    b = np.asarray(group_b, float)
    if a.size < 2 or b.size < 2:
        raise InsufficientDataError("welch_t needs two groups of size >= 2")
    va = float(a.var(ddof=1))
    vb = float(b.var(ddof=1))
    if va == 0.0 and vb == 0.0:
        raise InsufficientDataError("welch_t undefined when both groups have zero variance")
    sa = va / a.size
    sb = vb / b.size
    t = (float(a.mean()) - float(b.mean())) / np.sqrt(sa + sb)
    df = (sa + sb) ** 2 / (sa**2 / (a.size - 1) + sb**2 / (b.size - 1))
    return float(t), float(df)


# ---------------------------------------------------------------------------
# report serialization


def _fmt(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _write_csv(path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x) for x in row])


def _grouped(claims: list[ScoredClaim]):
    """(group, credibility) -> members; groups are "all" plus each topic."""
    topics = sorted({sc.claim.topic for sc in claims})
    for group in ["all"] + topics:
        for cred in CREDIBILITIES:
            members = [
                sc
                for sc in claims
                if sc.claim.credibility == cred and (group == "all" or sc.claim.topic == group)
            ]
            yield group, cred, members


def write_reports(claims: list[ScoredClaim], outdir) -> None:
    """Emit the six report CSVs into ``outdir`` (created if needed)."""
    os.makedirs(outdir, exist_ok=True)

    def join(name):
        return os.path.join(outdir, name)

    rows = []
    for group, cred, members in _grouped(claims):
        if not members:
            continue
        m = mean_emotions(members).as_array()
        rows.append([group, cred, *m, len(members)])
    _write_csv(join("emotion_means.csv"), ["group", "credibility", *FIELDS5, "n"], rows)

    rows = []
    for sc in sorted(claims, key=lambda sc: sc.claim.id):
        rows.append(
            [sc.claim.id, sc.claim.credibility, *sc.vector.as_array(), str(sc.dominant)]
        )
    _write_csv(join("pattern.csv"), ["claim_id", "credibility", *FIELDS5, "dominant"], rows)

    rows = []
    for er in engagement_table(claims):
        rows.append(
            [str(er.emotion), er.credibility, er.n_claims, er.avg_retweet, er.avg_like, er.avg_reply]
        )
    _write_csv(
        join("engagement_table.csv"),
        ["emotion", "credibility", "n_claims", "avg_retweet", "avg_like", "avg_reply"],
        rows,
    )

    rows = []
    for group, cred, members in _grouped(claims):
        if not members:
            continue
        mean, n = mean_reply_emotions(members)
        vals = list(mean.as_array()) if mean is not None else [None] * 5
        rows.append([group, cred, *vals, n])
    _write_csv(join("reply_means.csv"), ["group", "credibility", *FIELDS5, "n"], rows)

    try:
        corr, n = claim_reply_correlation(claims)
    except InsufficientDataError:
        corr = [(name, None) for name in FIELDS5]
        n = sum(1 for sc in claims if sc.reply_count > 0)
    rows = [[name, r, n] for name, r in corr]
    _write_csv(join("correlations.csv"), ["dimension", "descriptive_pearson_r", "n"], rows)

    false_g = [sc for sc in claims if sc.claim.credibility == "false"]
    true_g = [sc for sc in claims if sc.claim.credibility == "true"]
    metrics: list[tuple[str, list, list]] = [
        ("retweets", [sc.claim.retweets for sc in false_g], [sc.claim.retweets for sc in true_g]),
        ("likes", [sc.claim.likes for sc in false_g], [sc.claim.likes for sc in true_g]),
        ("replies", [sc.reply_count for sc in false_g], [sc.reply_count for sc in true_g]),
    ]
    for d, name in enumerate(FIELDS5):
        metrics.append(
            (
                name,
                [sc.vector.as_array()[d] for sc in false_g],
                [sc.vector.as_array()[d] for sc in true_g],
            )
        )
    rows = []
    for name, ga, gb in metrics:
        try:
            t, df = welch_t(ga, gb)
        except InsufficientDataError:
            t, df = None, None
        rows.append([name, t, df, len(ga), len(gb)])
    _write_csv(
        join("ttests.csv"),
        ["metric", "descriptive_welch_t", "df", "n_false", "n_true"],
        rows,
    )
