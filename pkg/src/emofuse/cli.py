"""Command-line entry point.

Subcommands: build-lexicon, map-vad, score, analyze, report. Exit codes:
0 success, 1 input or validation problem, 2 internal error. Diagnostics go
to stderr; data goes to stdout or the declared output files only.

An optional config file (--config) holds ``key = value`` lines (TOML-style
scalars: strings, numbers, true/false; '#' comments). Explicit flags always
override config values.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import __version__
from .analytics import iter_jsonl, load_corpus, score_corpus, write_reports, REPORT_FILES
from .core import EmotionLabel, FIELDS4, FIELDS5, VadVector, dominant_from_array
from .errors import EmofuseError
from .lexicon import merge
from .lexio import (
    parse_depechemood,
    parse_nrc_affect,
    parse_nrc_vad,
    read_unified,
    write_unified,
)
from .scoring import (
    DEFAULT_FUZZY_THRESHOLD,
    as_threshold,
    load_stopwords,
    score_text,
    stopwords_fingerprint,
)
from .vadmap import map_vad_to_emotions


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here is exit 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _version_string() -> str:
    return f"emofuse {__version__} (stopwords sha256:{stopwords_fingerprint()})"


def load_config(path: str) -> dict:
    """Parse the key = value config format."""
    cfg: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise EmofuseError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
                cfg[key] = value[1:-1]
            elif value.lower() in ("true", "false"):
                cfg[key] = value.lower() == "true"
            else:
                try:
                    cfg[key] = int(value)
                except ValueError:
                    try:
                        cfg[key] = float(value)
                    except ValueError:
                        cfg[key] = value
    return cfg


def _resolve(args, cfg: dict, key: str, default=None):
    """Flag value if given, else config value, else default."""
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    if key in cfg:
        return cfg[key]
    return default


def _build_parser() -> _Parser:
    p = _Parser(prog="emofuse", description="Lexicon-fusion emotion scoring for claims and replies")
    p.add_argument("--version", action="version", version=_version_string())
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    def common(sp):
        sp.add_argument("--config", help="optional key=value config file")

    sp = sub.add_parser("build-lexicon", parents=[], help="merge the three source lexicons")
    common(sp)
    sp.add_argument("--affect", help="affect-intensity lexicon TSV (long format)")
    sp.add_argument("--depechemood", help="eight-dimension lexicon TSV (with header)")
    sp.add_argument("--vad", help="VAD lexicon TSV")
    sp.add_argument("--out", help="output unified lexicon TSV")
    sp.add_argument("--no-recenter", action="store_true", default=None,
                    help="map VAD words without recentering onto the signed scale")

    sp = sub.add_parser("map-vad", help="map one VAD triple to the four emotions")
    common(sp)
    sp.add_argument("--valence", type=float, required=True)
    sp.add_argument("--arousal", type=float, required=True)
    sp.add_argument("--dominance", type=float, required=True)
    sp.add_argument("--no-recenter", action="store_true", default=None)

    sp = sub.add_parser("score", help="score text(s) against a unified lexicon")
    common(sp)
    sp.add_argument("--lexicon", help="unified lexicon TSV")
    sp.add_argument("--text", help="score one literal text")
    sp.add_argument("--input", help="JSONL documents to score")
    sp.add_argument("--field", default=None, help="text field name in --input objects (default: text)")
    sp.add_argument("--out", help="output JSONL (default: stdout)")
    sp.add_argument("--stopwords", help="stop-word list file (default: bundled)")
    sp.add_argument("--fuzzy-threshold", default=None, help="similarity threshold in (0,1), default 0.9")

    sp = sub.add_parser("analyze", help="score a claim/reply corpus and write report CSVs")
    common(sp)
    sp.add_argument("--lexicon", help="unified lexicon TSV")
    sp.add_argument("--claims", help="claims JSONL")
    sp.add_argument("--replies", help="replies JSONL (optional)")
    sp.add_argument("--out", help="report directory")
    sp.add_argument("--stopwords", help="stop-word list file (default: bundled)")
    sp.add_argument("--fuzzy-threshold", default=None)
    sp.add_argument("--parallelism", type=int, default=None,
                    help="scoring thread count (default: available cores)")
    sp.add_argument("--no-recenter", action="store_true", default=None,
                    help="accepted for config compatibility; inert on a prebuilt lexicon")

    sp = sub.add_parser("report", help="render report CSVs as markdown")
    common(sp)
    sp.add_argument("--in", dest="indir", help="report directory from analyze")
    sp.add_argument("--format", default="markdown", choices=["markdown"])
    return p


def _round6(x: float) -> float:
    return round(float(x), 6)


def _vec_json(fields, values, extra=None) -> dict:
    obj = {name: _round6(v) for name, v in zip(fields, values)}
    if extra:
        obj.update(extra)
    return obj


def _require_arg(value, name: str):
    if value is None:
        raise EmofuseError(f"missing required argument --{name}")
    return value


def _cmd_build_lexicon(args, cfg) -> int:
    affect_path = _require_arg(_resolve(args, cfg, "affect"), "affect")
    dm_path = _require_arg(_resolve(args, cfg, "depechemood"), "depechemood")
    vad_path = _require_arg(_resolve(args, cfg, "vad"), "vad")
    out_path = _require_arg(_resolve(args, cfg, "out"), "out")
    recenter = not _resolve(args, cfg, "no_recenter", False)
    with open(affect_path, encoding="utf-8") as fh:
        affect = parse_nrc_affect(fh)
    with open(dm_path, encoding="utf-8") as fh:
        dm = parse_depechemood(fh)
    with open(vad_path, encoding="utf-8") as fh:
        vad = parse_nrc_vad(fh)
    lex = merge(affect, dm, vad, recenter=recenter)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        write_unified(lex, fh)
    counts = lex.source_counts()
    print(
        f"unified lexicon: {len(lex)} words "
        f"(AFFECT {counts['AFFECT']}, DM {counts['DM']}, VAD {counts['VAD']}) -> {out_path}"
    )
    return 0


def _cmd_map_vad(args, cfg) -> int:
    recenter = not _resolve(args, cfg, "no_recenter", False)
    vec = map_vad_to_emotions(
        VadVector(args.valence, args.arousal, args.dominance, scale="raw01"), recenter=recenter
    )
    five = vec.extend_neutral()
    obj = _vec_json(FIELDS4, vec.as_array(), {"dominant": str(dominant_from_array(five.as_array()))})
    print(json.dumps(obj))
    return 0


def _score_record_json(result, doc_id=None) -> dict:
    obj = {}
    if doc_id is not None:
        obj["id"] = doc_id
    obj.update(_vec_json(FIELDS5, result.as_array()))
    obj["dominant"] = str(dominant_from_array(result.as_array()))
    obj["k"] = result.k
    obj["matched"] = result.matched
    obj["fuzzy"] = result.fuzzy
    return obj


def _cmd_score(args, cfg) -> int:
    lexicon_path = _require_arg(_resolve(args, cfg, "lexicon"), "lexicon")
    text = args.text
    input_path = _resolve(args, cfg, "input")
    if text is None and input_path is None:
        raise EmofuseError("one of --text or --input is required")
    if text is not None and input_path is not None:
        raise EmofuseError("--text and --input are mutually exclusive")
    with open(lexicon_path, encoding="utf-8") as fh:
        lex = read_unified(fh)
    stoplist = load_stopwords(_resolve(args, cfg, "stopwords"))
    threshold = as_threshold(_resolve(args, cfg, "fuzzy_threshold", DEFAULT_FUZZY_THRESHOLD))
    out_path = _resolve(args, cfg, "out")
    sink = open(out_path, "w", encoding="utf-8", newline="") if out_path else sys.stdout
    try:
        if text is not None:
            res = score_text(lex, text, stoplist, threshold)
            sink.write(json.dumps(_score_record_json(res)) + "\n")
        else:
            field = _resolve(args, cfg, "field", "text")
            with open(input_path, encoding="utf-8") as fh:
                for obj in iter_jsonl(fh, "document"):
                    if field not in obj or not isinstance(obj[field], str):
                        raise EmofuseError(f"document missing text field {field!r}")
                    res = score_text(lex, obj[field], stoplist, threshold)
                    sink.write(json.dumps(_score_record_json(res, obj.get("id"))) + "\n")
    finally:
        if out_path:
            sink.close()
    return 0


def _cmd_analyze(args, cfg) -> int:
    lexicon_path = _require_arg(_resolve(args, cfg, "lexicon"), "lexicon")
    claims_path = _require_arg(_resolve(args, cfg, "claims"), "claims")
    out_dir = _require_arg(_resolve(args, cfg, "out"), "out")
    replies_path = _resolve(args, cfg, "replies")
    with open(lexicon_path, encoding="utf-8") as fh:
        lex = read_unified(fh)
    stoplist = load_stopwords(_resolve(args, cfg, "stopwords"))
    threshold = as_threshold(_resolve(args, cfg, "fuzzy_threshold", DEFAULT_FUZZY_THRESHOLD))
    par_value = _resolve(args, cfg, "parallelism")
    parallelism = int(par_value) if par_value is not None else (os.cpu_count() or 1)
    if parallelism < 1:
        raise EmofuseError(f"parallelism must be >= 1, got {parallelism}")
    with open(claims_path, encoding="utf-8") as fh:
        claims = list(iter_jsonl(fh, "claim"))
    if replies_path:
        with open(replies_path, encoding="utf-8") as fh:
            replies = list(iter_jsonl(fh, "reply"))
    else:
        replies = []
    corpus = load_corpus(claims, replies)
    scored = score_corpus(corpus, lex, stoplist, threshold, parallelism=parallelism)
    write_reports(scored, out_dir)
    n_replies = sum(len(v) for v in corpus.replies.values())
    print(
        f"analyzed {len(corpus.claims)} claims, {n_replies} replies "
        f"({corpus.skipped_replies} skipped) -> {out_dir}",
        file=sys.stderr,
    )
    return 0


def _cmd_report(args, cfg) -> int:
    indir = _require_arg(_resolve(args, cfg, "indir"), "in")
    print("# Emotion analysis report")
    print()
    print("All correlation and t statistics below are descriptive quantities.")
    for name in REPORT_FILES:
        path = os.path.join(indir, name)
        if not os.path.exists(path):
            raise EmofuseError(f"missing report file {path}")
        with open(path, encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh))
        print()
        print(f"## {name}")
        print()
        if not rows:
            print("(empty)")
            continue
        header, data = rows[0], rows[1:]
        print("| " + " | ".join(header) + " |")
        print("|" + "|".join(" --- " for _ in header) + "|")
        for row in data:
            print("| " + " | ".join(row) + " |")
    return 0


_COMMANDS = {
    "build-lexicon": _cmd_build_lexicon,
    "map-vad": _cmd_map_vad,
    "score": _cmd_score,
    "analyze": _cmd_analyze,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    cfg = {}
    if getattr(args, "config", None):
        try:
            cfg = load_config(args.config)
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 1
        except EmofuseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    try:
        return _COMMANDS[args.command](args, cfg)
    except (EmofuseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
