#!/usr/bin/env python3
"""Render analyze-report CSVs into static figure files.

Consumes only the report directory written by ``emofuse analyze`` (the CSV
schemas are the contract) and draws one figure per file:

* emotion_means.csv / reply_means.csv -> grouped bars, five bars per
  (group, credibility) cluster
* engagement_table.csv -> grouped bars of retweet/like/reply averages
* pattern.csv -> per-claim emotion lines
* correlations.csv -> scatter of the per-dimension correlation values

The plot layer never re-aggregates: every plotted value is a CSV cell, rows
whose cells read "undefined" are dropped, and a sha256 of the input CSV is
embedded in the image metadata. Usage:

    python plots/render.py --in REPORT_DIR --out FIG_DIR [--format png|svg]
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import os
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

EMOTIONS = ("anger", "fear", "sadness", "happiness", "neutral")

# filename -> (chart kind, label columns, value columns)
SCHEMAS = {
    "emotion_means.csv": ("grouped-bar", ("group", "credibility"), EMOTIONS),
    "reply_means.csv": ("grouped-bar", ("group", "credibility"), EMOTIONS),
    "engagement_table.csv": (
        "grouped-bar",
        ("emotion", "credibility"),
        ("avg_retweet", "avg_like", "avg_reply"),
    ),
    "pattern.csv": ("pattern-lines", ("claim_id",), EMOTIONS),
    "correlations.csv": ("scatter", ("dimension",), ("descriptive_pearson_r",)),
}

COLORS = {
    "anger": "#c0392b",
    "fear": "#8e44ad",
    "sadness": "#2980b9",
    "happiness": "#f39c12",
    "neutral": "#7f8c8d",
}


class RenderError(Exception):
    pass


@dataclass
class ChartSpec:
    input_csv: str
    kind: str
    output: str
    title: str


@dataclass
class RenderResult:
    """What actually went onto the canvas, for read-back verification."""

    output: str
    labels: list[str]
    series: dict[str, list[float]] = field(default_factory=dict)
    input_sha256: str = ""


def load_table(path: str, label_cols, value_cols):
    """Rows of (labels, values); drops rows with any 'undefined' cell."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            missing = [c for c in (*label_cols, *value_cols) if c not in header]
            if missing:
                raise RenderError(f"{path}: missing columns {missing} (schema mismatch)")
            labels, values = [], []
            for row in reader:
                cells = [row[c] for c in value_cols]
                if any(cell == "undefined" for cell in cells):
                    continue
                try:
                    values.append([float(c) for c in cells])
                except ValueError as exc:
                    raise RenderError(f"{path}: non-numeric cell ({exc})") from None
                labels.append("/".join(row[c] for c in label_cols))
    except OSError as exc:
        raise RenderError(f"cannot read {path}: {exc}") from None
    if not values:
        raise RenderError(f"{path}: no data rows to plot")
    return labels, values


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def build_figure(spec: ChartSpec):
    """Create the figure and report exactly the values that were plotted."""
    name = os.path.basename(spec.input_csv)
    if name not in SCHEMAS:
        raise RenderError(f"no chart schema for {name}")
    kind, label_cols, value_cols = SCHEMAS[name]
    if kind != spec.kind:
        raise RenderError(f"{name} renders as {kind}, not {spec.kind}")
    labels, values = load_table(spec.input_csv, label_cols, value_cols)
    mat = np.array(values)

    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(labels)), 4.5))
    result = RenderResult(output=spec.output, labels=labels)

    if kind == "grouped-bar":
        n_series = len(value_cols)
        x = np.arange(len(labels), dtype=float)
        width = 0.8 / n_series
        for s, col in enumerate(value_cols):
            bars = ax.bar(
                x + (s - (n_series - 1) / 2) * width,
                mat[:, s],
                width,
                label=col,
                color=COLORS.get(col),
            )
            result.series[col] = [p.get_height() for p in bars]
        ax.set_xticks(x)
        ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    elif kind == "pattern-lines":
        x = np.arange(len(labels), dtype=float)
        for s, col in enumerate(value_cols):
            (line,) = ax.plot(x, mat[:, s], marker="o", markersize=3,
                              label=col, color=COLORS.get(col))
            result.series[col] = list(line.get_ydata())
        ax.set_xticks(x[:: max(1, len(x) // 20)])
        ax.set_xticklabels(labels[:: max(1, len(x) // 20)], rotation=60, ha="right", fontsize=7)
    elif kind == "scatter":
        x = np.arange(len(labels), dtype=float)
        for s, col in enumerate(value_cols):
            path_coll = ax.scatter(x, mat[:, s], label=col)
            result.series[col] = [float(v) for _, v in path_coll.get_offsets()]
        ax.set_xticks(x)
        ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
        ax.axhline(0.0, color="#bbbbbb", linewidth=0.8)
    else:
        raise RenderError(f"unknown chart kind {kind}")

    ax.set_title(spec.title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, result


def render(spec: ChartSpec) -> RenderResult:
    fig, result = build_figure(spec)
    result.input_sha256 = _sha256(spec.input_csv)
    try:
        fig.savefig(
            spec.output,
            metadata={"Description": f"input-sha256={result.input_sha256}"},
        )
    finally:
        plt.close(fig)
    return result


def default_specs(indir: str, outdir: str, fmt: str) -> list[ChartSpec]:
    titles = {
        "emotion_means.csv": "Mean claim emotions by group and credibility",
        "reply_means.csv": "Mean reply emotions by group and credibility",
        "engagement_table.csv": "Mean engagement by dominant emotion and credibility",
        "pattern.csv": "Per-claim emotional patterns",
        "correlations.csv": "Claim vs reply-mean correlation (descriptive)",
    }
    specs = []
    for name, (kind, _, _) in SCHEMAS.items():
        out = os.path.join(outdir, name.replace(".csv", f".{fmt}"))
        specs.append(ChartSpec(os.path.join(indir, name), kind, out, titles[name]))
    return specs


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--in", dest="indir", required=True, help="report directory")
    ap.add_argument("--out", dest="outdir", required=True, help="figure directory")
    ap.add_argument("--format", default="png", choices=["png", "svg"])
    args = ap.parse_args(argv)
    os.makedirs(args.outdir, exist_ok=True)
    try:
        for spec in default_specs(args.indir, args.outdir, args.format):
            result = render(spec)
            print(f"wrote {result.output} ({len(result.labels)} rows)")
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
