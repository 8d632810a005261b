"""Report figures, rendered to files next to the delimited output."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_ambiguity_histogram(histogram: Mapping[int, int], path: str | Path) -> str:
    """Bar chart of tokens per analysis count; 0 marks unanalyzable tokens."""
    path = Path(path)
    keys = sorted(histogram)
    values = [histogram[k] for k in keys]
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar([str(k) for k in keys], values, color="#4878a8")
    ax.bar_label(bars, padding=2)
    ax.set_xlabel("analyses per token")
    ax.set_ylabel("tokens")
    ax.set_title("Analysis ambiguity")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def save_evidence_chart(rows: Sequence[Mapping], path: str | Path) -> str:
    """Paired bars of isolated vs causative attestations per root."""
    path = Path(path)
    roots = [r["root"] for r in rows]
    isolated = [r["isolated"] for r in rows]
    causative = [r["causative"] for r in rows]
    xs = range(len(roots))
    width = 0.4
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(roots) + 2), 4))
    ax.bar([x - width / 2 for x in xs], isolated, width, label="isolated", color="#4878a8")
    ax.bar([x + width / 2 for x in xs], causative, width, label="causative", color="#d1605e")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(roots, rotation=45, ha="right")
    ax.set_ylabel("attestations")
    ax.set_title("Reclassification evidence")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)
