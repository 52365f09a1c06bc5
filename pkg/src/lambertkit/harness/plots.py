"""PNG figures for reports and benchmarks (matplotlib, Agg backend)."""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .catalog import STATUSES  # noqa: E402
from .dsl import evaluate  # noqa: E402

COLORS = {"verified": "#3a7d44", "erratum": "#d08c23", "unresolved": "#b03a2e"}


def status_counts(report, path) -> Path:
    path = Path(path)
    counts = report.counts
    fig, ax = plt.subplots(figsize=(5, 3.2))
    bars = ax.bar(list(STATUSES), [counts[s] for s in STATUSES], color=[COLORS[s] for s in STATUSES])
    ax.bar_label(bars)
    ax.set_ylabel("records")
    ax.set_title("Catalog adjudication")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _floats(text: str, N: int) -> list:
    s = evaluate(text, N)
    return [float(s[k]) for k in range(N + 1)]


def erratum_panels(report, records, path, limit: int = 12, span: int = 16) -> Path:
    """Printed left and right coefficients of each erratum record, up to ``q^span``."""
    path = Path(path)
    by_id = {r.id: r for r in records}
    chosen = [r for r in report.results if r.status == "erratum" and r.id in by_id][:limit]
    cols = 3
    rows = max(1, math.ceil(len(chosen) / cols))
    fig, axes = plt.subplots(rows, cols, figsize=(4 * cols, 2.6 * rows), squeeze=False)
    for ax in axes.flat:
        ax.set_visible(False)
    for ax, res in zip(axes.flat, chosen):
        rec = by_id[res.id]
        N = min(span, res.order)
        ax.set_visible(True)
        try:
            ax.plot(_floats(rec.lhs, N), "o-", ms=3, label="printed lhs")
            ax.plot(_floats(rec.rhs, N), "x--", ms=4, label="printed rhs")
        except Exception as e:  # a side that cannot be drawn is noted, not fatal
            ax.text(0.5, 0.5, type(e).__name__, ha="center", transform=ax.transAxes)
        if isinstance(res.mismatch_index, int):
            ax.axvline(res.mismatch_index, color="grey", lw=0.8, ls=":")
        ax.set_title(f"{res.id}: reading {res.reading}", fontsize=9)
        ax.tick_params(labelsize=7)
    if chosen:
        axes.flat[0].legend(fontsize=7)
    fig.suptitle("Erratum records: printed coefficients (dotted line = first mismatch)", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def bench_timings(rows, path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3.4))
    for name in sorted({r.strategy for r in rows}):
        pts = [(r.N, r.seconds) for r in rows if r.strategy == name and r.seconds]
        if pts:
            xs, ys = zip(*pts)
            ax.plot(xs, ys, "o-", label=name)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("N")
    ax.set_ylabel("seconds")
    ax.set_title("(f*1)(n), n <= N")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
