"""Report figures. Rendered headless and without metadata, so reruns produce identical bytes."""

from __future__ import annotations

import os
from collections import Counter
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .machine import BudgetExhausted, CertifiedNonHalting, Halted, Machine, RunOutcome  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "svg.hashsalt": "beaverbench",
}


def _save(fig, path: str | os.PathLike) -> None:
    tmp = f"{path}.tmp"
    fig.savefig(tmp, format="png", metadata={"Software": None})
    plt.close(fig)
    os.replace(tmp, path)


def bb_figure(n: int, machines: Sequence[Machine], outcomes: Sequence[RunOutcome],
              path: str | os.PathLike) -> None:
    """Halting-time histogram and how every machine was settled."""
    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.2))
        steps = Counter(o.steps for o in outcomes if isinstance(o, Halted))
        xs = sorted(steps)
        ax1.bar(xs, [steps[x] for x in xs], width=0.8, color="#4c72b0")
        ax1.set_yscale("log")
        ax1.set_xlabel("steps to halt")
        ax1.set_ylabel("machines")
        ax1.set_title(f"{n}-state halting machines")

        kinds: Counter = Counter()
        for o in outcomes:
            if isinstance(o, Halted):
                kinds["halted"] += 1
            elif isinstance(o, CertifiedNonHalting):
                kinds[o.certificate] += 1
            elif isinstance(o, BudgetExhausted):
                kinds["holdout"] += 1
        labels = sorted(kinds, key=lambda k: (-kinds[k], k))
        ax2.barh(range(len(labels)), [kinds[k] for k in labels], color="#55a868")
        ax2.set_yticks(range(len(labels)))
        ax2.set_yticklabels(labels)
        ax2.invert_yaxis()
        ax2.set_xscale("log")
        ax2.set_xlabel("machines")
        ax2.set_title(f"settled {len(machines)} machines")
        fig.tight_layout()
        _save(fig, path)


def census_figure(sizes: Sequence[int], line_counts: Sequence[int],
                  path: str | os.PathLike, title: str = "") -> None:
    """Theorems per shortest-proof size, and proof size against line count."""
    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.2))
        per = Counter(sizes)
        xs = sorted(per)
        ax1.bar(xs, [per[x] for x in xs], width=0.8, color="#4c72b0")
        ax1.set_xlabel("shortest proof (symbols)")
        ax1.set_ylabel("theorems")
        ax1.yaxis.set_major_locator(MaxNLocator(integer=True))
        ax1.set_title(title or "theorem census")

        pairs = Counter(zip(sizes, line_counts))
        pts = sorted(pairs)
        ax2.scatter([p[0] for p in pts], [p[1] for p in pts],
                    s=[8 + 4 * pairs[p] for p in pts], color="#c44e52", alpha=0.7)
        ax2.set_xlabel("shortest proof (symbols)")
        ax2.set_ylabel("lines")
        ax2.yaxis.set_major_locator(MaxNLocator(integer=True))
        fig.tight_layout()
        _save(fig, path)
