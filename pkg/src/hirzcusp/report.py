"""Figures for census runs, written with the Agg backend."""

from __future__ import annotations

from collections import Counter
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from hirzcusp.bounds import max_cusps  # noqa: E402


def census_figure(records: Iterable, path, title: str | None = None):
    """Bar chart of configurations per cusp count, one panel per genus.

    Each panel marks the cusp bound for its genus with a dashed line, so a
    census that respects the bound keeps every bar to the left of it.
    """
    by_genus: dict[int, Counter] = {}
    for rec in records:
        by_genus.setdefault(rec.g, Counter())[rec.s] += 1
    genera = sorted(by_genus) or [0]
    fig, axes = plt.subplots(len(genera), 1, figsize=(6.4, 2.4 * len(genera) + 0.8),
                             squeeze=False)
    for ax, g in zip(axes[:, 0], genera):
        counts = by_genus.get(g, Counter())
        xs = sorted(counts)
        ax.bar(xs, [counts[x] for x in xs], color="0.45", width=0.7)
        bound = max_cusps(g)
        ax.axvline(bound, color="C3", ls="--", lw=1.2, label=f"bound s <= {bound}")
        ax.set_xlim(-0.7, max([bound] + xs) + 1.5)
        ax.set_ylabel("configurations")
        ax.set_title(f"g = {g}", fontsize=10, loc="left")
        ax.legend(loc="best", fontsize=8, frameon=False)
    axes[-1, 0].set_xlabel("number of cusps s")
    if title:
        fig.suptitle(title, fontsize=11)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
