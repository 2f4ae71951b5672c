"""Matplotlib rendering of benchmark timings.

Uses the object-oriented Figure API with the Agg canvas so that nothing
touches pyplot's global state or needs a display.
"""
from __future__ import annotations

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
}

# tableau-ish pair, readable in greyscale
COLORS = {"inverted": "#4e79a7", "grouplist": "#f28e2b"}


def plot_timings(report, path, dpi=150):
    import matplotlib as mpl

    names = [g.name for g in report.groups]
    inv = np.array([g.inverted_total_s for g in report.groups])
    gl = np.array([g.grouplist_total_s for g in report.groups])
    x = np.arange(len(names))
    w = 0.38

    with mpl.rc_context(STYLE):
        fig = Figure(figsize=(max(4.0, 0.75 * len(names) + 1.5), 3.2))
        FigureCanvasAgg(fig)
        ax = fig.add_subplot(1, 1, 1)
        ax.bar(x - w / 2, inv, w, label="Inverted index", color=COLORS["inverted"])
        ax.bar(x + w / 2, gl, w, label="Group-list", color=COLORS["grouplist"])
        pos = np.concatenate([inv, gl])
        pos = pos[pos > 0]
        if pos.size and pos.max() / pos.min() > 100:
            ax.set_yscale("log")
        ax.set_xticks(x)
        ax.set_xticklabels(names)
        ax.set_ylabel(f"total time, {report.groups[0].n_queries} queries (s)")
        ax.set_title(
            f"{report.op} queries, zeta = {report.index.zeta:.3g}, "
            f"{report.index.n_frequent} frequent terms"
        )
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=dpi)
    return path
