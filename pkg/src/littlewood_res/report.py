"""Figures for the command line: Betti-table heatmaps and Hilbert-function plots.

matplotlib is imported on first use so the rest of the package does not need it.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def betti_heatmap(table, path: str, title: str | None = None) -> None:
    """Save the table as a heatmap: columns are homological degrees, rows are j - i."""
    plt = _pyplot()
    rows = table.rows()
    ncol = max(table.columns()) + 1 if table.entries else 1
    grid = [[table.entries.get((i, i + r), 0) for i in range(ncol)] for r in rows] or [[0]]
    top = max(max(row) for row in grid) or 1

    fig, ax = plt.subplots(figsize=(1.0 + 0.7 * ncol, 1.2 + 0.55 * max(len(rows), 1)))
    ax.imshow(grid, cmap="Blues", vmin=0, vmax=top, aspect="auto")
    for y, row in enumerate(grid):
        for x, v in enumerate(row):
            color = "white" if v > 0.6 * top else "black"
            ax.text(x, y, str(v) if v else ".", ha="center", va="center", fontsize=9, color=color)
    ax.set_xticks(range(ncol))
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([f"{r}" for r in rows])
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("row j - i")
    ax.xaxis.set_ticks_position("top")
    ax.xaxis.set_label_position("top")
    if title:
        ax.set_title(title, fontsize=10, pad=24)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def hilbert_plot(series: dict[str, list[int]], path: str, title: str | None = None, log: bool = True) -> None:
    """Plot one or more Hilbert functions (coefficient lists indexed by degree)."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    for name, values in series.items():
        pts = [(deg, v) for deg, v in enumerate(values) if v]
        if pts:
            ax.plot(*zip(*pts), marker="o", markersize=3, linewidth=1.2, label=name)
    if log:
        ax.set_yscale("log")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.grid(alpha=0.3)
    if len(series) > 1:
        ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
