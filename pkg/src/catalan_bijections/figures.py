"""Matplotlib figures written next to the verify report.

Only ``verify --figures DIR`` imports this module, so matplotlib stays an
optional dependency of the library.
"""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from . import terms  # noqa: E402
from .alpha import alpha  # noqa: E402
from .beta import beta  # noqa: E402
from .model import Family, StaircaseTiling  # noqa: E402
from .verify import catalan, class_counts  # noqa: E402

# PNG metadata would otherwise carry the matplotlib version
_META = {"Software": None}


def draw_tiling(ax, s: StaircaseTiling, highlight: bool = False) -> None:
    """Draw ``s`` with row 1 at the top, one unit per cell."""
    n = s.n
    face = "#f4d6a0" if highlight else "#dfe9f5"
    for r1, c1, r2, c2 in s.rects:
        ax.add_patch(Rectangle((c1 - 1, n - r2), c2 - c1 + 1, r2 - r1 + 1,
                               facecolor=face, edgecolor="black", linewidth=1.2))
    ax.set_xlim(-0.2, n + 0.2)
    ax.set_ylim(-0.2, n + 0.2)
    ax.set_aspect("equal")
    ax.axis("off")


def comparison_figure(n: int = 3):
    """Top row: alpha(T -> S); bottom row: beta; differing columns highlighted."""
    trees = list(terms.enumerate_family(Family.T, n))
    fig, axes = plt.subplots(2, len(trees), figsize=(1.6 * len(trees), 3.4), squeeze=False)
    for j, t in enumerate(trees):
        a, b = alpha("T", "S", t), beta(t)
        draw_tiling(axes[0][j], a, highlight=a != b)
        draw_tiling(axes[1][j], b, highlight=a != b)
    axes[0][0].set_title("alpha", loc="left", fontsize=9)
    axes[1][0].set_title("beta", loc="left", fontsize=9)
    fig.suptitle(f"T -> S at n = {n}", fontsize=10)
    fig.tight_layout()
    return fig


def counts_figure(max_n: int = 12):
    """Stacked root-constructor classes per size against c_n."""
    sizes = list(range(1, max_n + 1))
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    bottom = [0] * len(sizes)
    for op, color in zip(terms.OPS, ("#4c72b0", "#55a868", "#c44e52", "#8172b2")):
        vals = [class_counts(k)[op] for k in sizes]
        ax.bar(sizes, vals, bottom=bottom, label=op, color=color)
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.plot(sizes, [catalan(k) for k in sizes], "k.", label="c_n")
    ax.set_yscale("log")
    ax.set_xlabel("size n")
    ax.set_ylabel("terms")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    return fig


def write_figures(directory: str, max_n: int = 12) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, fig in (("alpha_vs_beta_n3.png", comparison_figure(3)),
                      ("class_counts.png", counts_figure(max_n))):
        path = os.path.join(directory, name)
        fig.savefig(path, dpi=120, metadata=_META)
        plt.close(fig)
        written.append(path)
    return written
