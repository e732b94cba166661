"""Render analysis results as figures on disk.

Uses the Agg backend so rendering works headless; PNG metadata is pinned so
repeated runs produce identical bytes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .xai.stats import PccMatrix
from .xai.tree import FeatureImportance

_PNG_METADATA = {"Software": "eeq"}


def render_importance_chart(
    importance: FeatureImportance, destination: Union[str, Path], title: str = "Feature importance"
) -> None:
    """Horizontal bar chart of importance weights, largest at the top."""
    names = [name for name, _ in importance.pairs]
    weights = [weight for _, weight in importance.pairs]
    height = max(2.5, 0.35 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    positions = np.arange(len(names))
    ax.barh(positions, weights, color="#3b6ea5")
    ax.set_yticks(positions)
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("importance weight")
    ax.set_title(title)
    for pos, weight in zip(positions, weights):
        ax.text(weight, pos, f" {weight * 100:.2f}%", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(destination, dpi=150, metadata=_PNG_METADATA)
    plt.close(fig)


def render_pcc_heatmap(
    matrix: PccMatrix, destination: Union[str, Path], title: str = "Pearson correlation"
) -> None:
    """Diverging heatmap over [-1, 1]; undefined cells are grey and labeled n/a."""
    grid = np.array(
        [[np.nan if v is None else v for v in row] for row in matrix.values], dtype=np.float64
    )
    n_rows, n_cols = grid.shape
    fig, ax = plt.subplots(figsize=(1.1 * n_cols + 2.5, 0.9 * n_rows + 2.0))
    cmap = plt.get_cmap("RdBu_r").copy()
    cmap.set_bad("#cccccc")
    image = ax.imshow(np.ma.masked_invalid(grid), cmap=cmap, vmin=-1.0, vmax=1.0)
    ax.set_xticks(np.arange(n_cols))
    ax.set_xticklabels(matrix.col_labels, rotation=45, ha="right")
    ax.set_yticks(np.arange(n_rows))
    ax.set_yticklabels(matrix.row_labels)
    for i in range(n_rows):
        for j in range(n_cols):
            value = matrix.values[i][j]
            label = "n/a" if value is None else f"{value:.2f}"
            ax.text(j, i, label, ha="center", va="center", fontsize=8)
    fig.colorbar(image, ax=ax, shrink=0.85)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(destination, dpi=150, metadata=_PNG_METADATA)
    plt.close(fig)
