"""Static figure rendering for CLI artifacts.

Imported lazily by the CLI so data-only runs never load matplotlib.
Figures are rendered with the Agg backend straight to files; nothing
here affects the CSV/JSON artifacts or their byte-level determinism.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_trajectory_figure(
    samples: Sequence[tuple[float, float, float]],
    path: str | Path,
    title: str = "dual-system trajectory",
) -> None:
    """Position and velocity of an oscillator trajectory versus time."""
    arr = np.asarray(samples, dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(arr[:, 0], arr[:, 1], label="x(t)")
    ax.plot(arr[:, 0], arr[:, 2], label="dx/dt", linestyle="--")
    ax.set_xlabel("t")
    ax.set_title(title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_field_figure(
    rows: Sequence[tuple[float, float, float, float, float]],
    n: int,
    path: str | Path,
    title: str = "boundary-value fields",
) -> None:
    """Heat maps of U, V, and the energy density over the square grid
    emitted by the field sweep (rows ordered y-outer, x-inner)."""
    arr = np.asarray(rows, dtype=float)
    if arr.shape[0] != n * n:
        raise ValueError("save_field_figure: row count does not match grid")
    extent = (
        float(arr[:, 0].min()), float(arr[:, 0].max()),
        float(arr[:, 1].min()), float(arr[:, 1].max()),
    )
    fig, axes = plt.subplots(1, 3, figsize=(12.0, 3.6))
    for ax, column, label in zip(
        axes, (2, 3, 4), ("U", "V", "energy density")
    ):
        grid = arr[:, column].reshape(n, n)
        image = ax.imshow(grid, origin="lower", extent=extent, aspect="auto")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.set_title(label)
        fig.colorbar(image, ax=ax, shrink=0.85)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_profile_figure(
    rows: Sequence[tuple[float, float, float, float, float]],
    path: str | Path,
    title: str = "radial profile",
) -> None:
    """Profile angle f(r) with its X1 representation and energy density."""
    arr = np.asarray(rows, dtype=float)
    fig, (ax_f, ax_h) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    ax_f.plot(arr[:, 0], arr[:, 1], label="f(r)")
    ax_f.plot(arr[:, 0], arr[:, 2], label="X1(r)", linestyle="--")
    ax_f.set_xlabel("r")
    ax_f.legend()
    ax_f.grid(True, alpha=0.3)
    ax_h.plot(arr[:, 0], arr[:, 4], color="tab:red")
    ax_h.set_xlabel("r")
    ax_h.set_ylabel("energy density")
    ax_h.grid(True, alpha=0.3)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
