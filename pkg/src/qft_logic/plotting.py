"""Matplotlib renderings for the CLI report paths.

Figures are written straight to files with the non-interactive Agg backend.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# Fixed metadata keeps PNG bytes stable between runs.
_SAVE_KW = {"metadata": {"Software": None}, "dpi": 120}


def _style(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.tick_params(labelsize=8)


def truth_table_figure(reports: Sequence, path) -> None:
    """One panel per gate: measured vs expected output for every input row."""
    fig, axes = plt.subplots(
        1, len(reports), figsize=(2.2 * len(reports) + 0.6, 3.2), squeeze=False
    )
    for ax, report in zip(axes[0], reports):
        rows = report.rows
        grid = np.array(
            [[-1 if r.measured is None else r.measured, r.expected] for r in rows],
            dtype=float,
        )
        ax.imshow(grid, cmap="Greys", vmin=-1, vmax=1, aspect="auto")
        ax.set_xticks([0, 1], ["c", "expected"])
        ax.set_yticks(range(len(rows)), [r.input for r in rows])
        for i, r in enumerate(rows):
            if not r.match:
                ax.add_patch(plt.Rectangle((-0.5, i - 0.5), 2, 1, fill=False, ec="red", lw=2))
        status = "pass" if report.passed else "FAIL"
        ax.set_title(f"{report.gate.value.upper()} (N={report.n}) {status}", fontsize=9)
        ax.tick_params(labelsize=7)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def histogram_figure(counts: dict[str, int], path, title: str = "") -> None:
    keys = sorted(counts)
    fig, ax = plt.subplots(figsize=(max(3.0, 0.5 * len(keys) + 2), 2.8))
    ax.bar(keys, [counts[k] for k in keys], color="0.35")
    ax.set_xlabel("classical register (c[n-1]..c[0])", fontsize=8)
    ax.set_ylabel("counts", fontsize=8)
    if title:
        ax.set_title(title, fontsize=9)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def state_figure(probabilities: np.ndarray, num_qubits: int, path, title: str = "") -> None:
    labels = [format(i, f"0{num_qubits}b") for i in range(len(probabilities))]
    fig, ax = plt.subplots(figsize=(max(3.0, 0.35 * len(labels) + 2), 2.8))
    ax.bar(labels, probabilities, color="0.35")
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("probability", fontsize=8)
    if len(labels) > 8:
        ax.tick_params(axis="x", labelrotation=90)
    if title:
        ax.set_title(title, fontsize=9)
    _style(ax)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
