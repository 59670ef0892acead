"""Figure rendering for scan output.

Optional companions to the CSV emitters: class-region maps as colored
rasters and sweep curves with the brute-force overlay.  Rendering is
headless (Agg) since these are written straight to files by the CLI.
"""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import BoundaryNorm, ListedColormap
from matplotlib.patches import Patch

CODE_ORDER = ["SKIP", "ANY", "SZ", "SX", "SE", "SQ", "BOUNDARY"]
CODE_COLORS = {
    "SKIP": "0.92",
    "ANY": "tab:purple",
    "SZ": "tab:red",
    "SX": "tab:green",
    "SE": "tab:blue",
    "SQ": "tab:orange",
    "BOUNDARY": "black",
}


def _code_image(records, n_rows, n_cols):
    index = {code: i for i, code in enumerate(CODE_ORDER)}
    values = np.array([index[rec.code] for rec in records], dtype=float)
    return values.reshape(n_rows, n_cols)


def _legend_for(records, ax):
    present = []
    for code in CODE_ORDER:
        if any(rec.code == code for rec in records):
            present.append(Patch(facecolor=CODE_COLORS[code], label=code))
    ax.legend(handles=present, loc="upper right", fontsize=8, framealpha=0.9)


def _draw_map(records, n_rows, n_cols, x_lo, x_hi, y_lo, y_hi, xlabel, path):
    img = _code_image(records, n_rows, n_cols)
    cmap = ListedColormap([CODE_COLORS[c] for c in CODE_ORDER])
    norm = BoundaryNorm(np.arange(len(CODE_ORDER) + 1) - 0.5, len(CODE_ORDER))
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    ax.imshow(
        img.T,
        origin="lower",
        extent=[x_lo, x_hi, y_lo, y_hi],
        aspect="auto",
        cmap=cmap,
        norm=norm,
        interpolation="nearest",
    )
    ax.set_xlabel(xlabel)
    ax.set_ylabel("z")
    _legend_for(records, ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_region_map(records, n_w, n_z, path):
    """Class map on the (w, z) plane; records row-major with w outer."""
    ws = [rec.w for rec in records]
    zs = [rec.z for rec in records]
    _draw_map(records, n_w, n_z, min(ws), max(ws), min(zs), max(zs), "w", path)


def plot_xxz_map(records, n_a, n_z, path):
    """Branch map on the (a, z) plane; records row-major with a outer."""
    avs = [rec.a for rec in records]
    zs = [rec.z for rec in records]
    _draw_map(records, n_a, n_z, min(avs), max(avs), min(zs), max(zs), "a", path)


def plot_sweep(records, path):
    """Discord against z, colored by class, with the oracle overlay if set."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    zs = [rec.z for rec in records]
    ds = [rec.discord for rec in records]
    ax.plot(zs, ds, color="0.6", lw=1.0, zorder=1)
    for code in CODE_ORDER:
        pts = [(rec.z, rec.discord) for rec in records if rec.code == code]
        if pts:
            ax.scatter(*zip(*pts), s=8, color=CODE_COLORS[code], label=code, zorder=2)
    oracle = [(rec.z, rec.oracle_discord) for rec in records
              if not math.isnan(rec.oracle_discord)]
    if oracle:
        ax.scatter(*zip(*oracle), s=20, marker="x", color="black",
                   label="oracle", zorder=3)
    ax.set_xlabel("z")
    ax.set_ylabel("discord (bits)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
