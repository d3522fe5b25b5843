"""Matplotlib figures for the near-field and far-field studies.

Probability heatmaps use a fixed ramp (``viridis``, 0 dark to 1 bright)
with limits pinned to [0, 1]. Near-field maps paint blind cells blue and
cells uncovered only at the minimum height green. PNG metadata is
stripped so identical inputs give identical files.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .geometry import CoverageGrid  # noqa: E402
from .model import EgoVehicle, SensorKind, SensorSpec  # noqa: E402

PROBABILITY_CMAP = "viridis"
PATH_COLOR = "#e040fb"
BLIND_COLOR = "#1f4fd1"
UNCOVERED_COLOR = "#3fae49"
_KIND_MARKERS = {SensorKind.ULTRASONIC: "o", SensorKind.RADAR: "s", SensorKind.LIDAR: "D", SensorKind.CAMERA: "^"}


def _extent(grid: CoverageGrid):
    x_min, _, y_min, _ = grid.extent
    ny, nx = grid.shape
    return (x_min, x_min + nx * grid.resolution, y_min, y_min + ny * grid.resolution)


def _ego_patch(ego: EgoVehicle):
    return Rectangle((-ego.length / 2, -ego.width / 2), ego.length, ego.width,
                     facecolor="#9e9e9e", edgecolor="black", linewidth=0.6, zorder=3)


def _save(fig, path: Path) -> Path:
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return Path(path)


def probability_figure(grid: CoverageGrid, path: Path, title: str = "",
                       path_points: Optional[np.ndarray] = None, ego: EgoVehicle = EgoVehicle()) -> Path:
    fig, ax = plt.subplots(figsize=(9, 5))
    im = ax.imshow(np.asarray(grid.cells, dtype=float), origin="lower", extent=_extent(grid),
                   cmap=PROBABILITY_CMAP, vmin=0.0, vmax=1.0, interpolation="nearest", aspect="equal")
    if path_points is not None and len(path_points):
        ax.plot(path_points[:, 0], path_points[:, 1], color=PATH_COLOR, linewidth=1.2, label="object path")
        ax.legend(loc="upper right", fontsize=8)
    ax.add_patch(_ego_patch(ego))
    fig.colorbar(im, ax=ax, label="detection probability")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def near_field_figure(blind: CoverageGrid, uncovered: CoverageGrid, path: Path, title: str = "",
                      setup: Sequence[SensorSpec] = (), ego: EgoVehicle = EgoVehicle()) -> Path:
    # 0 covered, 1 uncovered at minimum height only, 2 blind at every height
    codes = np.asarray(uncovered.cells, dtype=int) + np.asarray(blind.cells, dtype=int)
    cmap = ListedColormap(["white", UNCOVERED_COLOR, BLIND_COLOR])
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.imshow(codes, origin="lower", extent=_extent(blind), cmap=cmap, vmin=0, vmax=2,
              interpolation="nearest", aspect="equal")
    ax.add_patch(_ego_patch(ego))
    for kind, marker in _KIND_MARKERS.items():
        pts = [s.position for s in setup if s.kind is kind]
        if pts:
            pts = np.asarray(pts)
            ax.scatter(pts[:, 0], pts[:, 1], marker=marker, s=18, color="black", zorder=4, label=kind.value)
    if setup:
        ax.legend(loc="upper right", fontsize=8)
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def snr_figure(grid: CoverageGrid, path: Path, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(8, 6))
    cells = np.asarray(grid.cells, dtype=float)
    finite = cells[np.isfinite(cells)]
    lo, hi = (float(finite.min()), float(finite.max())) if finite.size else (0.0, 1.0)
    im = ax.imshow(np.where(np.isfinite(cells), cells, np.nan), origin="lower", extent=_extent(grid),
                   cmap=PROBABILITY_CMAP, vmin=lo, vmax=hi if hi > lo else lo + 1.0,
                   interpolation="nearest", aspect="equal")
    fig.colorbar(im, ax=ax, label="SNR [dB]")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    if title:
        ax.set_title(title)
    return _save(fig, path)
