"""Sensor-frame transforms, frustum membership and coverage grids."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .model import EgoVehicle, SensorSpec


@dataclass(frozen=True)
class SphericalTarget:
    range: float
    azimuth: float
    elevation: float


@dataclass
class CoverageGrid:
    """Rectangular grid in the vehicle frame at a fixed height.

    ``cells`` has shape ``(ny, nx)``: row ``j`` holds y-centers
    ``y_min + (j + 0.5) * resolution`` and column ``i`` holds x-centers
    ``x_min + (i + 0.5) * resolution``.
    """

    extent: Tuple[float, float, float, float]
    resolution: float
    height: float = 0.0
    cells: Optional[np.ndarray] = None

    def __post_init__(self):
        x_min, x_max, y_min, y_max = self.extent
        if self.resolution <= 0:
            raise ValueError("grid resolution must be positive")
        if not (x_max > x_min and y_max > y_min):
            raise ValueError("grid extent is degenerate")
        if self.cells is None:
            self.cells = np.zeros(self.shape)
        elif self.cells.shape != self.shape:
            raise ValueError(f"cells shape {self.cells.shape} does not match grid {self.shape}")

    @property
    def shape(self) -> Tuple[int, int]:
        x_min, x_max, y_min, y_max = self.extent
        nx = math.ceil((x_max - x_min) / self.resolution - 1e-9)
        ny = math.ceil((y_max - y_min) / self.resolution - 1e-9)
        return ny, nx

    @property
    def x_centers(self) -> np.ndarray:
        return self.extent[0] + (np.arange(self.shape[1]) + 0.5) * self.resolution

    @property
    def y_centers(self) -> np.ndarray:
        return self.extent[2] + (np.arange(self.shape[0]) + 0.5) * self.resolution

    def mesh(self):
        """Cell-center coordinates as two ``(ny, nx)`` arrays."""
        return np.meshgrid(self.x_centers, self.y_centers)

    def with_cells(self, cells, height=None) -> "CoverageGrid":
        return CoverageGrid(self.extent, self.resolution, self.height if height is None else height, cells)


def _world_from_sensor(yaw: float, pitch: float) -> np.ndarray:
    # Rz(yaw) @ Ry(-pitch): positive pitch tilts the boresight upward.
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    rz = np.array([[cy, -sy, 0.0], [sy, cy, 0.0], [0.0, 0.0, 1.0]])
    ry = np.array([[cp, 0.0, -sp], [0.0, 1.0, 0.0], [sp, 0.0, cp]])
    return rz @ ry


def spherical_coords(spec: SensorSpec, x, y, z):
    """Vectorized range, azimuth and elevation of points in the sensor frame."""
    dx = np.asarray(x, dtype=float) - spec.position[0]
    dy = np.asarray(y, dtype=float) - spec.position[1]
    dz = np.asarray(z, dtype=float) - spec.position[2]
    m = _world_from_sensor(spec.yaw, spec.pitch).T
    sx = m[0, 0] * dx + m[0, 1] * dy + m[0, 2] * dz
    sy = m[1, 0] * dx + m[1, 1] * dy + m[1, 2] * dz
    sz = m[2, 0] * dx + m[2, 1] * dy + m[2, 2] * dz
    horiz = np.hypot(sx, sy)
    rng = np.hypot(horiz, sz)
    az = np.arctan2(sy, sx)
    az = np.where(az == -np.pi, np.pi, az)
    el = np.arctan2(sz, horiz)
    return rng, az, el


def to_sensor_frame(spec: SensorSpec, point) -> SphericalTarget:
    rng, az, el = spherical_coords(spec, *point)
    return SphericalTarget(float(rng), float(az), float(el))


def from_sensor_frame(spec: SensorSpec, t: SphericalTarget) -> Tuple[float, float, float]:
    """Inverse of :func:`to_sensor_frame`."""
    ce = math.cos(t.elevation)
    local = np.array(
        [t.range * ce * math.cos(t.azimuth), t.range * ce * math.sin(t.azimuth), t.range * math.sin(t.elevation)]
    )
    world = _world_from_sensor(spec.yaw, spec.pitch) @ local
    return tuple(float(v) for v in world + np.asarray(spec.position))


def in_fov_arrays(spec: SensorSpec, rng, az, el):
    return (
        (np.abs(az) <= spec.hfov / 2)
        & (np.abs(el) <= spec.vfov / 2)
        & (rng > 0)
        & (rng <= spec.max_range)
    )


def in_fov(spec: SensorSpec, t: SphericalTarget) -> bool:
    return (
        abs(t.azimuth) <= spec.hfov / 2
        and abs(t.elevation) <= spec.vfov / 2
        and 0 < t.range <= spec.max_range
    )


def points_in_fov(spec: SensorSpec, x, y, z):
    return in_fov_arrays(spec, *spherical_coords(spec, x, y, z))


class _GridView:
    """Per-sensor azimuth/horizontal distance cache for a grid.

    For unpitched sensors these do not depend on height, so slicing many
    heights only costs one elevation evaluation per slice. Values are
    bit-identical to :func:`spherical_coords`.
    """

    def __init__(self, spec: SensorSpec, xs, ys):
        self.spec = spec
        self.xs, self.ys = xs, ys
        self.flat = spec.pitch == 0.0
        if self.flat:
            dx = xs - spec.position[0]
            dy = ys - spec.position[1]
            cy, sy = math.cos(spec.yaw), math.sin(spec.yaw)
            sx_ = cy * dx + sy * dy
            sy_ = -sy * dx + cy * dy
            self.horiz = np.hypot(sx_, sy_)
            az = np.arctan2(sy_, sx_)
            self.az_ok = np.abs(np.where(az == -np.pi, np.pi, az)) <= spec.hfov / 2

    def mask(self, height: float) -> np.ndarray:
        spec = self.spec
        if not self.flat:
            return points_in_fov(spec, self.xs, self.ys, height)
        dz = float(height) - spec.position[2]
        el = np.arctan2(dz, self.horiz)
        rng = np.hypot(self.horiz, dz)
        return self.az_ok & (np.abs(el) <= spec.vfov / 2) & (rng > 0) & (rng <= spec.max_range)


def coverage_mask(setup: Sequence[SensorSpec], grid: CoverageGrid, height: float) -> np.ndarray:
    """Cells whose center at ``height`` lies inside at least one sensor frustum."""
    xs, ys = grid.mesh()
    mask = np.zeros(grid.shape, dtype=bool)
    for spec in setup:
        mask |= _GridView(spec, xs, ys).mask(height)
    return mask


def default_blind_heights(low=0.1, high=2.0, step=0.1) -> Tuple[float, ...]:
    n = int(round((high - low) / step)) + 1
    return tuple(round(low + k * step, 10) for k in range(n))


def blind_spot_map(
    setup: Sequence[SensorSpec],
    grid: CoverageGrid,
    heights: Sequence[float],
    ego: Optional[EgoVehicle] = EgoVehicle(),
):
    """Cells seen by no sensor at any of ``heights``; returns ``(mask, area_m2)``.

    Cells whose centers fall inside the ego footprint are never blind.
    """
    if len(heights) == 0:
        raise ValueError("at least one height is required")
    xs, ys = grid.mesh()
    seen = np.zeros(grid.shape, dtype=bool)
    for spec in setup:
        view = _GridView(spec, xs, ys)
        for h in heights:
            seen |= view.mask(h)
    blind = ~seen
    if ego is not None:
        blind &= ~ego.contains(xs, ys)
    area = int(blind.sum()) * grid.resolution**2
    return blind, area
