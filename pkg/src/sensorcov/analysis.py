"""Near-field blind-spot and far-field path studies built on the sensor models."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .detection import detection_probability, fuse_stack
from .geometry import CoverageGrid, blind_spot_map, coverage_mask, spherical_coords, in_fov_arrays
from .model import EgoVehicle, Environment, SensorKind, SensorSpec, TargetObject
from .signal import glare_applies, sensor_snr

NEAR_FIELD_MIN_HEIGHT = 0.1
FAR_FIELD_HEIGHT = 0.75

P_ONE = 1.0 - 1e-9
P_ZERO = 1e-12

BUCKETS = ("p=1.0", "p>=0.8", "p>=0.5", "p>0.0", "p=0.0")


def sensor_snr_at(spec: SensorSpec, obj: TargetObject, env: Environment, x, y, z, glare=None):
    """Linear SNR at points; NaN where the point is outside the frustum."""
    rng, az, el = spherical_coords(spec, x, y, z)
    inside = in_fov_arrays(spec, rng, az, el)
    snr = np.full(np.shape(rng), np.nan)
    if np.any(inside):
        snr[inside] = sensor_snr(spec, obj.sigma_active, obj.sigma_camera, rng[inside], env, glare)
    return snr


def sensor_probability(spec: SensorSpec, obj: TargetObject, env: Environment, x, y, z, glare=None):
    """Gated detection probability of one sensor at points; exactly 0.0 outside the frustum."""
    rng, az, el = spherical_coords(spec, x, y, z)
    inside = in_fov_arrays(spec, rng, az, el)
    p = np.zeros(np.shape(rng))
    if np.any(inside):
        snr = sensor_snr(spec, obj.sigma_active, obj.sigma_camera, rng[inside], env, glare)
        p[inside] = detection_probability(snr, env.curve)
    return p


def fused_probability(setup: Sequence[SensorSpec], obj: TargetObject, env: Environment, x, y, z):
    shape = np.broadcast(np.asarray(x), np.asarray(y), np.asarray(z)).shape
    layers = [sensor_probability(s, obj, env, x, y, z) for s in setup]
    return fuse_stack(layers, shape)


def detection_map(setup, obj: TargetObject, env: Environment, grid: CoverageGrid, height: float) -> CoverageGrid:
    xs, ys = grid.mesh()
    return grid.with_cells(fused_probability(setup, obj, env, xs, ys, height), height)


def snr_map(spec: SensorSpec, obj: TargetObject, env: Environment, grid: CoverageGrid, height: float,
            glare=None) -> CoverageGrid:
    """Per-cell SNR in dB for one sensor; NaN outside its frustum."""
    xs, ys = grid.mesh()
    snr = sensor_snr_at(spec, obj, env, xs, ys, height, glare)
    with np.errstate(divide="ignore"):
        db = 10.0 * np.log10(snr)
    return grid.with_cells(db, height)


# -- near field ---------------------------------------------------------------


@dataclass
class NearFieldReport:
    blind_area: float
    uncovered_area: float
    blind_mask: CoverageGrid
    uncovered_at_min_height: CoverageGrid
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "blind_area_m2": self.blind_area,
            "uncovered_area_at_min_height_m2": self.uncovered_area,
            "grid": {"extent": list(self.blind_mask.extent), "resolution": self.blind_mask.resolution,
                     "shape": list(self.blind_mask.shape)},
            "metadata": self.metadata,
        }


def near_field(setup, grid: CoverageGrid, heights: Sequence[float], ego: Optional[EgoVehicle] = EgoVehicle(),
               metadata: Optional[dict] = None) -> NearFieldReport:
    heights = sorted(heights)
    blind, area = blind_spot_map(setup, grid, heights, ego)
    min_h = heights[0]
    uncovered = ~coverage_mask(setup, grid, min_h)
    if ego is not None:
        xs, ys = grid.mesh()
        uncovered &= ~ego.contains(xs, ys)
    meta = {"heights": list(heights), "min_height": min_h}
    meta.update(metadata or {})
    return NearFieldReport(
        blind_area=area,
        uncovered_area=int(uncovered.sum()) * grid.resolution**2,
        blind_mask=grid.with_cells(blind, 0.0),
        uncovered_at_min_height=grid.with_cells(uncovered, min_h),
        metadata=meta,
    )


# -- far field ----------------------------------------------------------------


@dataclass
class Path:
    points: np.ndarray  # (n, 2) vehicle-frame x, y
    step: float

    @property
    def length(self) -> float:
        return self.step * (len(self.points) - 1)


def highway_path(radius: float, lane_offset: float, step: float, straight_length: float = 0.0,
                 length: float = 303.0, turn: str = "right", start_x: float = EgoVehicle().front_axle_x) -> Path:
    """Passenger-car path in the neighbouring lane: a straight run, then a circular arc.

    The lane runs parallel to the ego x axis at ``y = -lane_offset`` from
    ``x = start_x`` for ``straight_length`` meters, then bends with the given
    ``radius`` toward ``turn`` (``"left"``/``"right"``). ``radius=math.inf``
    keeps it straight. Samples are spaced ``step`` meters along the path.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    if not step > 0:
        raise ValueError("step must be positive")
    if turn not in ("left", "right"):
        raise ValueError("turn must be 'left' or 'right'")
    n = int(math.floor(length / step + 1e-9)) + 1
    s = np.arange(n) * step
    x = start_x + s.copy()
    y = np.full(n, -float(lane_offset))
    if math.isfinite(radius):
        sign = 1.0 if turn == "left" else -1.0
        on_arc = s > straight_length
        u = s[on_arc] - straight_length
        x[on_arc] = start_x + straight_length + radius * np.sin(u / radius)
        y[on_arc] = -lane_offset + sign * radius * (1.0 - np.cos(u / radius))
    return Path(np.column_stack([x, y]), float(step))


def arc_center(radius: float, lane_offset: float, straight_length: float = 0.0, turn: str = "right",
               start_x: float = EgoVehicle().front_axle_x):
    sign = 1.0 if turn == "left" else -1.0
    return (start_x + straight_length, -lane_offset + sign * radius)


def classify(p: np.ndarray) -> np.ndarray:
    """Index into the non-cumulative partition: 1.0, [0.8,1), [0.5,0.8), (0,0.5), 0."""
    p = np.asarray(p)
    out = np.full(p.shape, 3)
    out[p >= 0.5] = 2
    out[p >= 0.8] = 1
    out[p >= P_ONE] = 0
    out[p <= P_ZERO] = 4
    return out


@dataclass
class FarFieldReport:
    buckets: Dict[str, float]
    path_length: float
    metadata: dict = field(default_factory=dict)
    probabilities: Optional[np.ndarray] = None
    points: Optional[np.ndarray] = None

    def to_dict(self) -> dict:
        return {"buckets_m": dict(self.buckets), "path_length_m": self.path_length, "metadata": self.metadata}

    @classmethod
    def from_dict(cls, d: dict) -> "FarFieldReport":
        return cls(dict(d["buckets_m"]), float(d["path_length_m"]), dict(d.get("metadata", {})))


def far_field(setup, obj: TargetObject, env: Environment, path: Path, height: float = FAR_FIELD_HEIGHT,
              ego: EgoVehicle = EgoVehicle(), front_only: bool = True, metadata: Optional[dict] = None
              ) -> FarFieldReport:
    """Cumulated path meters per detection-probability level.

    Fused probability is evaluated directly at each path sample. With
    ``front_only`` samples at or behind the ego front axle are dropped.
    """
    pts = np.asarray(path.points, dtype=float)
    if front_only:
        pts = pts[pts[:, 0] > ego.front_axle_x]
    p = fused_probability(setup, obj, env, pts[:, 0], pts[:, 1], height)
    counts = np.bincount(classify(p), minlength=5)
    exact = [int(c) for c in counts]
    cumulative = [exact[0], exact[0] + exact[1], sum(exact[:3]), sum(exact[:4]), exact[4]]
    buckets = {name: c * path.step for name, c in zip(BUCKETS, cumulative)}
    meta = {
        "object_class": obj.object_class.value,
        "environment": env.name,
        "eval_height": height,
        "samples": int(len(pts)),
        "step": path.step,
        "glare_cameras": sorted(s.id for s in setup if s.kind is SensorKind.CAMERA and glare_applies(s, env)),
        "version": __version__,
    }
    meta.update(metadata or {})
    return FarFieldReport(buckets, len(pts) * path.step, meta, p, pts)


# -- comparison ---------------------------------------------------------------


class ReportMismatch(ValueError):
    pass


_MATCH_KEYS = ("object_class", "eval_height", "step", "samples")


def compare(reports: Sequence[FarFieldReport], labels: Optional[Sequence[str]] = None) -> dict:
    """Align bucket meters of several reports; deltas are relative to the first one."""
    if len(reports) < 2:
        raise ReportMismatch("at least two reports are required")
    ref = reports[0]
    for r in reports[1:]:
        for key in _MATCH_KEYS:
            if r.metadata.get(key) != ref.metadata.get(key):
                raise ReportMismatch(
                    f"reports differ in {key}: {ref.metadata.get(key)!r} vs {r.metadata.get(key)!r}"
                )
        if r.path_length != ref.path_length:
            raise ReportMismatch("reports differ in path length")
    if labels is None:
        labels = [f"{r.metadata.get('setup', '?')}/{r.metadata.get('environment', '?')}" for r in reports]
    rows = []
    for b in BUCKETS:
        values = [r.buckets[b] for r in reports]
        rows.append({"bucket": b, "values": values, "deltas": [v - values[0] for v in values]})
    return {"labels": list(labels), "rows": rows, "path_length_m": ref.path_length}


def format_table(table: dict) -> str:
    labels = table["labels"]
    width = max(12, *(len(lbl) + 2 for lbl in labels))
    lines = ["Detection prob.".ljust(16) + "".join(lbl.rjust(width) for lbl in labels)]
    for row in table["rows"]:
        lines.append(row["bucket"].ljust(16) + "".join(f"{v:.0f} m".rjust(width) for v in row["values"]))
    if len(labels) > 1:
        lines.append("")
        lines.append("Delta vs " + labels[0])
        for row in table["rows"]:
            lines.append(row["bucket"].ljust(16) + "".join(f"{d:+.0f} m".rjust(width) for d in row["deltas"]))
    return "\n".join(lines)
