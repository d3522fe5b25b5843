"""SNR to detection probability, range gating and independent-sensor fusion."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from scipy.special import expit

from .geometry import SphericalTarget, in_fov
from .model import DetectionCurve, SensorSpec, Weather
from .signal import to_db

DEFAULT_SLOPE = 0.5  # per dB

# Required SNR for 50 % detection. Clear is the 10 dB anchor; rain and fog
# are calibration constants that only need to preserve the ordering.
WEATHER_MIDPOINTS_DB = {
    Weather.CLEAR: 10.0,
    Weather.RAIN: 13.0,
    Weather.FOG: 16.0,
}


def weather_curve(weather: Weather, slope: float = DEFAULT_SLOPE) -> DetectionCurve:
    return DetectionCurve(midpoint_db=WEATHER_MIDPOINTS_DB[Weather(weather)], slope=slope)


def validate_curve(curve: DetectionCurve) -> None:
    if not np.isfinite(curve.midpoint_db):
        raise ValueError("curve midpoint must be finite")
    if not curve.slope > 0:
        raise ValueError("curve slope must be positive")


def detection_probability(snr, curve: DetectionCurve):
    """Logistic detection probability of a linear SNR (scalar or array)."""
    s_db = to_db(snr)
    p = expit(curve.slope * (np.asarray(s_db) - curve.midpoint_db))
    return float(p) if np.ndim(p) == 0 else p


def gate_by_range(p: float, t: SphericalTarget, spec: SensorSpec) -> float:
    return p if in_fov(spec, t) else 0.0


def _check_probs(probs: np.ndarray) -> None:
    if np.any(~((probs >= 0.0) & (probs <= 1.0))):
        raise ValueError("probabilities must lie in [0, 1]")


def fuse(probs: Iterable[float]) -> float:
    """Probability that at least one independent sensor detects."""
    probs = np.asarray(list(probs), dtype=float)
    _check_probs(probs)
    miss = 1.0
    for p in probs:
        miss *= 1.0 - p
    return 1.0 - miss


def fuse_stack(layers: Sequence[np.ndarray], shape=None) -> np.ndarray:
    """Element-wise :func:`fuse` over equally shaped per-sensor arrays.

    Layers are multiplied in the given order so results do not depend on
    how the caller parallelized the per-sensor evaluation.
    """
    if not layers:
        if shape is None:
            raise ValueError("shape is required when there are no layers")
        return np.zeros(shape)
    miss = np.ones_like(np.asarray(layers[0], dtype=float))
    for layer in layers:
        layer = np.asarray(layer, dtype=float)
        _check_probs(layer)
        miss = miss * (1.0 - layer)
    return 1.0 - miss
