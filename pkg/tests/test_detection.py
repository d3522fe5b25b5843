import itertools
import math

import numpy as np
import pytest

from sensorcov.detection import (detection_probability, fuse, fuse_stack, gate_by_range, validate_curve,
                                 weather_curve)
from sensorcov.geometry import SphericalTarget
from sensorcov.model import DetectionCurve, Weather

from conftest import make_sensor


def brute_force_fusion(probs):
    """Sum over all detect/miss outcomes where at least one sensor detects."""
    total = 0.0
    for outcome in itertools.product((0, 1), repeat=len(probs)):
        if any(outcome):
            w = 1.0
            for hit, p in zip(outcome, probs):
                w *= p if hit else 1.0 - p
            total += w
    return total


def test_fusion_matches_enumeration_on_grid_values():
    values = (0.0, 0.25, 0.5, 0.75, 1.0)
    for n in range(5):
        for probs in itertools.combinations_with_replacement(values, n):
            assert abs(fuse(probs) - brute_force_fusion(probs)) <= 1e-12


def test_fusion_identities():
    assert fuse([]) == 0.0
    assert fuse([0.3]) == pytest.approx(0.3, abs=1e-15)
    assert fuse([0.3, 1.0]) == 1.0
    assert fuse([0.0, 0.0]) == 0.0


@pytest.mark.parametrize("bad", [[-0.1], [1.2], [float("nan")]])
def test_fusion_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        fuse(bad)


def test_fuse_stack_elementwise():
    a = np.array([[0.1, 0.5], [0.0, 1.0]])
    b = np.array([[0.2, 0.5], [0.0, 0.3]])
    out = fuse_stack([a, b])
    for idx in np.ndindex(a.shape):
        assert out[idx] == fuse([a[idx], b[idx]])
    assert np.array_equal(fuse_stack([], (2, 3)), np.zeros((2, 3)))


def test_curve_anchor_and_shape():
    clear = weather_curve(Weather.CLEAR)
    assert abs(detection_probability(10.0, clear) - 0.5) <= 1e-9
    assert detection_probability(0.0, clear) == 0.0
    assert detection_probability(1e30, clear) == 1.0
    snr = 10 ** (np.linspace(-20, 60, 50) / 10)
    p = detection_probability(snr, clear)
    assert np.all(np.diff(p) >= 0)


def test_weather_midpoints_order():
    clear, rain, fog = (weather_curve(w) for w in (Weather.CLEAR, Weather.RAIN, Weather.FOG))
    assert clear.midpoint_db < rain.midpoint_db < fog.midpoint_db
    s = 10 ** 1.2
    assert detection_probability(s, clear) > detection_probability(s, rain) > detection_probability(s, fog)


@pytest.mark.parametrize("curve", [DetectionCurve(10.0, 0.0), DetectionCurve(float("nan"), 0.5)])
def test_validate_curve(curve):
    with pytest.raises(ValueError):
        validate_curve(curve)


def test_gate_by_range():
    s = make_sensor(hfov=math.radians(60), max_range=50.0)
    assert gate_by_range(0.7, SphericalTarget(49.0, 0.0, 0.0), s) == 0.7
    assert gate_by_range(0.7, SphericalTarget(50.001, 0.0, 0.0), s) == 0.0
    assert gate_by_range(0.7, SphericalTarget(25.0, math.radians(31), 0.0), s) == 0.0
