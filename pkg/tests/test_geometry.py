import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sensorcov.geometry import (CoverageGrid, SphericalTarget, blind_spot_map, coverage_mask,
                                default_blind_heights, from_sensor_frame, in_fov, points_in_fov,
                                spherical_coords, to_sensor_frame)
from sensorcov.model import EgoVehicle, SensorKind

from conftest import make_sensor

angles = st.floats(-math.pi, math.pi, allow_nan=False)
coords = st.floats(-50, 50, allow_nan=False)


def test_boresight_and_axes():
    s = make_sensor(position=(1.0, 2.0, 0.5), yaw=math.pi / 2)
    t = to_sensor_frame(s, (1.0, 12.0, 0.5))
    assert t.range == pytest.approx(10.0)
    assert t.azimuth == pytest.approx(0.0, abs=1e-12)
    assert t.elevation == pytest.approx(0.0, abs=1e-12)
    # y is to the left, so a point at the sensor's left has positive azimuth
    assert to_sensor_frame(s, (-5.0, 2.0, 0.5)).azimuth == pytest.approx(math.pi / 2)


def test_positive_pitch_points_up():
    s = make_sensor(position=(0.0, 0.0, 0.0), pitch=math.radians(20))
    t = to_sensor_frame(s, (math.cos(math.radians(20)), 0.0, math.sin(math.radians(20))))
    assert t.elevation == pytest.approx(0.0, abs=1e-12)
    assert t.azimuth == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(coords, coords, coords, angles, st.floats(-1.4, 1.4))
def test_round_trip(x, y, z, yaw, pitch):
    s = make_sensor(position=(0.3, -0.7, 0.5), yaw=yaw, pitch=pitch)
    back = from_sensor_frame(s, to_sensor_frame(s, (x, y, z)))
    assert np.allclose(back, (x, y, z), atol=1e-9, rtol=0)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.01, 200), angles, st.floats(-math.pi / 2, math.pi / 2),
       st.floats(0.01, 2 * math.pi), st.floats(0.01, math.pi), st.floats(0.1, 200))
def test_in_fov_is_conjunction(rng, az, el, hfov, vfov, max_range):
    s = make_sensor(hfov=hfov, vfov=vfov, max_range=max_range)
    t = SphericalTarget(rng, az, el)
    expected = abs(az) <= hfov / 2 and abs(el) <= vfov / 2 and 0 < rng <= max_range
    assert in_fov(s, t) == expected


def test_vectorized_membership_matches_scalar():
    s = make_sensor(yaw=0.4, pitch=0.1, hfov=math.radians(90), max_range=20.0)
    rng = np.random.default_rng(1)
    pts = rng.uniform(-25, 25, size=(500, 3))
    vec = points_in_fov(s, pts[:, 0], pts[:, 1], pts[:, 2])
    assert [bool(v) for v in vec] == [in_fov(s, to_sensor_frame(s, p)) for p in pts]


def test_sensor_origin_is_never_inside():
    s = make_sensor(position=(1.0, 1.0, 1.0))
    assert not points_in_fov(s, 1.0, 1.0, 1.0)


def test_grid_layout():
    g = CoverageGrid((-1.0, 1.0, 0.0, 0.5), 0.25)
    assert g.shape == (2, 8)
    assert g.x_centers[0] == -0.875 and g.y_centers[-1] == 0.375
    xs, ys = g.mesh()
    assert xs.shape == ys.shape == g.shape
    with pytest.raises(ValueError):
        CoverageGrid((0, 1, 0, 1), 0.0)
    with pytest.raises(ValueError):
        CoverageGrid((0, 1, 0, 1), 0.5, cells=np.zeros((3, 3)))


def test_default_heights():
    h = default_blind_heights()
    assert len(h) == 20 and h[0] == 0.1 and h[-1] == 2.0


def test_omnidirectional_sensor_leaves_no_blind_spot():
    s = make_sensor(position=(0.0, 0.0, 1.0), hfov=2 * math.pi, vfov=math.pi, max_range=100.0)
    blind, area = blind_spot_map([s], CoverageGrid((-5, 5, -5, 5), 0.25), default_blind_heights())
    assert area == 0.0 and not blind.any()


def test_empty_setup_all_blind_except_ego():
    g = CoverageGrid((-5, 5, -5, 5), 0.5)
    blind, area = blind_spot_map([], g, [0.5])
    xs, ys = g.mesh()
    assert np.array_equal(blind, ~EgoVehicle().contains(xs, ys))
    assert area == pytest.approx(blind.sum() * 0.25)
    with pytest.raises(ValueError):
        blind_spot_map([], g, [])


def _random_setup(rng, n):
    kinds = list(SensorKind)
    return [make_sensor(kinds[rng.integers(4)], position=(rng.uniform(-2.4, 2.4), rng.uniform(-0.9, 0.9),
                                                          rng.uniform(0.2, 1.5)),
                        yaw=rng.uniform(-math.pi, math.pi), pitch=rng.choice([0.0, rng.uniform(-0.3, 0.3)]),
                        hfov=rng.uniform(0.2, 3.0), vfov=rng.uniform(0.1, 1.0), max_range=rng.uniform(1, 8),
                        sid=f"s{i}") for i in range(n)]


def test_blind_map_equals_complement_of_union_brute_force():
    rng = np.random.default_rng(7)
    heights = [0.1, 0.6, 1.3]
    g = CoverageGrid((-6, 6, -5, 5), 0.4)
    xs, ys = g.mesh()
    ego = EgoVehicle()
    for _ in range(10):
        setup = _random_setup(rng, int(rng.integers(0, 6)))
        blind, _ = blind_spot_map(setup, g, heights, ego)
        union = np.zeros(g.shape, bool)
        for h in heights:
            union |= coverage_mask(setup, g, h)
        assert np.array_equal(blind, ~union & ~ego.contains(xs, ys))
        # and cell by cell through the scalar path
        for j, i in zip(rng.integers(0, g.shape[0], 20), rng.integers(0, g.shape[1], 20)):
            seen = any(in_fov(s, to_sensor_frame(s, (xs[j, i], ys[j, i], h))) for s in setup for h in heights)
            assert blind[j, i] == (not seen and not ego.contains(xs[j, i], ys[j, i]))


def test_spherical_coords_vectorized_shapes():
    s = make_sensor()
    r, a, e = spherical_coords(s, np.zeros((3, 4)) + 5.0, 0.0, 0.5)
    assert r.shape == a.shape == e.shape == (3, 4)
