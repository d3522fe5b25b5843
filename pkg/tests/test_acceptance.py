"""Acceptance criteria, one test per criterion, each at its stated tolerance.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run directly with ``python``.
"""

import filecmp
import itertools
import math
import time

import numpy as np
import pytest

from sensorcov import analysis, cli, config_io, signal
from sensorcov.detection import detection_probability, fuse, weather_curve
from sensorcov.geometry import CoverageGrid, SphericalTarget, blind_spot_map, default_blind_heights, from_sensor_frame
from sensorcov.model import ActiveParams, LidarParams, SensorKind, Weather

import properties
from test_detection import brute_force_fusion

RESULTS = {}


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[number] = line
    print(line)
    assert ok, line


def test_criterion_1_fusion_oracle():
    t0 = time.perf_counter()
    worst = 0.0
    values = (0.0, 0.25, 0.5, 0.75, 1.0)
    cases = 0
    for n in range(5):
        for probs in itertools.combinations_with_replacement(values, n):
            worst = max(worst, abs(fuse(probs) - brute_force_fusion(probs)))
            cases += 1
    elapsed = time.perf_counter() - t0
    record(1, "fusion equals brute-force enumeration", worst <= 1e-12 and elapsed < 1.0,
           f"{cases} multisets, max error {worst:.1e}, {elapsed:.3f} s")


def test_criterion_2_roc_anchor():
    p = detection_probability(10 ** (10 / 10), weather_curve(Weather.CLEAR))
    record(2, "10 dB maps to p = 0.5 on the clear curve", abs(p - 0.5) <= 1e-9, f"p = {p!r}")


def test_criterion_3_inverse_fourth_power():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(100):
        R = rng.uniform(0.1, 300.0)
        sigma = rng.uniform(0.1, 300.0)
        for kind in (SensorKind.ULTRASONIC, SensorKind.RADAR):
            p = ActiveParams(rng.uniform(1e-9, 10), rng.uniform(1, 1000), rng.uniform(1, 1000),
                             rng.uniform(1e-3, 1e-2), rng.uniform(1e-7, 1e-3), rng.uniform(100, 3000))
            worst = max(worst, abs(signal.snr_active(p, sigma, R, 0.0) / signal.snr_active(p, sigma, 2 * R, 0.0) - 16))
        p = LidarParams(rng.uniform(1, 100), rng.uniform(1e-5, 1e-3), rng.uniform(1e-4, 0.05),
                        rng.uniform(1e14, 5e14), rng.uniform(1e6, 1e9), rng.uniform(100, 400))
        worst = max(worst, abs(signal.snr_lidar(p, sigma, R, 0.0) / signal.snr_lidar(p, sigma, 2 * R, 0.0) - 16))
    record(3, "SNR(R)/SNR(2R) = 16 for ultrasonic, radar and lidar", worst <= 1e-9,
           f"100 parameter sets per kind, max deviation {worst:.1e}")


def test_criterion_4_attenuation():
    anchor = abs(signal.attenuation_loss(1000.0, 3.0) - 10**0.3)
    rng = np.random.default_rng(4)
    alpha = rng.uniform(0.0, 1000.0, 1000)
    r1 = rng.uniform(0.0, 5.0, 1000)
    r2 = rng.uniform(0.0, 5.0, 1000)
    split = np.max(np.abs(signal.attenuation_loss(alpha, r1 + r2)
                          - signal.attenuation_loss(alpha, r1) * signal.attenuation_loss(alpha, r2)))
    record(4, "attenuation anchor and multiplicativity", anchor <= 1e-12 and split <= 1e-12,
           f"anchor error {anchor:.1e}, max split error {split:.1e} over 1000 cases")


@pytest.mark.parametrize("name", list(properties.MONOTONICITY))
def test_criterion_5_monotonicity(name):
    t0 = time.perf_counter()
    try:
        properties.MONOTONICITY[name]()
        ok, detail = True, f"{properties.CASES} cases, {time.perf_counter() - t0:.1f} s"
    except AssertionError as exc:
        ok, detail = False, str(exc).splitlines()[0] if str(exc) else "counterexample found"
    key = f"5{'abcd'[list(properties.MONOTONICITY).index(name)]}"
    record(key, name, ok, detail)


def test_criterion_6_near_field():
    grid = CoverageGrid((-10.0, 10.0, -10.0, 10.0), 0.05)
    heights = default_blind_heights()
    areas, times = {}, {}
    for name in config_io.SETUP_PRESETS:
        setup = config_io.preset_setup(name).sensors
        t0 = time.perf_counter()
        _, areas[name] = blind_spot_map(setup, grid, heights)
        times[name] = time.perf_counter() - t0
    a, b = areas["system_a"], areas["system_b"]
    ok = (b < a and 0 < a <= 10 and 0 < b <= 10 and 0.5 * 4.17 <= a <= 1.5 * 4.17 and 0.5 * 0.77 <= b <= 1.5 * 0.77
          and max(times.values()) < 10.0)
    record(6, "near-field ordering, bounds, calibration band and runtime", ok,
           f"A {a:.3f} m^2, B {b:.3f} m^2, slowest {max(times.values()):.2f} s")


def test_criterion_7_far_field_structure():
    path = analysis.highway_path(500.0, 3.5, 1.0)
    car = config_io.builtin_object("car")
    reports, slowest = {}, 0.0
    for setup in config_io.SETUP_PRESETS:
        sensors = config_io.preset_setup(setup).sensors
        for env in ("clear", "clear_glare_front_right"):
            t0 = time.perf_counter()
            reports[setup, env] = analysis.far_field(sensors, car, config_io.builtin_environment(env), path)
            slowest = max(slowest, time.perf_counter() - t0)
    a, ag = reports["system_a", "clear"].buckets, reports["system_a", "clear_glare_front_right"].buckets
    b, bg = reports["system_b", "clear"].buckets, reports["system_b", "clear_glare_front_right"].buckets
    checks = {
        "a": b["p>0.0"] > a["p>0.0"],
        "b": a == ag,
        "c": bg["p=1.0"] == 0 and bg["p=0.0"] > b["p=0.0"],
        "d": all(r.buckets["p=1.0"] <= r.buckets["p>=0.8"] <= r.buckets["p>=0.5"] <= r.buckets["p>0.0"]
                 for r in reports.values()),
        "runtime": slowest < 5.0,
    }
    detail = (f"B p>0 {b['p>0.0']:.0f} m vs A {a['p>0.0']:.0f} m; B glare p=1 {bg['p=1.0']:.0f} m, "
              f"p=0 {bg['p=0.0']:.0f} vs {b['p=0.0']:.0f} m; failed {[k for k, v in checks.items() if not v]}; "
              f"slowest {slowest:.2f} s")
    record(7, "far-field structure (a-d) and runtime", all(checks.values()), detail)


def _run_all_commands(out):
    argvs = [
        ["nearfield", "--setup", "system_a", "--out-dir", out],
        ["farfield", "--setup", "system_b", "--env", "clear_glare_front_right", "--object", "car", "--out-dir", out],
        ["compare", "system_a:clear", "system_b:clear", "--out-dir", out / "cmp"],
        ["dump-snr", "--setup", "system_a", "--sensor", "cam_front_bumper", "--env", "fog", "--out-dir", out],
    ]
    return [cli.main([str(a) for a in argv]) for argv in argvs]


def test_criterion_8_cli_determinism(tmp_path, capsys):
    codes = _run_all_commands(tmp_path / "run1") + _run_all_commands(tmp_path / "run2")
    capsys.readouterr()
    files = sorted(p.relative_to(tmp_path / "run1") for p in (tmp_path / "run1").rglob("*") if p.is_file())
    same = [filecmp.cmp(tmp_path / "run1" / f, tmp_path / "run2" / f, shallow=False) for f in files]
    csv_or_report = [f for f in files if f.suffix in (".csv", ".json", ".txt")]
    ok = all(c == 0 for c in codes) and all(same) and len(csv_or_report) >= 10
    record(8, "byte-identical outputs across two CLI invocations", ok,
           f"{len(files)} files compared, {sum(same)} identical")


def test_criterion_9_range_gating():
    car = config_io.builtin_object("car")
    env = config_io.builtin_environment("clear")
    failures, checked = [], set()
    for name in config_io.SETUP_PRESETS:
        for s in config_io.preset_setup(name).sensors:
            checked.add(s.kind)
            beyond = from_sensor_frame(s, SphericalTarget(s.max_range + 1e-3, 0.0, 0.0))
            outside = from_sensor_frame(s, SphericalTarget(s.max_range / 2, s.hfov / 2 + math.radians(1), 0.0))
            inside = from_sensor_frame(s, SphericalTarget(s.max_range - 1e-3, 0.0, 0.0))
            for label, pt, want_zero in (("beyond", beyond, True), ("outside", outside, True),
                                         ("inside", inside, False)):
                p = float(analysis.sensor_probability(s, car, env, *pt))
                if (p != 0.0) if want_zero else not (p > 0.0):
                    failures.append(f"{s.id} {label}: {p!r}")
    ok = not failures and checked == set(SensorKind)
    record(9, "p is exactly 0 beyond range and outside the FOV", ok,
           f"{len(checked)} sensor kinds" + (f"; {failures[:3]}" if failures else ""))


if __name__ == "__main__":
    import subprocess
    import sys

    raise SystemExit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q"]))
