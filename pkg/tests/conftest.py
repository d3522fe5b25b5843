import dataclasses
import sys
import math

import pytest

from sensorcov import config_io
from sensorcov.model import SensorKind, SensorSpec


def preset_params():
    """One parameter set per sensor kind, taken from the shipped presets."""
    out = {}
    for s in config_io.preset_setup("system_a").sensors:
        out.setdefault(s.kind, s.params)
    return out


PARAMS = preset_params()


def make_sensor(kind=SensorKind.RADAR, position=(0.0, 0.0, 0.5), yaw=0.0, pitch=0.0,
                hfov=math.radians(60), vfov=math.radians(30), max_range=50.0, sid=None, params=None):
    kind = SensorKind(kind)
    return SensorSpec(sid or f"{kind.value}_{len(str(position))}", kind, tuple(position), yaw, pitch, hfov, vfov,
                      max_range, params or PARAMS[kind])


def with_params(spec, **changes):
    return dataclasses.replace(spec, params=dataclasses.replace(spec.params, **changes))


@pytest.fixture
def system_a():
    return config_io.preset_setup("system_a").sensors


@pytest.fixture
def system_b():
    return config_io.preset_setup("system_b").sensors


@pytest.fixture
def car():
    return config_io.builtin_object("car")


@pytest.fixture
def clear():
    return config_io.builtin_environment("clear")


@pytest.fixture
def glare():
    return config_io.builtin_environment("clear_glare_front_right")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=str):
        terminalreporter.write_line(mod.RESULTS[key])
