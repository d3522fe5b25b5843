"""Domain types shared by every part of the simulator.

All angles are radians and all lengths meters. The vehicle frame has its
origin at the center of the ego footprint on the ground, x pointing forward,
y to the left and z up. Sensor frames use the same handedness with x along
the boresight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union


class SensorKind(str, Enum):
    ULTRASONIC = "ultrasonic"
    RADAR = "radar"
    LIDAR = "lidar"
    CAMERA = "camera"


class Weather(str, Enum):
    CLEAR = "clear"
    RAIN = "rain"
    FOG = "fog"


class ObjectClass(str, Enum):
    PEDESTRIAN = "pedestrian"
    BIKE = "bike"
    CAR = "car"
    TRUCK = "truck"


@dataclass(frozen=True)
class ActiveParams:
    """Radio/acoustic pulse sensor (ultrasonic and radar)."""

    emit_power: float  # W
    gain_emit: float  # boresight, linear
    gain_recv: float  # boresight, linear
    wavelength: float  # m
    pulse_width: float  # s
    system_noise_temp: float  # K

    @property
    def noise_bandwidth(self) -> float:
        return 1.0 / self.pulse_width


@dataclass(frozen=True)
class LidarParams:
    emit_power: float  # W
    receiver_area: float  # m^2
    beam_divergence: float  # rad
    radiation_frequency: float  # Hz
    noise_bandwidth: float  # Hz
    system_noise_temp: float  # K


@dataclass(frozen=True)
class CameraParams:
    aperture_diameter: float  # m
    total_pixels: int
    horizontal_pixels: int
    integration_time: float  # s
    quantum_efficiency: float
    radiation_frequency: float  # Hz
    noise_bandwidth: float  # Hz
    system_noise_temp: float  # K
    receiver_area: float  # m^2


SensorParams = Union[ActiveParams, LidarParams, CameraParams]

PARAMS_FOR_KIND = {
    SensorKind.ULTRASONIC: ActiveParams,
    SensorKind.RADAR: ActiveParams,
    SensorKind.LIDAR: LidarParams,
    SensorKind.CAMERA: CameraParams,
}


@dataclass(frozen=True)
class SensorSpec:
    id: str
    kind: SensorKind
    position: Tuple[float, float, float]
    yaw: float
    pitch: float
    hfov: float  # full angle
    vfov: float  # full angle
    max_range: float
    params: SensorParams

    @property
    def boresight(self) -> Tuple[float, float, float]:
        cp = math.cos(self.pitch)
        return (cp * math.cos(self.yaw), cp * math.sin(self.yaw), math.sin(self.pitch))


@dataclass(frozen=True)
class DetectionCurve:
    """Logistic SNR-to-probability curve in decibels."""

    midpoint_db: float
    slope: float  # per dB


@dataclass(frozen=True)
class Environment:
    name: str
    weather: Weather
    attenuation: dict  # SensorKind -> dB/km
    sun_irradiance: float  # W/m^2
    sun_direction: Optional[Tuple[float, float]]  # (azimuth, elevation) or None
    glare_half_angle: float
    curve: DetectionCurve

    def alpha(self, kind: SensorKind) -> float:
        return self.attenuation[kind]


@dataclass(frozen=True)
class TargetObject:
    object_class: ObjectClass
    sigma_active: float  # m^2, radar/lidar/ultrasonic
    sigma_camera: float  # m^2, geometric silhouette
    height: float  # m


@dataclass(frozen=True)
class EgoVehicle:
    """Rectangular footprint centered on the vehicle-frame origin."""

    length: float = 4.9
    width: float = 1.9
    front_axle_x: float = 1.5

    def contains(self, x, y):
        return (abs(x) <= self.length / 2) & (abs(y) <= self.width / 2)


@dataclass(frozen=True)
class Scenario:
    grid_extent: Tuple[float, float, float, float]  # x_min, x_max, y_min, y_max
    grid_resolution: float
    eval_heights: Tuple[float, ...]
    path: Optional[Tuple[Tuple[float, float], ...]] = None
    path_step: Optional[float] = None
    front_only: bool = True
    ego: EgoVehicle = field(default_factory=EgoVehicle)
