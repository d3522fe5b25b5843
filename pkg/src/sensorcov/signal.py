"""Received power, noise power and SNR for the four sensor kinds.

Every function works on plain floats or numpy arrays of ranges; results are
linear (never dB) until converted with :func:`to_db`. Antenna gains are the
boresight constants everywhere inside the field of view. Callers gate by
field of view first, so the pattern outside it never matters.
"""

from __future__ import annotations

import math

import numpy as np

from .model import (
    ActiveParams,
    CameraParams,
    Environment,
    LidarParams,
    SensorKind,
    SensorSpec,
)

BOLTZMANN = 1.380649e-23  # J/K
PLANCK = 6.62607015e-34  # J s
SPEED_OF_LIGHT = 299_792_458.0  # m/s
SPEED_OF_SOUND = 343.0  # m/s, dry air at 20 C

_FOUR_PI_CUBED = (4.0 * math.pi) ** 3


def _check_range(R):
    if np.any(np.asarray(R) <= 0):
        raise ValueError("range must be strictly positive")


def to_db(snr):
    """Linear SNR to decibels; 0 maps to -inf."""
    with np.errstate(divide="ignore"):
        out = 10.0 * np.log10(snr)
    return float(out) if np.ndim(out) == 0 else out


def attenuation_loss(alpha_db_per_km, R):
    """One-way atmospheric loss factor ``10**(alpha * R / 10 km)``, always >= 1."""
    return 10.0 ** (np.asarray(alpha_db_per_km) * np.asarray(R) / 10_000.0)


def received_power_active(p: ActiveParams, sigma, R, loss):
    _check_range(R)
    R = np.asarray(R, dtype=float)
    num = p.emit_power * p.gain_emit * p.gain_recv * sigma * p.wavelength**2
    # R**4 can underflow for sub-micrometre ranges; the limit is +inf
    with np.errstate(divide="ignore", over="ignore"):
        return num / (_FOUR_PI_CUBED * R**4 * loss)


def noise_power_rf(p: ActiveParams):
    return BOLTZMANN * p.noise_bandwidth * p.system_noise_temp


def snr_active(p: ActiveParams, sigma, R, alpha_db_per_km):
    loss = attenuation_loss(alpha_db_per_km, R)
    return received_power_active(p, sigma, R, loss) / noise_power_rf(p)


def received_power_lidar(p: LidarParams, sigma, R, loss):
    _check_range(R)
    if p.beam_divergence <= 0:
        raise ValueError("beam divergence must be strictly positive")
    R = np.asarray(R, dtype=float)
    with np.errstate(divide="ignore", over="ignore"):
        return (p.emit_power * sigma * p.receiver_area) / (
            math.pi**2 * R**4 * p.beam_divergence**2 * loss
        )


def noise_power_lidar(p: LidarParams):
    """Shot noise plus thermal/background noise."""
    shot = 2.0 * PLANCK * p.radiation_frequency * p.noise_bandwidth
    thermal = BOLTZMANN * p.noise_bandwidth * p.system_noise_temp
    return shot + thermal


def snr_lidar(p: LidarParams, sigma, R, alpha_db_per_km):
    loss = attenuation_loss(alpha_db_per_km, R)
    return received_power_lidar(p, sigma, R, loss) / noise_power_lidar(p)


def pixel_count(c: CameraParams, hfov, sigma_camera, R):
    """Object size in pixels under a pinhole model, clamped to the sensor size.

    The instantaneous field of view of one pixel is ``hfov / horizontal_pixels``;
    an object of silhouette area ``sigma_camera`` at range ``R`` covers
    ``sigma_camera / (R * ifov)**2`` pixels.
    """
    _check_range(R)
    R = np.asarray(R, dtype=float)
    ifov = hfov / c.horizontal_pixels
    n = sigma_camera / (R * ifov) ** 2
    return np.clip(n, 0.0, float(c.total_pixels))


def received_power_camera(c: CameraParams, hfov, sigma_camera, R, alpha_db_per_km, sun_irradiance):
    R = np.asarray(R, dtype=float)
    n_obj = pixel_count(c, hfov, sigma_camera, R)
    loss = attenuation_loss(alpha_db_per_km, R)
    return (sun_irradiance * sigma_camera * c.aperture_diameter**2 * n_obj) / (
        16.0 * R**2 * loss * c.total_pixels
    )


def _photon_energy(c: CameraParams):
    return PLANCK * c.radiation_frequency


def electrons_object(c: CameraParams, power):
    return power * c.integration_time * c.quantum_efficiency / _photon_energy(c)


def electrons_thermal(c: CameraParams):
    return (
        BOLTZMANN
        * c.noise_bandwidth
        * c.system_noise_temp
        * c.integration_time
        * c.quantum_efficiency
        / _photon_energy(c)
    )


def electrons_noise(c: CameraParams, n_electrons):
    return np.sqrt(n_electrons) + electrons_thermal(c)


def electrons_sun(c: CameraParams, sun_irradiance):
    return sun_irradiance * c.receiver_area * c.integration_time * c.quantum_efficiency / _photon_energy(c)


def snr_camera(c: CameraParams, hfov, sigma_camera, R, alpha_db_per_km, sun_irradiance, glare=False):
    p_r = received_power_camera(c, hfov, sigma_camera, R, alpha_db_per_km, sun_irradiance)
    n_e = electrons_object(c, p_r)
    noise = electrons_noise(c, n_e)
    if glare:
        noise = noise + electrons_sun(c, sun_irradiance)
    return n_e / noise


def sun_vector(azimuth, elevation):
    ce = math.cos(elevation)
    return (ce * math.cos(azimuth), ce * math.sin(azimuth), math.sin(elevation))


def glare_applies(spec: SensorSpec, env: Environment) -> bool:
    """True when a camera's boresight is within the glare cone around the sun."""
    if spec.kind is not SensorKind.CAMERA:
        raise ValueError(f"glare only applies to cameras, got {spec.kind.value}")
    if env.sun_direction is None:
        return False
    b = spec.boresight
    s = sun_vector(*env.sun_direction)
    cos_angle = max(-1.0, min(1.0, sum(bi * si for bi, si in zip(b, s))))
    return math.acos(cos_angle) <= env.glare_half_angle


def sensor_snr(spec: SensorSpec, sigma_active, sigma_camera, R, env: Environment, glare=None):
    """Linear SNR of one sensor against an object at range ``R`` (kind-dispatched).

    ``glare=None`` decides from the environment's sun direction.
    """
    alpha = env.alpha(spec.kind)
    if spec.kind in (SensorKind.ULTRASONIC, SensorKind.RADAR):
        return snr_active(spec.params, sigma_active, R, alpha)
    if spec.kind is SensorKind.LIDAR:
        return snr_lidar(spec.params, sigma_active, R, alpha)
    if glare is None:
        glare = glare_applies(spec, env)
    return snr_camera(spec.params, spec.hfov, sigma_camera, R, alpha, env.sun_irradiance, glare)
