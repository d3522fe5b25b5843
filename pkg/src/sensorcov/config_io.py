"""Loading, validating and writing setup, environment, object and scenario documents.

Documents are YAML (so plain JSON is accepted too). Angles may be given in
radians (``yaw``) or degrees (``yaw_deg``); documents are always written back
in radians so a round trip is exact.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import yaml

from .detection import DEFAULT_SLOPE, validate_curve, weather_curve
from .model import (
    PARAMS_FOR_KIND,
    ActiveParams,
    CameraParams,
    DetectionCurve,
    EgoVehicle,
    Environment,
    LidarParams,
    ObjectClass,
    Scenario,
    SensorKind,
    SensorSpec,
    TargetObject,
    Weather,
)
from .signal import SPEED_OF_LIGHT, SPEED_OF_SOUND

DEFAULT_VFOV = math.radians(30.0)
DEFAULT_GLARE_HALF_ANGLE = math.radians(60.0)
LIDAR_SMALL_ANGLE_LIMIT = 0.1  # rad

SETUP_PRESETS = ("system_a", "system_b")
ENVIRONMENT_PRESETS = ("clear", "rain", "fog", "clear_glare_front_right")

# Sun irradiance per weather (W/m^2); clear sky is the usual 1000 W/m^2 figure.
SUN_IRRADIANCE = {Weather.CLEAR: 1000.0, Weather.RAIN: 400.0, Weather.FOG: 300.0}
GLARE_SUN_DIRECTION = (math.radians(-45.0), math.radians(15.0))

# Active cross-section and camera silhouette in m^2; heights are assumptions.
OBJECTS = {
    ObjectClass.PEDESTRIAN: (1.0, 0.9, 1.8),
    ObjectClass.BIKE: (10.0, 1.35, 1.7),
    ObjectClass.CAR: (100.0, 2.7, 1.5),
    ObjectClass.TRUCK: (200.0, 6.75, 3.5),
}


class ConfigError(ValueError):
    """Malformed or invalid configuration document."""


# -- low level helpers --------------------------------------------------------


def _parse_yaml(text: str, source: str = "<document>") -> Any:
    try:
        return yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        raise ConfigError(f"{source}: parse error at {where}: {exc.problem}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"{source}: parse error: {exc}") from exc


def _mapping(doc, where: str) -> dict:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected a mapping")
    return doc


def _check_keys(doc: dict, allowed, where: str) -> None:
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise ConfigError(f"{where}: unknown field(s) {', '.join(unknown)}")


def _number(doc: dict, key: str, where: str, default=None) -> float:
    if key not in doc:
        if default is None:
            raise ConfigError(f"{where}.{key}: missing required field")
        return default
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key}: expected a number, got {value!r}")
    return float(value)


def _angle(doc: dict, key: str, where: str, default=None) -> float:
    deg_key = f"{key}_deg"
    if key in doc and deg_key in doc:
        raise ConfigError(f"{where}: give either {key} or {deg_key}, not both")
    if deg_key in doc:
        return math.radians(_number(doc, deg_key, where))
    return _number(doc, key, where, default)


def _positive(value: float, name: str, where: str) -> float:
    if not (value > 0 and math.isfinite(value)):
        raise ConfigError(f"{where}.{name}: must be strictly positive, got {value!r}")
    return value


def _enum(cls, value, where: str):
    try:
        return cls(str(value).lower())
    except ValueError:
        options = ", ".join(m.value for m in cls)
        raise ConfigError(f"{where}: unknown value {value!r} (expected one of {options})") from None


def _data_text(*parts: str) -> str:
    return resources.files("sensorcov").joinpath("data", *parts).read_text(encoding="utf-8")


# -- sensors ------------------------------------------------------------------


def _parse_active(doc: dict, kind: SensorKind, where: str) -> ActiveParams:
    _check_keys(
        doc,
        {"emit_power", "gain_emit", "gain_recv", "wavelength", "frequency", "pulse_width", "system_noise_temp"},
        where,
    )
    if "wavelength" in doc and "frequency" in doc:
        raise ConfigError(f"{where}: give either wavelength or frequency, not both")
    if "frequency" in doc:
        speed = SPEED_OF_SOUND if kind is SensorKind.ULTRASONIC else SPEED_OF_LIGHT
        wavelength = speed / _positive(_number(doc, "frequency", where), "frequency", where)
    else:
        wavelength = _number(doc, "wavelength", where)
    p = ActiveParams(
        emit_power=_number(doc, "emit_power", where),
        gain_emit=_number(doc, "gain_emit", where),
        gain_recv=_number(doc, "gain_recv", where),
        wavelength=wavelength,
        pulse_width=_number(doc, "pulse_width", where),
        system_noise_temp=_number(doc, "system_noise_temp", where),
    )
    for f in fields(p):
        _positive(getattr(p, f.name), f.name, where)
    return p


def _optical_frequency(doc: dict, where: str) -> float:
    if "wavelength" in doc and "radiation_frequency" in doc:
        raise ConfigError(f"{where}: give either wavelength or radiation_frequency, not both")
    if "wavelength" in doc:
        return SPEED_OF_LIGHT / _positive(_number(doc, "wavelength", where), "wavelength", where)
    return _number(doc, "radiation_frequency", where)


def _parse_lidar(doc: dict, where: str) -> LidarParams:
    _check_keys(
        doc,
        {"emit_power", "receiver_area", "beam_divergence", "beam_divergence_deg", "radiation_frequency",
         "wavelength", "noise_bandwidth", "system_noise_temp"},
        where,
    )
    p = LidarParams(
        emit_power=_number(doc, "emit_power", where),
        receiver_area=_number(doc, "receiver_area", where),
        beam_divergence=_angle(doc, "beam_divergence", where),
        radiation_frequency=_optical_frequency(doc, where),
        noise_bandwidth=_number(doc, "noise_bandwidth", where),
        system_noise_temp=_number(doc, "system_noise_temp", where),
    )
    for f in fields(p):
        _positive(getattr(p, f.name), f.name, where)
    if p.beam_divergence > LIDAR_SMALL_ANGLE_LIMIT:
        warnings.warn(
            f"{where}.beam_divergence = {p.beam_divergence:.3g} rad is outside the small-angle regime",
            stacklevel=2,
        )
    return p


def _parse_camera(doc: dict, where: str) -> CameraParams:
    _check_keys(
        doc,
        {"aperture_diameter", "total_pixels", "horizontal_pixels", "integration_time", "quantum_efficiency",
         "radiation_frequency", "wavelength", "noise_bandwidth", "system_noise_temp", "receiver_area"},
        where,
    )
    d = _number(doc, "aperture_diameter", where)
    total = _number(doc, "total_pixels", where)
    horizontal = _number(doc, "horizontal_pixels", where)
    for name, v in (("total_pixels", total), ("horizontal_pixels", horizontal)):
        if v != int(v):
            raise ConfigError(f"{where}.{name}: must be an integer pixel count")
    p = CameraParams(
        aperture_diameter=d,
        total_pixels=int(total),
        horizontal_pixels=int(horizontal),
        integration_time=_number(doc, "integration_time", where),
        quantum_efficiency=_number(doc, "quantum_efficiency", where),
        radiation_frequency=_optical_frequency(doc, where),
        noise_bandwidth=_number(doc, "noise_bandwidth", where),
        system_noise_temp=_number(doc, "system_noise_temp", where),
        receiver_area=_number(doc, "receiver_area", where, default=math.pi * d * d / 4),
    )
    for f in fields(p):
        _positive(getattr(p, f.name), f.name, where)
    if p.quantum_efficiency > 1:
        raise ConfigError(f"{where}.quantum_efficiency: must be <= 1")
    if p.horizontal_pixels > p.total_pixels:
        raise ConfigError(f"{where}.horizontal_pixels: exceeds total_pixels")
    return p


_SENSOR_KEYS = {
    "id", "kind", "position", "yaw", "yaw_deg", "pitch", "pitch_deg", "hfov", "hfov_deg",
    "vfov", "vfov_deg", "max_range", "params",
}


def parse_sensor(doc: dict, where: str = "sensor") -> SensorSpec:
    doc = _mapping(doc, where)
    _check_keys(doc, _SENSOR_KEYS, where)
    if "id" not in doc:
        raise ConfigError(f"{where}.id: missing required field")
    sid = str(doc["id"])
    kind = _enum(SensorKind, doc.get("kind"), f"{where}.kind")
    pos = doc.get("position")
    if not (isinstance(pos, (list, tuple)) and len(pos) == 3):
        raise ConfigError(f"{where}.position: expected [x, y, z]")
    position = tuple(_number({"v": v}, "v", f"{where}.position") for v in pos)
    hfov = _angle(doc, "hfov", where)
    vfov = _angle(doc, "vfov", where, DEFAULT_VFOV)
    if not 0 < hfov <= 2 * math.pi:
        raise ConfigError(f"{where}.hfov: hfov out of range (0, 2*pi], got {hfov!r}")
    if not 0 < vfov <= math.pi:
        raise ConfigError(f"{where}.vfov: vfov out of range (0, pi], got {vfov!r}")
    max_range = _positive(_number(doc, "max_range", where), "max_range", where)
    params_doc = _mapping(doc.get("params"), f"{where}.params")
    if kind in (SensorKind.ULTRASONIC, SensorKind.RADAR):
        params = _parse_active(params_doc, kind, f"{where}.params")
    elif kind is SensorKind.LIDAR:
        params = _parse_lidar(params_doc, f"{where}.params")
    else:
        params = _parse_camera(params_doc, f"{where}.params")
    return SensorSpec(
        id=sid,
        kind=kind,
        position=position,
        yaw=_angle(doc, "yaw", where, 0.0),
        pitch=_angle(doc, "pitch", where, 0.0),
        hfov=hfov,
        vfov=vfov,
        max_range=max_range,
        params=params,
    )


def validate_sensor(spec: SensorSpec) -> None:
    """Re-check invariants of a programmatically built sensor."""
    if not isinstance(spec.params, PARAMS_FOR_KIND[spec.kind]):
        raise ConfigError(f"{spec.id}: params type does not match kind {spec.kind.value}")
    parse_sensor(sensor_to_dict(spec), spec.id)


@dataclass(frozen=True)
class SetupDocument:
    name: str
    sensors: Tuple[SensorSpec, ...]
    published_fields: Tuple[str, ...] = ()
    source: str = "<document>"


def parse_setup(text: str, source: str = "<document>") -> SetupDocument:
    doc = _parse_yaml(text, source)
    if isinstance(doc, list):
        doc = {"sensors": doc}
    doc = _mapping(doc, source)
    _check_keys(doc, {"name", "description", "templates", "sensors", "provenance"}, source)
    raw = doc.get("sensors")
    if not isinstance(raw, list):
        raise ConfigError(f"{source}.sensors: expected a list")
    sensors = tuple(parse_sensor(s, f"sensors[{i}]") for i, s in enumerate(raw))
    seen = set()
    for s in sensors:
        if s.id in seen:
            raise ConfigError(f"{source}: duplicate sensor id {s.id!r}")
        seen.add(s.id)
    prov = _mapping(doc.get("provenance") or {}, f"{source}.provenance")
    return SetupDocument(
        name=str(doc.get("name", Path(source).stem)),
        sensors=sensors,
        published_fields=tuple(prov.get("published", ())),
        source=source,
    )


def load_setup(text: str, source: str = "<document>") -> List[SensorSpec]:
    return list(parse_setup(text, source).sensors)


def sensor_to_dict(spec: SensorSpec) -> dict:
    return {
        "id": spec.id,
        "kind": spec.kind.value,
        "position": [float(v) for v in spec.position],
        "yaw": spec.yaw,
        "pitch": spec.pitch,
        "hfov": spec.hfov,
        "vfov": spec.vfov,
        "max_range": spec.max_range,
        "params": {f.name: getattr(spec.params, f.name) for f in fields(spec.params)},
    }


def dump_setup(sensors: Sequence[SensorSpec], name: Optional[str] = None, published_fields=()) -> str:
    doc: Dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    if published_fields:
        doc["provenance"] = {"published": list(published_fields)}
    doc["sensors"] = [sensor_to_dict(s) for s in sensors]
    return yaml.safe_dump(doc, sort_keys=False)


def preset_setup(name: str) -> SetupDocument:
    if name not in SETUP_PRESETS:
        raise ConfigError(f"unknown setup preset {name!r} (expected one of {', '.join(SETUP_PRESETS)})")
    return parse_setup(_data_text("presets", f"{name}.yaml"), f"preset:{name}")


def resolve_setup(ref: str) -> SetupDocument:
    """A preset name or a path to a setup document."""
    if ref in SETUP_PRESETS:
        return preset_setup(ref)
    return parse_setup(_read(ref), ref)


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"{path}: no such file or preset")
    return p.read_text(encoding="utf-8")


# -- environments -------------------------------------------------------------


def attenuation_table() -> dict:
    return json.loads(_data_text("attenuation.json"))


def attenuation_for(weather: Weather) -> Dict[SensorKind, float]:
    table = attenuation_table()
    return {
        SensorKind(kind): float(table["values"][band][Weather(weather).value])
        for kind, band in table["kind_band"].items()
    }


def builtin_environment(name: str) -> Environment:
    if name not in ENVIRONMENT_PRESETS:
        raise ConfigError(f"unknown environment {name!r} (expected one of {', '.join(ENVIRONMENT_PRESETS)})")
    weather = Weather.CLEAR if name == "clear_glare_front_right" else Weather(name)
    return Environment(
        name=name,
        weather=weather,
        attenuation=attenuation_for(weather),
        sun_irradiance=SUN_IRRADIANCE[weather],
        sun_direction=GLARE_SUN_DIRECTION if name == "clear_glare_front_right" else None,
        glare_half_angle=DEFAULT_GLARE_HALF_ANGLE,
        curve=weather_curve(weather),
    )


def parse_environment(text: str, source: str = "<document>") -> Environment:
    doc = _mapping(_parse_yaml(text, source), source)
    _check_keys(
        doc,
        {"name", "weather", "attenuation", "sun_irradiance", "sun_direction", "glare_half_angle",
         "glare_half_angle_deg", "detection_curve"},
        source,
    )
    weather = _enum(Weather, doc.get("weather", "clear"), f"{source}.weather")
    attenuation = attenuation_for(weather)
    overrides = _mapping(doc.get("attenuation") or {}, f"{source}.attenuation")
    for key in overrides:
        kind = _enum(SensorKind, key, f"{source}.attenuation")
        attenuation[kind] = _number(overrides, key, f"{source}.attenuation")
    for kind, a in attenuation.items():
        if not (a >= 0 and math.isfinite(a)):
            raise ConfigError(f"{source}.attenuation.{kind.value}: must be >= 0")
    e_sun = _number(doc, "sun_irradiance", source, SUN_IRRADIANCE[weather])
    if e_sun < 0:
        raise ConfigError(f"{source}.sun_irradiance: must be >= 0")
    sun = doc.get("sun_direction")
    if sun is not None:
        sun = _mapping(sun, f"{source}.sun_direction")
        _check_keys(sun, {"azimuth", "azimuth_deg", "elevation", "elevation_deg"}, f"{source}.sun_direction")
        sun = (_angle(sun, "azimuth", f"{source}.sun_direction"), _angle(sun, "elevation", f"{source}.sun_direction"))
    glare = _angle(doc, "glare_half_angle", source, DEFAULT_GLARE_HALF_ANGLE)
    if not 0 < glare < math.pi:
        raise ConfigError(f"{source}.glare_half_angle: must lie in (0, pi)")
    base = weather_curve(weather)
    cdoc = _mapping(doc.get("detection_curve") or {}, f"{source}.detection_curve")
    _check_keys(cdoc, {"midpoint_db", "slope"}, f"{source}.detection_curve")
    curve = DetectionCurve(
        midpoint_db=_number(cdoc, "midpoint_db", f"{source}.detection_curve", base.midpoint_db),
        slope=_number(cdoc, "slope", f"{source}.detection_curve", DEFAULT_SLOPE),
    )
    try:
        validate_curve(curve)
    except ValueError as exc:
        raise ConfigError(f"{source}.detection_curve: {exc}") from None
    return Environment(
        name=str(doc.get("name", Path(source).stem)),
        weather=weather,
        attenuation=attenuation,
        sun_irradiance=e_sun,
        sun_direction=sun,
        glare_half_angle=glare,
        curve=curve,
    )


def environment_to_dict(env: Environment) -> dict:
    return {
        "name": env.name,
        "weather": env.weather.value,
        "attenuation": {k.value: env.attenuation[k] for k in SensorKind},
        "sun_irradiance": env.sun_irradiance,
        "sun_direction": None
        if env.sun_direction is None
        else {"azimuth": env.sun_direction[0], "elevation": env.sun_direction[1]},
        "glare_half_angle": env.glare_half_angle,
        "detection_curve": {"midpoint_db": env.curve.midpoint_db, "slope": env.curve.slope},
    }


def resolve_environment(ref: str) -> Environment:
    if ref in ENVIRONMENT_PRESETS:
        return builtin_environment(ref)
    return parse_environment(_read(ref), ref)


# -- objects ------------------------------------------------------------------


def builtin_object(object_class) -> TargetObject:
    cls = ObjectClass(object_class)
    sigma, sigma_cam, height = OBJECTS[cls]
    return TargetObject(cls, sigma, sigma_cam, height)


def parse_object(text: str, source: str = "<document>") -> TargetObject:
    doc = _mapping(_parse_yaml(text, source), source)
    _check_keys(doc, {"class", "sigma_active", "sigma_camera", "height"}, source)
    cls = _enum(ObjectClass, doc.get("class"), f"{source}.class")
    base = builtin_object(cls)
    obj = TargetObject(
        cls,
        _number(doc, "sigma_active", source, base.sigma_active),
        _number(doc, "sigma_camera", source, base.sigma_camera),
        _number(doc, "height", source, base.height),
    )
    for name in ("sigma_active", "sigma_camera", "height"):
        _positive(getattr(obj, name), name, source)
    return obj


def object_to_dict(obj: TargetObject) -> dict:
    return {
        "class": obj.object_class.value,
        "sigma_active": obj.sigma_active,
        "sigma_camera": obj.sigma_camera,
        "height": obj.height,
    }


def resolve_object(ref: str) -> TargetObject:
    try:
        return builtin_object(ref.lower())
    except ValueError:
        return parse_object(_read(ref), ref)


# -- scenarios ----------------------------------------------------------------


def parse_scenario(text: str, source: str = "<document>") -> Scenario:
    doc = _mapping(_parse_yaml(text, source), source)
    _check_keys(doc, {"grid", "eval_heights", "path", "highway", "front_only", "ego"}, source)
    grid = _mapping(doc.get("grid"), f"{source}.grid")
    _check_keys(grid, {"extent", "resolution"}, f"{source}.grid")
    extent = grid.get("extent")
    if not (isinstance(extent, list) and len(extent) == 4):
        raise ConfigError(f"{source}.grid.extent: expected [x_min, x_max, y_min, y_max]")
    extent = tuple(_number({"v": v}, "v", f"{source}.grid.extent") for v in extent)
    if not (extent[1] > extent[0] and extent[3] > extent[2]):
        raise ConfigError(f"{source}.grid.extent: extents are degenerate")
    res = _positive(_number(grid, "resolution", f"{source}.grid"), "resolution", f"{source}.grid")
    heights = doc.get("eval_heights", [0.75])
    if not (isinstance(heights, list) and heights):
        raise ConfigError(f"{source}.eval_heights: expected a non-empty list")
    heights = tuple(sorted(_number({"v": h}, "v", f"{source}.eval_heights") for h in heights))

    ego_doc = _mapping(doc.get("ego") or {}, f"{source}.ego")
    _check_keys(ego_doc, {"length", "width", "front_axle_x"}, f"{source}.ego")
    default_ego = EgoVehicle()
    ego = EgoVehicle(
        length=_positive(_number(ego_doc, "length", f"{source}.ego", default_ego.length), "length", f"{source}.ego"),
        width=_positive(_number(ego_doc, "width", f"{source}.ego", default_ego.width), "width", f"{source}.ego"),
        front_axle_x=_number(ego_doc, "front_axle_x", f"{source}.ego", default_ego.front_axle_x),
    )

    path = step = None
    if "path" in doc and "highway" in doc:
        raise ConfigError(f"{source}: give either path or highway, not both")
    if "path" in doc:
        pdoc = _mapping(doc["path"], f"{source}.path")
        _check_keys(pdoc, {"points", "step"}, f"{source}.path")
        pts = pdoc.get("points")
        if not (isinstance(pts, list) and pts and all(isinstance(p, list) and len(p) == 2 for p in pts)):
            raise ConfigError(f"{source}.path.points: expected a list of [x, y]")
        path = tuple((float(p[0]), float(p[1])) for p in pts)
        step = _positive(_number(pdoc, "step", f"{source}.path"), "step", f"{source}.path")
    elif "highway" in doc:
        from .analysis import highway_path  # deferred: analysis depends on this module's types only

        hdoc = _mapping(doc["highway"], f"{source}.highway")
        _check_keys(hdoc, {"radius", "lane_offset", "step", "straight_length", "length", "turn", "start_x"},
                    f"{source}.highway")
        kwargs = {k: hdoc[k] for k in ("straight_length", "length", "turn", "start_x") if k in hdoc}
        try:
            hp = highway_path(
                _number(hdoc, "radius", f"{source}.highway"),
                _number(hdoc, "lane_offset", f"{source}.highway"),
                _number(hdoc, "step", f"{source}.highway"),
                **kwargs,
            )
        except ValueError as exc:
            raise ConfigError(f"{source}.highway: {exc}") from None
        path = tuple(map(tuple, hp.points.tolist()))
        step = hp.step
    front_only = doc.get("front_only", True)
    if not isinstance(front_only, bool):
        raise ConfigError(f"{source}.front_only: expected true or false")
    return Scenario(extent, res, heights, path, step, front_only, ego)


def resolve_scenario(ref: str) -> Scenario:
    return parse_scenario(_read(ref), ref)


# -- provenance ---------------------------------------------------------------


def setup_parameter_rows(doc: SetupDocument) -> List[dict]:
    """One row per sensor parameter, flagged ``published`` or ``assumed``."""
    rows = []
    published = set(doc.published_fields)
    for s in doc.sensors:
        d = sensor_to_dict(s)
        params = d.pop("params")
        for key, value in d.items():
            if key in ("id", "kind"):
                continue
            rows.append({"name": f"{doc.name}.{s.id}.{key}", "value": value,
                         "status": "published" if key in published else "assumed"})
        for key, value in params.items():
            rows.append({"name": f"{doc.name}.{s.id}.params.{key}", "value": value,
                         "status": "published" if f"params.{key}" in published else "assumed"})
    return rows


def environment_parameter_rows(env: Environment, builtin: bool) -> List[dict]:
    rows = []
    for kind in SensorKind:
        published = builtin and kind is SensorKind.ULTRASONIC
        rows.append({"name": f"env.attenuation.{kind.value}", "value": env.attenuation[kind],
                     "status": "published" if published else "assumed"})
    rows.append({"name": "env.sun_irradiance", "value": env.sun_irradiance, "status": "assumed"})
    rows.append({"name": "env.sun_direction",
                 "value": None if env.sun_direction is None else list(env.sun_direction), "status": "assumed"})
    rows.append({"name": "env.glare_half_angle", "value": env.glare_half_angle, "status": "assumed"})
    anchor = builtin and env.weather is Weather.CLEAR and env.curve.midpoint_db == 10.0
    rows.append({"name": "env.detection_curve.midpoint_db", "value": env.curve.midpoint_db,
                 "status": "published" if anchor else "assumed"})
    rows.append({"name": "env.detection_curve.slope", "value": env.curve.slope, "status": "assumed"})
    return rows


def object_parameter_rows(obj: TargetObject, builtin: bool) -> List[dict]:
    status = "published" if builtin else "assumed"
    return [
        {"name": "object.sigma_active", "value": obj.sigma_active, "status": status},
        {"name": "object.sigma_camera", "value": obj.sigma_camera, "status": status},
        {"name": "object.height", "value": obj.height, "status": "assumed"},
    ]
