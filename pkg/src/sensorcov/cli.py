"""Command-line front end: ``sensorcov {nearfield,farfield,compare,dump-snr}``.

Exit codes: 0 success, 1 I/O failure while writing outputs, 2 invalid
configuration, missing input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import __version__, analysis, config_io, export
from .config_io import ConfigError
from .detection import DEFAULT_SLOPE, WEATHER_MIDPOINTS_DB
from .geometry import CoverageGrid, default_blind_heights
from .model import EgoVehicle, ObjectClass, SensorKind

NEAR_GRID_RES = 0.05
FAR_GRID_RES = 0.5
NEAR_HALF_EXTENT = 10.0
FAR_MARGIN = 10.0

HIGHWAY_RADIUS = 500.0
HIGHWAY_LANE_OFFSET = 3.5
HIGHWAY_LENGTH = 303.0
HIGHWAY_STEP = 1.0

EXIT_OK, EXIT_IO, EXIT_CONFIG = 0, 1, 2


@dataclass
class RunManifest:
    command: str
    inputs: dict
    parameters: List[dict]
    version: str = __version__
    outputs: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "parameters": self.parameters,
            "version": self.version,
            "outputs": sorted(self.outputs),
        }


class _Writer:
    """Writes outputs into one directory and remembers their names."""

    def __init__(self, out_dir: Path, fmt: str):
        self.out_dir = Path(out_dir)
        self.fmt = fmt
        self.names: List[str] = []

    @property
    def csv(self) -> bool:
        return self.fmt in ("csv", "both")

    @property
    def image(self) -> bool:
        return self.fmt in ("image", "both")

    def path(self, name: str) -> Path:
        self.names.append(name)
        return self.out_dir / name

    def text(self, name: str, text: str):
        export.write_text(self.path(name), text)

    def grid(self, stem: str, grid: CoverageGrid, gray=None):
        if self.csv:
            self.text(f"{stem}.csv", export.grid_to_csv(grid))
        if self.image and gray is not None:
            export.write_bytes(self.path(f"{stem}.pgm"), export.pgm_bytes(gray))

    def manifest(self, stem: str, manifest: RunManifest):
        name = f"{stem}_manifest.json"
        manifest.outputs = list(self.names) + [name]
        export.write_text(self.out_dir / name, export.json_text(manifest.to_dict()))


def _slug(ref: str) -> str:
    return Path(ref).stem if ("/" in ref or "." in ref) else ref


def _constant_rows(**values) -> List[dict]:
    return [{"name": k, "value": v, "status": "assumed"} for k, v in sorted(values.items())]


def _curve_rows() -> List[dict]:
    rows = _constant_rows(**{f"detection.midpoint_db.{w.value}": m for w, m in WEATHER_MIDPOINTS_DB.items()})
    rows[[r["name"] for r in rows].index("detection.midpoint_db.clear")]["status"] = "published"
    return rows + _constant_rows(**{"detection.slope_per_db": DEFAULT_SLOPE})


def _ego_rows(ego: EgoVehicle) -> List[dict]:
    return _constant_rows(**{"ego.length": ego.length, "ego.width": ego.width, "ego.front_axle_x": ego.front_axle_x})


def _setup_and_rows(ref: str):
    doc = config_io.resolve_setup(ref)
    return doc, config_io.setup_parameter_rows(doc)


def _env_and_rows(ref: str):
    env = config_io.resolve_environment(ref)
    return env, config_io.environment_parameter_rows(env, ref in config_io.ENVIRONMENT_PRESETS)


def _object_and_rows(ref: str):
    obj = config_io.resolve_object(ref)
    builtin = ref.lower() in {c.value for c in ObjectClass}
    return obj, config_io.object_parameter_rows(obj, builtin)


def _scenario(args):
    return config_io.resolve_scenario(args.scenario) if getattr(args, "scenario", None) else None


def _prepare_out_dir(out_dir: str) -> Path:
    p = Path(out_dir)
    p.mkdir(parents=True, exist_ok=True)
    return p


# -- near field ---------------------------------------------------------------


def cmd_nearfield(args) -> int:
    doc, rows = _setup_and_rows(args.setup)
    sc = _scenario(args)
    res = args.grid_res if args.grid_res is not None else (sc.grid_resolution if sc else NEAR_GRID_RES)
    if sc:
        extent, heights, ego = sc.grid_extent, sc.eval_heights, sc.ego
    else:
        h = args.extent
        extent, ego = (-h, h, -h, h), EgoVehicle()
        heights = default_blind_heights(args.height if args.height is not None else analysis.NEAR_FIELD_MIN_HEIGHT)
    grid = CoverageGrid(extent, res)
    report = analysis.near_field(doc.sensors, grid, heights, ego,
                                 {"setup": doc.name, "version": __version__,
                                  "assumptions": ["vertical fields of view", "sensor mounting poses"]})

    out = _prepare_out_dir(args.out_dir)
    w = _Writer(out, args.format)
    stem = f"nearfield_{_slug(args.setup)}"
    w.text(f"{stem}.json", export.json_text(report.to_dict()))
    w.grid(f"{stem}_blind", report.blind_mask, export.to_gray(report.blind_mask.cells))
    w.grid(f"{stem}_uncovered", report.uncovered_at_min_height, export.to_gray(report.uncovered_at_min_height.cells))
    if w.image:
        from . import plotting

        plotting.near_field_figure(report.blind_mask, report.uncovered_at_min_height, w.path(f"{stem}.png"),
                                   f"{doc.name}: blind {report.blind_area:.2f} m^2", doc.sensors, ego)
    params = rows + _ego_rows(ego) + _constant_rows(
        **{"grid.resolution": res, "grid.extent": list(extent), "near_field.heights": list(heights)})
    w.manifest(stem, RunManifest("nearfield", {"setup": args.setup, "scenario": args.scenario}, params))
    print(f"{doc.name}: blind area {report.blind_area:.4f} m^2, "
          f"uncovered at {heights[0]} m {report.uncovered_area:.4f} m^2")
    return EXIT_OK


# -- far field ----------------------------------------------------------------


def _far_path(args, sc):
    if sc and sc.path is not None:
        return analysis.Path(np.asarray(sc.path, dtype=float), sc.path_step), {"source": args.scenario}
    step = args.path_step
    path = analysis.highway_path(HIGHWAY_RADIUS, HIGHWAY_LANE_OFFSET, step, length=args.path_length)
    return path, {"radius": HIGHWAY_RADIUS, "lane_offset": HIGHWAY_LANE_OFFSET, "length": args.path_length,
                  "step": step, "turn": "right", "start_x": EgoVehicle().front_axle_x}


def _far_extent(points: np.ndarray, res: float):
    def down(v):
        return math.floor(v / res) * res

    def up(v):
        return math.ceil(v / res) * res

    x_min = min(-FAR_MARGIN, down(points[:, 0].min() - FAR_MARGIN))
    x_max = up(points[:, 0].max() + FAR_MARGIN)
    y_min = down(points[:, 1].min() - FAR_MARGIN)
    y_max = max(FAR_MARGIN, up(points[:, 1].max() + FAR_MARGIN))
    return (x_min, x_max, y_min, y_max)


def run_far_field(setup_ref: str, env_ref: str, obj_ref: str, height: float, path_step: float = HIGHWAY_STEP,
                  path_length: float = HIGHWAY_LENGTH, scenario: Optional[str] = None):
    """Far-field report plus manifest rows for one setup/environment/object triple."""
    doc, srows = _setup_and_rows(setup_ref)
    env, erows = _env_and_rows(env_ref)
    obj, orows = _object_and_rows(obj_ref)
    sc = config_io.resolve_scenario(scenario) if scenario else None
    ns = argparse.Namespace(scenario=scenario, path_step=path_step, path_length=path_length)
    path, path_meta = _far_path(ns, sc)
    ego = sc.ego if sc else EgoVehicle()
    front_only = sc.front_only if sc else True
    report = analysis.far_field(doc.sensors, obj, env, path, height, ego, front_only,
                                {"setup": doc.name, "path": path_meta,
                                 "assumptions": ["path length and start point", "lane width",
                                                 "vertical fields of view", "sensor parameters"]})
    rows = srows + erows + orows + _curve_rows() + _ego_rows(ego) + _constant_rows(
        **{"far_field.eval_height": height, "bucket.p_one": analysis.P_ONE, "bucket.p_zero": analysis.P_ZERO,
           "path.step": path.step, "path.front_only": front_only})
    if not sc or sc.path is None:
        rows += _constant_rows(**{f"path.{k}": v for k, v in path_meta.items() if k != "step"})
    return doc, env, obj, path, report, rows


def cmd_farfield(args) -> int:
    doc, env, obj, path, report, rows = run_far_field(args.setup, args.env, args.object, args.height,
                                                      args.path_step, args.path_length, args.scenario)
    res = args.grid_res if args.grid_res is not None else FAR_GRID_RES
    out = _prepare_out_dir(args.out_dir)
    w = _Writer(out, args.format)
    stem = f"farfield_{_slug(args.setup)}_{_slug(args.env)}_{obj.object_class.value}"
    doc_out = report.to_dict()
    w.text(f"{stem}.json", export.json_text(doc_out))
    w.text(f"{stem}_path.csv", export.rows_to_csv(
        ["x", "y", "p"], [(x, y, p) for (x, y), p in zip(report.points.tolist(), report.probabilities.tolist())]))

    grid = analysis.detection_map(doc.sensors, obj, env, CoverageGrid(_far_extent(path.points, res), res),
                                  args.height)
    w.grid(f"{stem}_probability", grid, export.to_gray(grid.cells))
    if w.image:
        from . import plotting

        plotting.probability_figure(grid, w.path(f"{stem}.png"),
                                    f"{doc.name}, {env.name}, {obj.object_class.value} at {args.height} m",
                                    report.points)
    if args.dump_snr:
        _dump_snr(w, doc, env, obj, args.dump_snr, grid, args.height, "auto", stem)
    rows += _constant_rows(**{"grid.resolution": res, "grid.extent": list(grid.extent)})
    w.manifest(stem, RunManifest("farfield", {"setup": args.setup, "env": args.env, "object": args.object,
                                              "scenario": args.scenario}, rows))
    single = {"labels": [f"{doc.name}/{env.name}"],
              "rows": [{"bucket": b, "values": [report.buckets[b]], "deltas": [0.0]} for b in analysis.BUCKETS]}
    print(analysis.format_table(single))
    return EXIT_OK


# -- compare ------------------------------------------------------------------


def _load_report(ref: str) -> analysis.FarFieldReport:
    p = Path(ref)
    if not p.is_file():
        raise ConfigError(f"{ref}: no such report file")
    try:
        return analysis.FarFieldReport.from_dict(json.loads(p.read_text(encoding="utf-8")))
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"{ref}: not a far-field report ({exc})") from None


def _report_for(ref: str, args):
    if ref.endswith(".json") or Path(ref).is_file():
        r = _load_report(ref)
        return r, f"{r.metadata.get('setup', '?')}/{r.metadata.get('environment', '?')}", []
    parts = ref.split(":")
    if len(parts) not in (2, 3) or not all(parts):
        raise ConfigError(f"{ref}: expected a report file or setup:env[:object]")
    obj_ref = parts[2] if len(parts) == 3 else "car"
    doc, env, _, _, report, rows = run_far_field(parts[0], parts[1], obj_ref, args.height,
                                                 args.path_step, args.path_length)
    return report, f"{doc.name}/{env.name}", rows


def cmd_compare(args) -> int:
    reports, labels, rows = [], [], []
    for ref in args.inputs:
        r, label, r_rows = _report_for(ref, args)
        reports.append(r)
        labels.append(label)
        rows.extend(r_rows)
    table = analysis.compare(reports, labels)
    text = analysis.format_table(table)
    out = _prepare_out_dir(args.out_dir)
    w = _Writer(out, "csv")
    w.text("compare.txt", text + "\n")
    w.text("compare.csv", export.rows_to_csv(
        ["bucket"] + labels, [[row["bucket"]] + row["values"] for row in table["rows"]]))
    w.text("compare.json", export.json_text(table))
    seen, unique = set(), []
    for row in rows:
        if row["name"] not in seen:
            seen.add(row["name"])
            unique.append(row)
    w.manifest("compare", RunManifest("compare", {"inputs": list(args.inputs)}, unique))
    print(text)
    return EXIT_OK


# -- SNR dump -----------------------------------------------------------------


def _dump_snr(w: _Writer, doc, env, obj, sensor_id: str, grid: CoverageGrid, height: float, glare: str,
              stem: str):
    specs = {s.id: s for s in doc.sensors}
    if sensor_id not in specs:
        raise ConfigError(f"unknown sensor id {sensor_id!r} in setup {doc.name} "
                          f"(available: {', '.join(sorted(specs))})")
    spec = specs[sensor_id]
    flag = None if glare == "auto" else glare == "on"
    if flag is not None and spec.kind is not SensorKind.CAMERA:
        raise ConfigError(f"--glare {glare} only applies to cameras; {sensor_id} is {spec.kind.value}")
    snr = analysis.snr_map(spec, obj, env, grid, height, flag)
    # CSV is always written for dumps; the image follows --format.
    export.write_text(w.path(f"{stem}_snr_{sensor_id}.csv"), export.grid_to_csv(snr))
    if w.image:
        from . import plotting

        plotting.snr_figure(snr, w.path(f"{stem}_snr_{sensor_id}.png"), f"{sensor_id} SNR, {env.name}")
    return snr


def cmd_dump_snr(args) -> int:
    doc, srows = _setup_and_rows(args.setup)
    env, erows = _env_and_rows(args.env)
    obj, orows = _object_and_rows(args.object)
    specs = {s.id: s for s in doc.sensors}
    if args.sensor not in specs:
        raise ConfigError(f"unknown sensor id {args.sensor!r} in setup {doc.name} "
                          f"(available: {', '.join(sorted(specs))})")
    spec = specs[args.sensor]
    res = args.grid_res if args.grid_res is not None else FAR_GRID_RES
    reach = min(spec.max_range, 300.0) + res
    x0, y0 = spec.position[0], spec.position[1]
    extent = (math.floor((x0 - reach) / res) * res, math.ceil((x0 + reach) / res) * res,
              math.floor((y0 - reach) / res) * res, math.ceil((y0 + reach) / res) * res)
    out = _prepare_out_dir(args.out_dir)
    w = _Writer(out, args.format)
    stem = f"snr_{_slug(args.setup)}_{_slug(args.env)}_{obj.object_class.value}_glare-{args.glare}"
    _dump_snr(w, doc, env, obj, args.sensor, CoverageGrid(extent, res), args.height, args.glare, stem)
    rows = [r for r in srows if f".{args.sensor}." in r["name"]] + erows + orows + _constant_rows(
        **{"grid.resolution": res, "grid.extent": list(extent), "eval_height": args.height, "glare": args.glare})
    w.manifest(stem, RunManifest("dump-snr", {"setup": args.setup, "env": args.env, "object": args.object,
                                              "sensor": args.sensor}, rows))
    print(f"wrote {w.names[0]}")
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, far: bool):
    p.add_argument("--setup", required=True, help="preset name (system_a, system_b) or setup file")
    p.add_argument("--grid-res", type=float, default=None,
                   help=f"grid resolution in m (default {FAR_GRID_RES if far else NEAR_GRID_RES})")
    p.add_argument("--out-dir", default="out", help="output directory (default ./out)")
    p.add_argument("--format", choices=("csv", "image", "both"), default="both")


def _add_path_flags(p: argparse.ArgumentParser):
    p.add_argument("--path-step", type=float, default=HIGHWAY_STEP, help="path sample spacing in m")
    p.add_argument("--path-length", type=float, default=HIGHWAY_LENGTH, help="path length in m")
    p.add_argument("--height", type=float, default=analysis.FAR_FIELD_HEIGHT, help="evaluation height in m")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sensorcov", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nearfield", help="blind-spot map around the ego vehicle")
    _add_common(p, far=False)
    p.add_argument("--height", type=float, default=None,
                   help="lowest evaluated object height in m (default 0.1); slices run up to 2.0 m")
    p.add_argument("--extent", type=float, default=NEAR_HALF_EXTENT, help="grid half-size in m (default 10)")
    p.add_argument("--scenario", default=None, help="scenario file overriding grid, heights and ego")
    p.set_defaults(func=cmd_nearfield)

    p = sub.add_parser("farfield", help="detection probability along the highway path")
    _add_common(p, far=True)
    p.add_argument("--env", default="clear", help="environment preset or file")
    p.add_argument("--object", default="car", help="object class or object file")
    _add_path_flags(p)
    p.add_argument("--scenario", default=None, help="scenario file with path and ego overrides")
    p.add_argument("--dump-snr", default=None, metavar="SENSOR_ID", help="also write that sensor's SNR grid")
    p.set_defaults(func=cmd_farfield)

    p = sub.add_parser("compare", help="side-by-side far-field bucket table")
    p.add_argument("inputs", nargs="+", help="far-field report JSON files or setup:env[:object] specs")
    p.add_argument("--out-dir", default="out")
    _add_path_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dump-snr", help="per-cell SNR (dB) of one sensor")
    _add_common(p, far=True)
    p.add_argument("--sensor", "--dump-snr", dest="sensor", required=True, help="sensor id")
    p.add_argument("--env", default="clear")
    p.add_argument("--object", default="car")
    p.add_argument("--height", type=float, default=analysis.FAR_FIELD_HEIGHT)
    p.add_argument("--glare", choices=("auto", "on", "off"), default="auto",
                   help="camera glare: from the environment (auto) or forced")
    p.set_defaults(func=cmd_dump_snr)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.inputs) < 2:
        parser.error("compare needs at least two inputs")
    try:
        return args.func(args)
    except (ConfigError, analysis.ReportMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
