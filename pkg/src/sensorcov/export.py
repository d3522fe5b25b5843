"""Deterministic writers for grids and reports.

CSV grids are row-major with one row per y-center, ascending. The header
row is ``y\\x`` followed by the x-centers; every later row starts with its
y-center. Numbers use Python's shortest round-trip ``repr``; booleans are
``0``/``1`` and cells without a value are ``nan``.

Portable graymaps (binary ``P5``) are written image-style: the first image
row is the largest y, so +x points right and +y points up when viewed.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .geometry import CoverageGrid


def format_number(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def grid_to_csv(grid: CoverageGrid) -> str:
    cells = np.asarray(grid.cells)
    lines = [",".join(["y\\x"] + [format_number(x) for x in grid.x_centers])]
    for y, row in zip(grid.y_centers, cells):
        lines.append(",".join([format_number(y)] + [format_number(v) for v in row.tolist()]))
    return "\n".join(lines) + "\n"


def read_grid_csv(text: str):
    """Parse :func:`grid_to_csv` output back into ``(x_centers, y_centers, cells)``."""
    rows = [line.split(",") for line in text.strip().splitlines()]
    xs = np.array([float(v) for v in rows[0][1:]])
    ys = np.array([float(r[0]) for r in rows[1:]])
    cells = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    return xs, ys, cells


def to_gray(cells, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """Map values in ``[lo, hi]`` to bytes; NaN becomes 0."""
    a = np.asarray(cells, dtype=float)
    scaled = np.clip((a - lo) / (hi - lo), 0.0, 1.0)
    scaled = np.where(np.isnan(scaled), 0.0, scaled)
    return np.rint(scaled * 255.0).astype(np.uint8)


def pgm_bytes(gray: np.ndarray) -> bytes:
    gray = np.asarray(gray, dtype=np.uint8)[::-1]
    h, w = gray.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + gray.tobytes()


def read_pgm(data: bytes) -> np.ndarray:
    """Inverse of :func:`pgm_bytes` (returns rows in grid order, y ascending)."""
    parts = data.split(b"\n", 3)
    if parts[0] != b"P5":
        raise ValueError("not a binary graymap")
    w, h = (int(v) for v in parts[1].split())
    pixels = np.frombuffer(parts[3], dtype=np.uint8, count=w * h).reshape(h, w)
    return pixels[::-1]


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    return obj


def json_text(obj) -> str:
    return json.dumps(_plain(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    def cell(v):
        return v if isinstance(v, str) else format_number(v)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_text(path: Path, text: str) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def write_bytes(path: Path, data: bytes) -> Path:
    path = Path(path)
    path.write_bytes(data)
    return path
