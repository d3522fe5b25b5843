import json
import math

import numpy as np

from sensorcov import export
from sensorcov.geometry import CoverageGrid


def test_number_format_is_shortest_round_trip():
    assert export.format_number(0.1) == "0.1"
    assert export.format_number(2.0) == "2"
    assert export.format_number(1 / 3) == repr(1 / 3)
    assert export.format_number(True) == "1"
    assert export.format_number(math.nan) == "nan"
    assert export.format_number(-math.inf) == "-inf"


def test_csv_header_and_row_order():
    g = CoverageGrid((0.0, 2.0, -1.0, 1.0), 1.0, cells=np.array([[0.0, 0.25], [1.0, 0.5]]))
    lines = export.grid_to_csv(g).splitlines()
    assert lines[0] == "y\\x,0.5,1.5"
    assert lines[1] == "-0.5,0,0.25"
    assert lines[2] == "0.5,1,0.5"


def test_pgm_is_flipped_for_viewing_and_round_trips():
    gray = np.array([[0, 10, 20], [30, 40, 255]], dtype=np.uint8)
    data = export.pgm_bytes(gray)
    assert data.startswith(b"P5\n3 2\n255\n")
    assert data[-3:] == bytes([0, 10, 20])  # lowest y is the bottom image row
    assert np.array_equal(export.read_pgm(data), gray)


def test_to_gray_scaling():
    assert export.to_gray([[0.0, 0.5, 1.0, math.nan, 2.0]]).tolist() == [[0, 128, 255, 0, 255]]


def test_json_text_is_stable_and_strict():
    a = export.json_text({"b": np.float64(0.1), "a": [np.int64(3), np.bool_(True)], "c": math.nan})
    assert a == export.json_text({"a": [3, True], "b": 0.1, "c": None})
    assert json.loads(a) == {"a": [3, True], "b": 0.1, "c": None}
