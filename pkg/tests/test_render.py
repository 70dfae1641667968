import csv
import io
import re
from fractions import Fraction

import pytest

from squeeze.capacity import Status, ValueKind, graph_sample
from squeeze.render import emit_csv, emit_svg, fmt_float, render_staircase
from squeeze.weights import staircase


def polyline(svg, name):
    m = re.search(rf'<polyline id="{name}" points="([^"]+)"', svg)
    return [tuple(map(float, p.split(","))) for p in m.group(1).split()]


def test_fmt_float_twelve_digits():
    assert fmt_float(Fraction(1, 3)) == "0.333333333333"
    assert fmt_float(Fraction(5, 2)) == "2.5"


def test_csv_rows():
    rows = graph_sample(5, 10, 1, 4)
    text = emit_csv(rows)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert len(parsed) == 2
    assert parsed[0] == {"a": "5", "value": "5/2", "kind": "rational",
                         "status": "exact_staircase", "witness": "(2;1,1,1,1,1)"}
    assert parsed[1]["kind"] == "sqrt_of_rational" and parsed[1]["value"] == "10"
    assert parsed[1]["witness"] == "volume"


def test_empty_rows_rejected():
    with pytest.raises(ValueError):
        emit_csv([])
    with pytest.raises(ValueError):
        emit_svg([])


def test_svg_staircase_is_monotone():
    rows = graph_sample(1, 6, 500, 4)
    svg = emit_svg(rows)
    pts = polyline(svg, "capacity")
    assert len(pts) == 501
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    assert xs == sorted(xs)
    # SVG y grows downward, so a nondecreasing c(a) has nonincreasing y
    assert all(y1 >= y2 for y1, y2 in zip(ys, ys[1:]))


def test_svg_flat_region_matches_sqrt():
    rows = graph_sample(9, 16, 20, 4)
    assert all(r.result.status is Status.EXACT_FLAT for r in rows)
    svg = emit_svg(rows)
    assert polyline(svg, "capacity") == polyline(svg, "sqrt")


def test_svg_landmarks_in_range_only():
    svg = emit_svg(graph_sample(6, Fraction(17, 2), 10, 4))
    labels = re.findall(r'<text class="landmark"[^>]*>([^<]+)</text>', svg)
    assert labels == ["τ⁴≈6.8541", "7", "289/36"]


def test_sqrt_kind_for_nonsquare():
    rows = graph_sample(9, 10, 1, 4)
    assert rows[0].result.value_kind is ValueKind.RATIONAL and rows[0].result.value == 3
    assert rows[1].result.value_kind is ValueKind.SQRT


def test_render_staircase_marks():
    text = render_staircase(staircase(Fraction(7, 3)))
    assert text.count("o") == 1
    assert "*" in text
