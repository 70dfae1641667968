"""Text, CSV and SVG output.  Floats appear only here, at emission time."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .capacity import CapacityResult, GraphRow, ValueKind
from .exceptional import ClassTuple
from .numerics import TAU4, format_rational
from .weights import StaircaseDiagram

SIG_DIGITS = 12

# (position, label) of the vertical guide lines on the capacity plot
LANDMARKS = (
    (Fraction(1), "1"),
    (TAU4, "τ⁴≈6.8541"),
    (Fraction(7), "7"),
    (Fraction(289, 36), "289/36"),
    (Fraction(9), "9"),
)


def fmt_float(x) -> str:
    return f"{float(x):.{SIG_DIGITS}g}"


def fmt_value(result: CapacityResult, as_float: bool = False) -> str:
    if as_float:
        return fmt_float(result)
    return result.exact_str()


def fmt_witness(witness) -> str:
    if witness is None:
        return ""
    return str(witness)


def fmt_number(x: Fraction, as_float: bool = False) -> str:
    return fmt_float(x) if as_float else format_rational(x)


def capacity_json(a: Fraction, result: CapacityResult) -> dict:
    return {
        "a": format_rational(a),
        "value": result.exact_str(),
        "kind": result.value_kind.value,
        "radicand" if result.value_kind is ValueKind.SQRT else "rational": format_rational(result.value),
        "status": result.status.value,
        "witness": class_json(result.witness) if isinstance(result.witness, ClassTuple) else result.witness,
    }


def class_json(t: ClassTuple) -> dict:
    return {"d": t.d, "m": list(t.m)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def emit_csv(rows: Sequence[GraphRow]) -> str:
    """CSV with columns a, value, kind, status, witness.

    ``value`` is the exact capacity for ``rational`` rows and the radicand
    for ``sqrt_of_rational`` rows.
    """
    if not rows:
        raise ValueError("no rows to emit")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "value", "kind", "status", "witness"])
    for row in rows:
        r = row.result
        writer.writerow([
            format_rational(row.a),
            format_rational(r.value),
            r.value_kind.value,
            r.status.value,
            fmt_witness(r.witness),
        ])
    return buf.getvalue()


def emit_svg(rows: Sequence[GraphRow], width: int = 640, height: int = 400) -> str:
    """Self-contained SVG: c(a) as one polyline, sqrt(a) as another."""
    if not rows:
        raise ValueError("no rows to emit")
    margin = 50
    xs = [float(r.a) for r in rows]
    cs = [float(r.result) for r in rows]
    roots = [x ** 0.5 for x in xs]
    x_lo, x_hi = xs[0], xs[-1]
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    y_lo = min(min(cs), min(roots))
    y_hi = max(max(cs), max(roots))
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    def sx(x: float) -> str:
        return fmt_float(margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin))

    def sy(y: float) -> str:
        return fmt_float(height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin))

    def points(ys: Sequence[float]) -> str:
        return " ".join(f"{sx(x)},{sy(y)}" for x, y in zip(xs, ys))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" '
        'stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
    ]
    for pos, label in LANDMARKS:
        x = float(pos)
        if x_lo <= x <= x_hi:
            parts.append(
                f'<line class="landmark" x1="{sx(x)}" y1="{margin}" x2="{sx(x)}" '
                f'y2="{height - margin}" stroke="#bbbbbb" stroke-dasharray="4 3"/>'
            )
            parts.append(
                f'<text class="landmark" x="{sx(x)}" y="{height - margin + 16}" '
                f'font-size="11" text-anchor="middle">{label}</text>'
            )
    parts.append(
        f'<text x="{width - margin}" y="{height - 10}" font-size="12" text-anchor="end">a</text>'
    )
    parts.append(
        f'<text x="{margin - 8}" y="{margin - 10}" font-size="12">c(a)</text>'
    )
    parts.append(
        f'<polyline id="sqrt" points="{points(roots)}" fill="none" stroke="#999999" '
        'stroke-width="1"/>'
    )
    parts.append(
        f'<polyline id="capacity" points="{points(cs)}" fill="none" stroke="#1f4e9c" '
        'stroke-width="1.5"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_staircase(diagram: StaircaseDiagram) -> str:
    """Monospace dot picture: ``o`` white dot, ``*`` black dots, labels alongside."""
    dots = diagram.dots()
    cols = [c for c, _ in dots]
    rows = [r for _, r in dots]
    min_col, max_row, min_row = min(cols), max(rows), min(rows)
    label_at = {pos: lab for pos, lab in zip(dots, diagram.labels)}
    cell = max(len(str(x)) for x in diagram.labels) + 2
    lines = []
    for row in range(max_row, min_row - 1, -1):
        chunks = []
        for col in range(min_col, 1):
            pos = (col, row)
            if pos not in label_at:
                chunks.append(" " * (cell + 1))
                continue
            mark = "o" if pos == dots[0] else "*"
            chunks.append((mark + str(label_at[pos])).ljust(cell + 1))
        lines.append("".join(chunks).rstrip())
    return "\n".join(lines)
