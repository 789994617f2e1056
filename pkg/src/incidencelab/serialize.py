"""Exact-rational serialisation: point/line files, reports, CSV, SVG.

Rationals travel as strings ("3/4" or "2") so no value is ever rounded on
the way through JSON.  Report payloads are built with a fixed key order and
rendered with a fixed JSON style, which is what makes re-runs byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .census import PlanarLine
from .geometry import Line3

FORMAT_VERSION = 1


def rat_to_str(x) -> str:
    return str(Fraction(x))


def str_to_rat(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError(f"rationals must be strings or integers, got {type(s).__name__}")


def encode_point3(w):
    return [rat_to_str(c) for c in w]


def decode_point3(obj):
    if len(obj) != 3:
        raise ValueError("3d points need exactly 3 coordinates")
    return tuple(str_to_rat(c) for c in obj)


def encode_point2(w):
    return [rat_to_str(c) for c in w]


def decode_point2(obj):
    if len(obj) != 2:
        raise ValueError("planar points need exactly 2 coordinates")
    return tuple(str_to_rat(c) for c in obj)


def encode_line3(l: Line3):
    return {"base": encode_point3(l.base), "dir": encode_point3(l.dir)}


def decode_line3(obj):
    return Line3(decode_point3(obj["base"]), decode_point3(obj["dir"]))


def encode_planar_line(l: PlanarLine):
    a, b, c = l.coeffs
    return {"a": rat_to_str(a), "b": rat_to_str(b), "c": rat_to_str(c)}


def decode_planar_line(obj):
    return PlanarLine(str_to_rat(obj["a"]), str_to_rat(obj["b"]), str_to_rat(obj["c"]))


def points_payload(points):
    return {"format_version": FORMAT_VERSION, "points": [encode_point3(w) for w in points]}


def planar_points_payload(points):
    return {"format_version": FORMAT_VERSION, "points": [encode_point2(w) for w in points]}


def lines_payload(lines):
    return {"format_version": FORMAT_VERSION, "lines": [encode_line3(l) for l in lines]}


def load_points(payload):
    return [decode_point3(p) for p in payload["points"]]


def load_planar_points(payload):
    return [decode_point2(p) for p in payload["points"]]


def load_lines(payload):
    return [decode_line3(l) for l in payload["lines"]]


def dump_json(payload) -> str:
    """Canonical JSON rendering: fixed indent, no key sorting surprises."""
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def write_json(path, payload):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dump_json(payload))


def read_json(path):
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)


def rows_to_csv(header, rows) -> str:
    """Plain CSV for sweep tables; values are rendered with str()."""
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def svg_plot(series, path=None, width=640, height=420, title=""):
    """Minimal scatter/line SVG for ratio-vs-size sweeps.

    series: list of dicts with keys "label" and "points" (list of (x, y)
    floats).  Returns the SVG text; writes it when a path is given.
    """
    margin = 50
    xs = [p[0] for s in series for p in s["points"]]
    ys = [p[1] for s in series for p in s["points"]]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    y_lo = min(y_lo, 0.0)

    def sx(x):
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="monospace" font-size="14">{title}</text>'
        )
    for k, s in enumerate(series):
        color = colors[k % len(colors)]
        pts = sorted(s["points"])
        path_d = " ".join(
            f"{'M' if i == 0 else 'L'}{sx(x):.2f},{sy(y):.2f}" for i, (x, y) in enumerate(pts)
        )
        if len(pts) > 1:
            parts.append(f'<path d="{path_d}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        for x, y in pts:
            parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3" fill="{color}"/>')
        parts.append(
            f'<text x="{width - margin - 4}" y="{margin + 16 * k + 4}" text-anchor="end" '
            f'font-family="monospace" font-size="12" fill="{color}">{s["label"]}</text>'
        )
    # axis extremes
    parts.append(
        f'<text x="{margin}" y="{height - margin + 18}" font-family="monospace" '
        f'font-size="11" text-anchor="middle">{x_lo:g}</text>'
    )
    parts.append(
        f'<text x="{width - margin}" y="{height - margin + 18}" font-family="monospace" '
        f'font-size="11" text-anchor="middle">{x_hi:g}</text>'
    )
    parts.append(
        f'<text x="{margin - 6}" y="{sy(y_hi):.1f}" font-family="monospace" '
        f'font-size="11" text-anchor="end">{y_hi:g}</text>'
    )
    parts.append(
        f'<text x="{margin - 6}" y="{sy(y_lo):.1f}" font-family="monospace" '
        f'font-size="11" text-anchor="end">{y_lo:g}</text>'
    )
    parts.append("</svg>")
    text = "\n".join(parts) + "\n"
    if path is not None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    return text
