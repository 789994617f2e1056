"""Deterministic fixture generators for the counting experiments.

Each generator is seeded (where randomness is involved at all) and emits
exact rational data, so every downstream census is bit-reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .census import PlanarLine
from .geometry import Line3

CONFIG_KINDS = (
    "grid_joints",
    "hyperboloid_rulings",
    "planar_grid",
    "random_lines",
    "cone_rulings",
    "gk2_config",
)


def grid_joints(k: int):
    """3*k^2 axis-parallel lines through the k x k x k integer grid.

    The grid vertices are k^3 joints; the family is the standard example
    showing the joints bound N^(3/2) is tight up to constants.
    """
    if k < 1:
        raise ValueError("grid size must be >= 1")
    lines = []
    rng = range(k)
    for b in rng:
        for c in rng:
            lines.append(Line3((0, b, c), (1, 0, 0)))
    for a in rng:
        for c in rng:
            lines.append(Line3((a, 0, c), (0, 1, 0)))
    for a in rng:
        for b in rng:
            lines.append(Line3((a, b, 0), (0, 0, 1)))
    return lines


def _circle_point(t):
    """Rational point on the unit circle via the tangent-half-angle map."""
    t = Fraction(t)
    den = 1 + t * t
    return (1 - t * t) / den, 2 * t / den


def hyperboloid_rulings(n: int):
    """n + n ruling lines of x^2 + y^2 - z^2 = 1, one list per family.

    Through the waist point (c, s, 0) the two rulings have directions
    (-s, c, 1) and (-s, c, -1); rational waist points come from the
    tangent-half-angle parametrisation.
    """
    if n < 1:
        raise ValueError("need at least one line per ruling")
    plus, minus = [], []
    for t in range(n):
        c, s = _circle_point(t)
        plus.append(Line3((c, s, 0), (-s, c, 1)))
        minus.append(Line3((c, s, 0), (-s, c, -1)))
    return plus, minus


def cone_rulings(n: int):
    """n lines through the apex of x^2 + y^2 - z^2 = 0."""
    if n < 1:
        raise ValueError("need at least one ruling line")
    lines = []
    for t in range(n):
        tt = Fraction(t)
        lines.append(Line3((0, 0, 0), (1 - tt * tt, 2 * tt, 1 + tt * tt)))
    return lines


def planar_grid(k: int):
    """k^2 integer grid points with the k horizontal + k vertical lines."""
    if k < 1:
        raise ValueError("grid size must be >= 1")
    points = [(Fraction(a), Fraction(b)) for a in range(k) for b in range(k)]
    lines = [PlanarLine(0, 1, b) for b in range(k)]   # y = b
    lines += [PlanarLine(1, 0, a) for a in range(k)]  # x = a
    return points, lines


def slope_grid(k: int):
    """k x 2k^2 grid with the k^2 lines y = a*x + b, the rich planar family."""
    if k < 1:
        raise ValueError("grid size must be >= 1")
    points = [(Fraction(a), Fraction(b)) for a in range(1, k + 1) for b in range(1, 2 * k * k + 1)]
    lines = [PlanarLine(Fraction(-a), 1, b) for a in range(1, k + 1) for b in range(1, k * k + 1)]
    return points, lines


def random_lines(n: int, seed: int):
    """n distinct random rational lines with small integer data."""
    if n < 1:
        raise ValueError("need at least one line")
    rng = random.Random(f"random_lines:{seed}")
    out = []
    seen = set()
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 200 * n:
            raise RuntimeError("random line generation stalled")
        base = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        direction = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        if all(d == 0 for d in direction):
            continue
        line = Line3(base, direction)
        if line in seen:
            continue
        seen.add(line)
        out.append(line)
    return out


def random_points3(n: int, seed: int, span: int = 12):
    """n distinct random integer points in a cube of side 2*span."""
    rng = random.Random(f"random_points3:{seed}")
    out = []
    seen = set()
    while len(out) < n:
        w = tuple(Fraction(rng.randint(-span, span)) for _ in range(3))
        if w in seen:
            continue
        seen.add(w)
        out.append(w)
    return out


def random_planar_points(n: int, seed: int, span: int = 30):
    """n distinct random rational points in the plane."""
    rng = random.Random(f"random_planar_points:{seed}")
    out = []
    seen = set()
    while len(out) < n:
        w = (
            Fraction(rng.randint(-span, span), rng.randint(1, 4)),
            Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        )
        if w in seen:
            continue
        seen.add(w)
        out.append(w)
    return out


def gk2_config(n: int):
    """n^2 lines with at most n in any common plane, plus n points per line.

    Lines are (t, a*t + b, a*b) for a, b in 1..n; a plane constrains (a, b)
    to one linear (or one multiplicative) condition, so it holds at most n of
    them.  The emitted point set samples t = 1..n on each line.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    lines = []
    points = []
    seen = set()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            lines.append(Line3((0, b, a * b), (1, a, 0)))
            for t in range(1, n + 1):
                w = (Fraction(t), Fraction(a * t + b), Fraction(a * b))
                if w not in seen:
                    seen.add(w)
                    points.append(w)
    return lines, points


def make_configuration(kind: str, size: int, seed: int = 0):
    """Dispatch to a generator; returns a dict with 'points' and/or 'lines'."""
    if kind == "grid_joints":
        return {"lines": grid_joints(size)}
    if kind == "hyperboloid_rulings":
        plus, minus = hyperboloid_rulings(size)
        return {"lines": plus + minus, "rulings": (plus, minus)}
    if kind == "planar_grid":
        points, lines = planar_grid(size)
        return {"planar_points": points, "planar_lines": lines}
    if kind == "random_lines":
        return {"lines": random_lines(size, seed)}
    if kind == "cone_rulings":
        return {"lines": cone_rulings(size)}
    if kind == "gk2_config":
        lines, points = gk2_config(size)
        return {"lines": lines, "points": points}
    raise ValueError(f"unknown configuration kind {kind!r} (known: {', '.join(CONFIG_KINDS)})")
