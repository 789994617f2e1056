"""Rigid-motion coordinates and the distance-quadruple dictionary.

An orientation-preserving planar motion that is not a translation is a
rotation; with coordinates (x, y, z) = (rotation centre, cot of half the
rotation angle) the motions taking a fixed point a to a fixed point b form a
line in 3-space.  Distance quadruples (ordered pairs of congruent ordered
segments) then correspond to intersections of such lines, except for the
translational matches which the chart misses and which are counted directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Line3

PlanarPoint = tuple  # two Fractions


def planar_point(x, y):
    return (Fraction(x), Fraction(y))


def _as_planar(w):
    if len(w) != 2:
        raise ValueError("planar points have 2 coordinates")
    return (Fraction(w[0]), Fraction(w[1]))


def _rot90(v):
    return (-v[1], v[0])


@dataclass(frozen=True)
class MotionLine:
    """The line of non-translational motions taking tag a to tag b."""

    line: Line3
    a: PlanarPoint
    b: PlanarPoint


def motion_line(a, b) -> MotionLine:
    """Line {(m + (z/2) * rot90(b - a), z)} with m the midpoint of a, b."""
    a = _as_planar(a)
    b = _as_planar(b)
    mx = (a[0] + b[0]) / 2
    my = (a[1] + b[1]) / 2
    rx, ry = _rot90((b[0] - a[0], b[1] - a[1]))
    line = Line3((mx, my, 0), (rx / 2, ry / 2, 1))
    return MotionLine(line, a, b)


def recover_pair(line: Line3):
    """Invert motion_line: read (a, b) back off the canonical line.

    Works for any line with nonzero z-direction (every motion line has one).
    """
    dz = line.dir[2]
    if dz == 0:
        raise ValueError("not a motion line: direction has no z component")
    dirn = tuple(d / dz for d in line.dir)
    t = -line.base[2] / dz
    base = tuple(b + t * d for b, d in zip(line.base, line.dir))
    m = (base[0], base[1])
    rx, ry = 2 * dirn[0], 2 * dirn[1]
    # r = rot90(b - a)  =>  b - a = (ry, -rx)
    half = (Fraction(ry) / 2, Fraction(-rx) / 2)
    a = (m[0] - half[0], m[1] - half[1])
    b = (m[0] + half[0], m[1] + half[1])
    return a, b


def apply_motion(x, y, z, w):
    """Image of w under the rotation with centre (x, y) and cot(theta/2) = z.

    Exact in tan-half-angle arithmetic: cos = (z^2-1)/(z^2+1),
    sin = 2z/(z^2+1).
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    wx, wy = _as_planar(w)
    den = z * z + 1
    cos_t = (z * z - 1) / den
    sin_t = 2 * z / den
    ux, uy = wx - x, wy - y
    return (x + cos_t * ux - sin_t * uy, y + sin_t * ux + cos_t * uy)


def distance_set(points):
    """Set of exact squared distances over unordered pairs."""
    pts = [_as_planar(w) for w in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    out = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[i][0] - pts[j][0]
            dy = pts[i][1] - pts[j][1]
            out.add(dx * dx + dy * dy)
    return out


QUADRUPLE_CAP = 40


@dataclass
class QuadrupleReport:
    """Distance-quadruple counts plus the Cauchy-Schwarz floor.

    total counts ordered quadruples (e1, e2, e3, e4) with e1 != e2,
    e3 != e4 and |e1 e2| = |e3 e4|; the bound (N^2-N)^2 / |D| matches that
    convention exactly.  The rotational/translational split is only known
    when the motion-line dictionary produced the count.
    """

    total: int
    rotational: int | None
    translational: int | None
    distance_count: int
    point_count: int
    cauchy_schwarz_bound: Fraction
    consistent: bool | None = None


def _squared_pair_distances(pts):
    out = {}
    n = len(pts)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            dx = pts[i][0] - pts[j][0]
            dy = pts[i][1] - pts[j][1]
            out[(i, j)] = dx * dx + dy * dy
    return out


def quadruple_count(points) -> QuadrupleReport:
    """Brute-force distance-quadruple count via the pair-distance histogram.

    Summing cnt^2 over the ordered-pair histogram is the same number as the
    4-fold loop (each ordered pair on the left matches each ordered pair on
    the right of equal squared distance); the tests cross-check the loop.
    """
    pts = [_as_planar(w) for w in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    n = len(pts)
    if n > QUADRUPLE_CAP:
        raise ValueError(f"quadruple count cap is {QUADRUPLE_CAP} points (got {n})")
    dist = _squared_pair_distances(pts)
    hist = {}
    for d in dist.values():
        hist[d] = hist.get(d, 0) + 1
    total = sum(c * c for c in hist.values())
    dcount = len(hist)
    bound = Fraction((n * n - n) ** 2, dcount) if dcount else Fraction(0)
    return QuadrupleReport(total, None, None, dcount, n, bound)


def _motion_pair_data(pts):
    """Per ordered pair (i, j): doubled midpoint and rot90 of the difference."""
    data = {}
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            s = (a[0] + b[0], a[1] + b[1])
            r = _rot90((b[0] - a[0], b[1] - a[1]))
            data[(i, j)] = (s, r)
    return data


def _motion_lines_intersect(d1, d2):
    """Do the motion lines of two distinct ordered pairs meet?

    Lines {(s1/2 + (z/2) r1, z)} and {(s2/2 + (z/2) r2, z)} share a point iff
    s1 - s2 = z (r2 - r1) has a solution z, i.e. the two plane vectors are
    parallel with a consistent ratio.
    """
    (s1, r1), (s2, r2) = d1, d2
    ux = s1[0] - s2[0]
    uy = s1[1] - s2[1]
    vx = r2[0] - r1[0]
    vy = r2[1] - r1[1]
    if vx == 0 and vy == 0:
        return False  # parallel distinct lines (equal directions)
    return ux * vy == uy * vx


def quadruple_incidence_check(points) -> QuadrupleReport:
    """Count quadruples through the motion-line dictionary and compare.

    Rotational quadruples come from intersecting motion-line pairs,
    translational ones (including the identity matches) from the direct
    vector comparison e3 - e1 = e4 - e2.  The consistency flag records exact
    agreement with the direct histogram count; disagreement is reported, not
    raised.
    """
    pts = [_as_planar(w) for w in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    n = len(pts)
    if n > QUADRUPLE_CAP:
        raise ValueError(f"quadruple count cap is {QUADRUPLE_CAP} points (got {n})")
    data = _motion_pair_data(pts)
    rotational = 0
    translational = 0
    for i1 in range(n):
        for i3 in range(n):
            s1, r1 = data[(i1, i3)]
            for i2 in range(n):
                if i2 == i1:
                    continue
                for i4 in range(n):
                    if i4 == i3:
                        continue
                    s2, r2 = data[(i2, i4)]
                    # r = rot90(b - a), so equal r means equal displacement:
                    # the unique matching motion is the translation.
                    if r1 == r2:
                        translational += 1
                    elif _motion_lines_intersect((s1, r1), (s2, r2)):
                        rotational += 1
    direct = quadruple_count(points)
    total = rotational + translational
    return QuadrupleReport(
        total,
        rotational,
        translational,
        direct.distance_count,
        n,
        direct.cauchy_schwarz_bound,
        consistent=(total == direct.total),
    )
