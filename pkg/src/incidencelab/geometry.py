"""Exact points, lines and planes in 3-space with incidence predicates.

Lines are affine: parallel lines simply do not meet, and there are no points
at infinity.  Every Line3 is stored in a canonical form so that lines are
usable as set/dict keys and equality means equality of point sets.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import nullspace_vector
from .multipoly import MultiPoly, restrict_parametric

Point3 = tuple  # three Fractions


def point3(x, y, z):
    return (Fraction(x), Fraction(y), Fraction(z))


def _as_vec3(v):
    if len(v) != 3:
        raise ValueError("expected 3 coordinates")
    return tuple(Fraction(c) for c in v)


class Line3:
    """Affine line through `base` with direction `dir`, canonicalised.

    Canonical form: the direction is scaled so its first nonzero coordinate
    is 1, and the base is slid along the line so the coordinate at that pivot
    position is 0.  That point is unique, so two parametrisations of the same
    line always produce identical fields.
    """

    __slots__ = ("base", "dir", "pivot")

    def __init__(self, base, direction):
        base = _as_vec3(base)
        direction = _as_vec3(direction)
        pivot = next((i for i, d in enumerate(direction) if d != 0), None)
        if pivot is None:
            raise ValueError("zero direction vector")
        scale = direction[pivot]
        direction = tuple(d / scale for d in direction)
        t = -base[pivot]
        base = tuple(b + t * d for b, d in zip(base, direction))
        self.base = base
        self.dir = direction
        self.pivot = pivot

    @classmethod
    def through(cls, p, q):
        p = _as_vec3(p)
        q = _as_vec3(q)
        return cls(p, tuple(b - a for a, b in zip(p, q)))

    def point_at(self, t):
        t = Fraction(t)
        return tuple(b + t * d for b, d in zip(self.base, self.dir))

    def contains_point(self, w):
        w = _as_vec3(w)
        t = w[self.pivot] - self.base[self.pivot]
        return all(b + t * d == c for b, d, c in zip(self.base, self.dir, w))

    def __eq__(self, other):
        return isinstance(other, Line3) and self.base == other.base and self.dir == other.dir

    def __hash__(self):
        return hash((self.base, self.dir))

    def __repr__(self):
        return f"Line3(base={tuple(map(str, self.base))}, dir={tuple(map(str, self.dir))})"

    def sort_key(self):
        return (self.base, self.dir)


class Plane:
    """Plane a*x + b*y + c*z = e with (a, b, c) scaled to leading 1."""

    __slots__ = ("coeffs",)

    def __init__(self, a, b, c, e):
        normal = (Fraction(a), Fraction(b), Fraction(c))
        pivot = next((i for i, v in enumerate(normal) if v != 0), None)
        if pivot is None:
            raise ValueError("zero normal vector")
        scale = normal[pivot]
        self.coeffs = tuple(v / scale for v in normal) + (Fraction(e) / scale,)

    def contains_point(self, w):
        a, b, c, e = self.coeffs
        x, y, z = _as_vec3(w)
        return a * x + b * y + c * z == e

    def contains_line(self, l: Line3):
        a, b, c, _ = self.coeffs
        if a * l.dir[0] + b * l.dir[1] + c * l.dir[2] != 0:
            return False
        return self.contains_point(l.base)

    def __eq__(self, other):
        return isinstance(other, Plane) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Plane({', '.join(map(str, self.coeffs))})"


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def line_intersection(l1: Line3, l2: Line3):
    """The unique common point, or None for parallel/skew lines.

    Identical lines are rejected: the caller is expected to dedupe first.
    """
    if l1 == l2:
        raise ValueError("lines are identical")
    d1, d2 = l1.dir, l2.dir
    rhs = tuple(b2 - b1 for b1, b2 in zip(l1.base, l2.base))
    # Solve t*d1 - s*d2 = rhs using a nondegenerate coordinate pair.
    for i in range(3):
        for j in range(i + 1, 3):
            det = d1[i] * (-d2[j]) - (-d2[i]) * d1[j]
            if det == 0:
                continue
            t = (rhs[i] * (-d2[j]) - (-d2[i]) * rhs[j]) / det
            s = (d1[i] * rhs[j] - rhs[i] * d1[j]) / det
            k = 3 - i - j
            if t * d1[k] - s * d2[k] != rhs[k]:
                return None  # skew
            return l1.point_at(t)
    return None  # parallel directions


def plane_through_lines(l1: Line3, l2: Line3):
    """The unique plane containing both lines, or None.

    Exists iff the lines intersect or are parallel (and are not identical).
    """
    if l1 == l2:
        raise ValueError("lines are identical")
    rows = [
        list(l1.base) + [Fraction(-1)],
        list(l1.dir) + [Fraction(0)],
        list(l2.base) + [Fraction(-1)],
        list(l2.dir) + [Fraction(0)],
    ]
    vec = nullspace_vector(rows, 4)
    if vec is None:
        return None
    return Plane(vec[0], vec[1], vec[2], vec[3])


def are_coplanar(l1: Line3, l2: Line3, l3: Line3):
    """True iff one plane contains all three lines."""
    rows = []
    for l in (l1, l2, l3):
        rows.append(list(l.base) + [Fraction(-1)])
        rows.append(list(l.dir) + [Fraction(0)])
    vec = nullspace_vector(rows, 4)
    return vec is not None


def is_joint(l1: Line3, l2: Line3, l3: Line3, w):
    """True iff all three lines pass through w with independent directions."""
    w = _as_vec3(w)
    if not (l1.contains_point(w) and l2.contains_point(w) and l3.contains_point(w)):
        return False
    a, b, c = l1.dir, l2.dir, l3.dir
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return det != 0


def restrict_to_line(p: MultiPoly, l: Line3):
    """Univariate restriction q(t) = p(base + t * dir)."""
    if p.arity != 3:
        raise ValueError("restriction needs an arity-3 polynomial")
    return restrict_parametric(p, l.base, l.dir)


def line_on_surface(l: Line3, p: MultiPoly):
    """True iff p vanishes identically along l."""
    if p.is_zero():
        raise ValueError("surface polynomial is zero")
    return restrict_to_line(p, l).is_zero()


