import random
from fractions import Fraction

import pytest

from conftest import random_fraction
from incidencelab.geometry import (
    Line3,
    Plane,
    are_coplanar,
    is_joint,
    line_intersection,
    line_on_surface,
    plane_through_lines,
    restrict_to_line,
)
from incidencelab.polyparse import parse_poly

X_AXIS = Line3((0, 0, 0), (1, 0, 0))
Y_AXIS = Line3((0, 0, 0), (0, 1, 0))
Z_AXIS = Line3((0, 0, 0), (0, 0, 1))


def test_canonicalization_is_idempotent_and_parametrization_free():
    rng = random.Random(2)
    for _ in range(50):
        base = tuple(random_fraction(rng) for _ in range(3))
        direction = tuple(random_fraction(rng) for _ in range(3))
        if all(d == 0 for d in direction):
            continue
        l = Line3(base, direction)
        # rescale the direction and slide the base along the line
        scale = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        if rng.random() < 0.5:
            scale = -scale
        shift = random_fraction(rng)
        moved = Line3(
            tuple(b + shift * d for b, d in zip(l.base, l.dir)),
            tuple(scale * d for d in l.dir),
        )
        assert moved == l
        assert Line3(l.base, l.dir) == l
        assert hash(moved) == hash(l)


def test_zero_direction_rejected():
    with pytest.raises(ValueError):
        Line3((0, 0, 0), (0, 0, 0))


def test_intersection_examples():
    assert line_intersection(X_AXIS, Y_AXIS) == (0, 0, 0)
    shifted = Line3((0, 1, 0), (1, 0, 0))
    assert line_intersection(X_AXIS, shifted) is None  # parallel
    skew = Line3((0, 1, 1), (0, 0, 1))
    assert line_intersection(X_AXIS, skew) is None  # skew


def test_intersection_identical_lines_rejected():
    with pytest.raises(ValueError):
        line_intersection(X_AXIS, Line3((5, 0, 0), (2, 0, 0)))


def test_intersection_is_symmetric_and_on_both_lines():
    rng = random.Random(4)
    found = 0
    while found < 20:
        p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
        d1 = tuple(Fraction(rng.randint(-2, 2)) for _ in range(3))
        d2 = tuple(Fraction(rng.randint(-2, 2)) for _ in range(3))
        if all(x == 0 for x in d1) or all(x == 0 for x in d2):
            continue
        l1 = Line3(p, d1)
        l2 = Line3(p, d2)
        if l1 == l2:
            continue
        w = line_intersection(l1, l2)
        assert w == line_intersection(l2, l1)
        assert w is not None
        assert l1.contains_point(w) and l2.contains_point(w)
        found += 1


def test_coplanarity_examples():
    in_plane_1 = Line3((0, 0, 0), (1, 0, 0))
    in_plane_2 = Line3((0, 0, 0), (1, 1, 0))
    in_plane_3 = Line3((0, 0, 0), (0, 1, 0))
    assert are_coplanar(in_plane_1, in_plane_2, in_plane_3)
    assert not are_coplanar(X_AXIS, Y_AXIS, Z_AXIS)
    # two parallels and a transversal inside their common plane
    l1 = Line3((0, 0, 0), (1, 0, 0))
    l2 = Line3((0, 2, 0), (1, 0, 0))
    transversal = Line3((0, 0, 0), (1, 1, 0))
    plane = plane_through_lines(l1, l2)
    assert plane is not None and plane.contains_line(transversal)
    assert are_coplanar(l1, l2, transversal)


def test_joint_examples():
    assert is_joint(X_AXIS, Y_AXIS, Z_AXIS, (0, 0, 0))
    assert not is_joint(X_AXIS, Y_AXIS, Z_AXIS, (1, 1, 1))
    planar_1 = Line3((0, 0, 0), (1, 0, 0))
    planar_2 = Line3((0, 0, 0), (0, 1, 0))
    planar_3 = Line3((0, 0, 0), (1, 1, 0))
    assert not is_joint(planar_1, planar_2, planar_3, (0, 0, 0))


def test_joint_implies_pairwise_intersections():
    rng = random.Random(6)
    for _ in range(20):
        w = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        dirs = []
        while len(dirs) < 3:
            d = tuple(Fraction(rng.randint(-2, 2)) for _ in range(3))
            if any(x != 0 for x in d):
                dirs.append(d)
        lines = [Line3(w, d) for d in dirs]
        if len({l for l in lines}) < 3:
            continue
        if is_joint(*lines, w):
            for i in range(3):
                for j in range(i + 1, 3):
                    assert line_intersection(lines[i], lines[j]) == w


def test_line_on_surface_examples():
    hyper = parse_poly("x^2+y^2-z^2-1")
    ruling = Line3((1, 0, 0), (0, 1, 1))
    assert line_on_surface(ruling, hyper)
    assert not line_on_surface(Z_AXIS, hyper)
    assert line_on_surface(X_AXIS, parse_poly("y"))


def test_line_on_surface_matches_sampling():
    rng = random.Random(8)
    hyper = parse_poly("x^2+y^2-z^2-1")
    for line in (Line3((1, 0, 0), (0, 1, 1)), Line3((1, 0, 0), (0, 1, -1)), X_AXIS):
        q = restrict_to_line(hyper, line)
        samples = [q.eval(t) for t in range(hyper.degree + 1)]
        assert q.is_zero() == all(v == 0 for v in samples)


def test_plane_canonical_form():
    p1 = Plane(2, 4, 6, 8)
    p2 = Plane(1, 2, 3, 4)
    assert p1 == p2
    assert p1.coeffs[0] == 1
