import random
from fractions import Fraction

import pytest

from conftest import random_fraction
from incidencelab.configs import random_planar_points
from incidencelab.geometry import Line3
from incidencelab.motions import (
    apply_motion,
    distance_set,
    motion_line,
    quadruple_count,
    quadruple_incidence_check,
    recover_pair,
)

UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_motion_line_identity_pair():
    ml = motion_line((0, 0), (0, 0))
    assert ml.line == Line3((0, 0, 0), (0, 0, 1))


def test_motion_line_examples():
    # a = (0,0), b = (1,0): the line {(1/2, z/2, z)}
    ml = motion_line((0, 0), (1, 0))
    assert ml.line == Line3((Fraction(1, 2), 0, 0), (0, Fraction(1, 2), 1))
    # a = (0,0), b = (0,2): the line {(-z, 1, z)}
    ml = motion_line((0, 0), (0, 2))
    assert ml.line == Line3((0, 1, 0), (-1, 0, 1))


def test_apply_motion_examples():
    assert apply_motion(0, 0, 0, (1, 0)) == (-1, 0)
    assert apply_motion(Fraction(1, 2), Fraction(1, 2), 1, (0, 0)) == (1, 0)
    assert apply_motion(3, 4, Fraction(7, 3), (3, 4)) == (3, 4)


def test_defining_property_and_recovery():
    rng = random.Random(77)
    for _ in range(50):
        a = (random_fraction(rng), random_fraction(rng))
        b = (random_fraction(rng), random_fraction(rng))
        ml = motion_line(a, b)
        for _ in range(5):
            z = random_fraction(rng, span=15, den=6)
            t = (z - ml.line.base[2]) / ml.line.dir[2]
            x, y, zz = ml.line.point_at(t)
            assert zz == z
            assert apply_motion(x, y, z, a) == b
        assert recover_pair(ml.line) == (a, b)


def test_motion_line_injective_on_pairs():
    points = random_planar_points(5, 3)
    lines = {}
    for a in points:
        for b in points:
            ml = motion_line(a, b)
            assert ml.line not in lines
            lines[ml.line] = (a, b)


def test_distance_set_examples():
    assert distance_set(UNIT_SQUARE) == {Fraction(1), Fraction(2)}
    assert distance_set([(0, 0), (3, 0), (0, 4)]) == {Fraction(9), Fraction(16), Fraction(25)}
    assert distance_set([(0, 0), (1, 0), (2, 0), (3, 0)]) == {
        Fraction(1), Fraction(4), Fraction(9),
    }


def test_distance_set_rejects_duplicates():
    with pytest.raises(ValueError):
        distance_set([(0, 0), (0, 0)])


def _brute_force_quadruples(points):
    pts = [tuple(Fraction(c) for c in p) for p in points]
    def d2(u, v):
        return (u[0] - v[0]) ** 2 + (u[1] - v[1]) ** 2
    count = 0
    for e1 in pts:
        for e2 in pts:
            if e1 == e2:
                continue
            for e3 in pts:
                for e4 in pts:
                    if e3 == e4:
                        continue
                    if d2(e1, e2) == d2(e3, e4):
                        count += 1
    return count


def test_quadruple_count_examples():
    assert quadruple_count([(0, 0), (1, 0)]).total == 4
    triangle = quadruple_count([(0, 0), (3, 0), (0, 4)])
    assert triangle.total == 12
    assert triangle.distance_count == 3
    square = quadruple_count(UNIT_SQUARE)
    assert square.total == 80
    assert square.distance_count == 2


def test_quadruple_count_matches_brute_force_loop():
    rng = random.Random(5)
    for seed in range(6):
        n = rng.randint(2, 7)
        points = random_planar_points(n, 50 + seed)
        assert quadruple_count(points).total == _brute_force_quadruples(points)


def test_quadruple_cap_enforced():
    points = [(Fraction(i), Fraction(i * i)) for i in range(41)]
    with pytest.raises(ValueError):
        quadruple_count(points)


def test_incidence_check_two_points():
    rep = quadruple_incidence_check([(0, 0), (1, 0)])
    assert rep.consistent
    assert rep.total == 4
    assert rep.rotational == 2 and rep.translational == 2


def test_incidence_check_seeded_point_set():
    points = random_planar_points(6, 7)
    rep = quadruple_incidence_check(points)
    assert rep.consistent
    assert rep.total == quadruple_count(points).total


def test_incidence_check_collinear_has_translations():
    rep = quadruple_incidence_check([(0, 0), (1, 0), (2, 0)])
    assert rep.consistent
    assert rep.translational > 0


def test_cauchy_schwarz_bound_exact():
    for seed in range(5):
        points = random_planar_points(seed + 3, 90 + seed)
        rep = quadruple_count(points)
        n = rep.point_count
        assert Fraction(rep.total) >= Fraction((n * n - n) ** 2, rep.distance_count)


def test_fast_intersection_predicate_matches_line_oracle():
    # the quadruple loop uses a closed-form meet test on motion-line data;
    # it must agree with the general exact line intersection everywhere
    from incidencelab.geometry import line_intersection
    from incidencelab.motions import _motion_lines_intersect, _motion_pair_data

    points = random_planar_points(4, 11)
    pts = [tuple(Fraction(c) for c in p) for p in points]
    data = _motion_pair_data(pts)
    tags = list(data)
    for t1 in tags:
        for t2 in tags:
            if t1 == t2:
                continue
            fast = _motion_lines_intersect(data[t1], data[t2])
            l1 = motion_line(pts[t1[0]], pts[t1[1]]).line
            l2 = motion_line(pts[t2[0]], pts[t2[1]]).line
            oracle = line_intersection(l1, l2) is not None
            assert fast == oracle, (t1, t2)
