import random
from fractions import Fraction

from incidencelab.configs import hyperboloid_rulings, random_points3
from incidencelab.fitting import (
    DegreeReduceParams,
    degree_reduce,
    fit_on_lines,
    fit_on_points,
    min_vanishing_degree,
    monomial_count,
)
from incidencelab.geometry import Line3, line_on_surface
from incidencelab.linalg import rank
from incidencelab.multipoly import monomials, poly_eval

CUBE = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]


def _evaluation_matrix(points, degree):
    rows = []
    for w in points:
        row = []
        for exps in monomials(3, degree):
            val = Fraction(1)
            for c, e in zip(w, exps):
                val *= Fraction(c) ** e
            row.append(val)
        rows.append(row)
    return rows


def test_cube_admits_quadratic():
    poly = fit_on_points(CUBE, 2)
    assert poly is not None and not poly.is_zero()
    assert poly.degree <= 2
    assert all(poly_eval(poly, w) == 0 for w in CUBE)


def test_single_point_linear():
    poly = fit_on_points([(0, 0, 0)], 1)
    assert poly is not None
    assert poly_eval(poly, (0, 0, 0)) == 0


def test_four_noncoplanar_points_have_no_plane():
    points = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    # independent oracle: the degree-1 evaluation matrix has full rank 4
    assert rank(_evaluation_matrix(points, 1), monomial_count(1)) == 4
    assert fit_on_points(points, 1) is None


def test_min_degree_examples():
    collinear = [(0, 0, 0), (1, 0, 0), (2, 0, 0)]
    degree, witness = min_vanishing_degree(collinear)
    assert degree == 1
    assert all(poly_eval(witness, w) == 0 for w in collinear)

    degree, witness = min_vanishing_degree(CUBE)
    assert degree == 2
    # independent oracle for the degree-1 failure: rank 4 out of 4 columns
    assert rank(_evaluation_matrix(CUBE, 1), monomial_count(1)) == 4

    grid27 = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    # independent oracle: the 27x10 degree-2 matrix has full column rank
    assert rank(_evaluation_matrix(grid27, 2), monomial_count(2)) == 10
    degree, witness = min_vanishing_degree(grid27)
    assert degree == 3
    assert all(poly_eval(witness, w) == 0 for w in grid27)


def test_min_degree_monotone_under_point_addition():
    rng = random.Random(15)
    points = random_points3(6, 100)
    d0, _ = min_vanishing_degree(points)
    extended = points + random_points3(6, 101)
    d1, _ = min_vanishing_degree(list(dict.fromkeys(extended)))
    assert d1 >= d0


def test_fit_on_lines_two_rulings():
    plus, minus = hyperboloid_rulings(1)
    lines = [plus[0], minus[0]]
    poly = fit_on_lines(lines, 2)
    assert poly is not None
    for l in lines:
        assert line_on_surface(l, poly)


def test_fit_on_lines_axes_gives_plane():
    x_axis = Line3((0, 0, 0), (1, 0, 0))
    y_axis = Line3((0, 0, 0), (0, 1, 0))
    poly = fit_on_lines([x_axis, y_axis], 1)
    assert poly is not None
    # the only plane through both axes is z = 0 (up to scale)
    assert set(poly.terms) == {(0, 0, 1)}


def test_fit_on_lines_four_generic_skew_fail_at_degree_one():
    from incidencelab.geometry import plane_through_lines

    lines = [
        Line3((0, 0, 0), (1, 0, 0)),
        Line3((0, 1, 0), (0, 0, 1)),
        Line3((1, 2, 3), (0, 1, 0)),
        Line3((2, 5, 1), (1, 1, 2)),
    ]
    for i in range(4):
        for j in range(i + 1, 4):
            assert plane_through_lines(lines[i], lines[j]) is None  # pairwise skew
    assert fit_on_lines(lines, 1) is None


def test_fit_is_independent_of_target_order():
    rng = random.Random(23)
    points = random_points3(20, 555)
    shuffled = points[:]
    rng.shuffle(shuffled)
    assert fit_on_points(points, 3) == fit_on_points(shuffled, 3)
    plus, minus = hyperboloid_rulings(4)
    lines = plus + minus
    reversed_lines = list(reversed(lines))
    assert fit_on_lines(lines, 2) == fit_on_lines(reversed_lines, 2)


def test_solvability_threshold_is_exact():
    rng = random.Random(19)
    for trial in range(25):
        n = rng.randint(1, 30)
        points = random_points3(n, 300 + trial)
        degree = 1
        while monomial_count(degree) <= len(points):
            degree += 1
        poly = fit_on_points(points, degree)
        assert poly is not None, "underdetermined fit must produce a witness"
        assert all(poly_eval(poly, w) == 0 for w in points)


def test_degree_reduce_hyperboloid_fixture():
    plus, minus = hyperboloid_rulings(60)
    lines1 = plus[:60]
    lines2 = minus[:40]
    params = DegreeReduceParams(Fraction(1, 4), 0, 2, retries=5)
    poly = degree_reduce(lines1, lines2, params)
    assert poly is not None
    assert poly.degree <= 2
    assert all(line_on_surface(l, poly) for l in lines2)


def test_degree_reduce_axes_probability_one():
    x_axis = Line3((0, 0, 0), (1, 0, 0))
    y_axis = Line3((0, 0, 0), (0, 1, 0))
    params = DegreeReduceParams(Fraction(1), 7, 1, retries=1)
    poly = degree_reduce([x_axis, y_axis], [x_axis, y_axis], params)
    assert poly is not None
    assert set(poly.terms) == {(0, 0, 1)}


def test_degree_reduce_disjoint_target_fails():
    plus, _ = hyperboloid_rulings(6)
    faraway = Line3((100, 200, 7), (1, 5, 9))
    params = DegreeReduceParams(Fraction(1, 2), 3, 2, retries=4)
    assert degree_reduce(plus, [faraway], params) is None


def test_degree_reduce_bit_reproducible():
    plus, minus = hyperboloid_rulings(20)
    params = DegreeReduceParams(Fraction(1, 3), 11, 2, retries=5)
    a = degree_reduce(plus, minus[:10], params)
    b = degree_reduce(plus, minus[:10], params)
    assert a == b
