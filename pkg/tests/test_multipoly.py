import random
from fractions import Fraction

import pytest

from conftest import nonzero_random_poly, random_fraction, random_poly
from incidencelab.multipoly import (
    MultiPoly,
    coeffs_in_var,
    divides,
    exact_divide,
    has_common_factor,
    monomials,
    poly_eval,
    poly_partial,
    restrict_parametric,
    sylvester_resultant,
    to_string,
)
from incidencelab.polyparse import parse_poly
from incidencelab.unipoly import UniPoly

SPHERE = parse_poly("x^2+y^2+z^2-1")
GRAPH = parse_poly("x*y-z")


def test_eval_examples():
    assert poly_eval(SPHERE, (1, 0, 0)) == 0
    assert poly_eval(SPHERE, (1, 1, 1)) == 2
    assert poly_eval(GRAPH, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))) == 0


def test_eval_arity_mismatch():
    with pytest.raises(ValueError):
        poly_eval(SPHERE, (1, 0))


def test_partial_examples():
    assert poly_partial(SPHERE, 0) == parse_poly("2*x")
    assert poly_partial(GRAPH, 2) == parse_poly("-1")
    assert poly_partial(parse_poly("x^3"), 1).is_zero()


def test_partial_drops_degree_by_one():
    rng = random.Random(5)
    for _ in range(30):
        p = nonzero_random_poly(rng)
        for var in range(3):
            d = poly_partial(p, var)
            if not d.is_zero():
                assert d.degree == max(
                    sum(e) - 1 for e in p.terms if e[var] >= 1
                )


def test_ring_axioms_randomized():
    rng = random.Random(9)
    for _ in range(40):
        a = random_poly(rng)
        b = random_poly(rng)
        c = random_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_restriction_examples():
    zaxis = ((0, 0, 0), (0, 0, 1))
    assert restrict_parametric(SPHERE, *zaxis) == UniPoly([-1, 0, 1])
    diag = ((0, 0, 0), (1, 1, 1))
    assert restrict_parametric(GRAPH, *diag) == UniPoly([0, -1, 1])
    hyper = parse_poly("x^2+y^2-z^2-1")
    ruling = ((1, 0, 0), (0, 1, 1))
    assert restrict_parametric(hyper, *ruling).is_zero()


def test_restriction_zero_direction_rejected():
    with pytest.raises(ValueError):
        restrict_parametric(SPHERE, (0, 0, 0), (0, 0, 0))


def test_restriction_matches_pointwise_evaluation():
    rng = random.Random(13)
    for _ in range(25):
        p = random_poly(rng)
        base = tuple(random_fraction(rng) for _ in range(3))
        direction = tuple(random_fraction(rng) for _ in range(3))
        if all(d == 0 for d in direction):
            continue
        q = restrict_parametric(p, base, direction)
        for _ in range(4):
            t = random_fraction(rng)
            point = tuple(b + t * d for b, d in zip(base, direction))
            assert q.eval(t) == poly_eval(p, point)


def test_divides_examples():
    assert divides(parse_poly("x+y"), parse_poly("x^2-y^2"))
    assert not divides(parse_poly("x+y"), parse_poly("x^2+y^2"))
    assert divides(SPHERE, SPHERE * GRAPH)


def test_divides_randomized():
    rng = random.Random(17)
    for _ in range(30):
        p = nonzero_random_poly(rng, terms=3)
        h = nonzero_random_poly(rng, terms=3)
        product = p * h
        assert divides(p, product)
        quotient = exact_divide(p, product)
        assert quotient == h or quotient * p == product
        if p.degree >= 1:
            assert not divides(p, product + 1)


def _brute_force_shared_rational_root(f: UniPoly, g: UniPoly, candidates):
    shared = []
    for r in candidates:
        if f.eval(r) == 0 and g.eval(r) == 0:
            shared.append(r)
    return shared


def test_sylvester_examples():
    # f = m^2 - a, g = m - b with polynomial coefficients in (a, b)
    a = MultiPoly.var(2, 0)
    b = MultiPoly.var(2, 1)
    one = MultiPoly.const(2, 1)
    res = sylvester_resultant([-a, MultiPoly.zero(2), one], [-b, one])
    assert res == b * b - a

    # identical polynomials share every root
    coeffs = [MultiPoly.const(1, 1), MultiPoly.zero(1), MultiPoly.const(1, 1)]
    assert sylvester_resultant(coeffs, coeffs).is_zero()


def test_sylvester_shared_root_fixture():
    # quadratic -1 + m^2 and cubic -m + m^3 share the roots +-1; the
    # brute-force rational-root oracle and the resultant must agree.
    f = UniPoly([-1, 0, 1])
    g = UniPoly([0, -1, 0, 1])
    candidates = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]
    assert _brute_force_shared_rational_root(f, g, candidates)
    fc = [MultiPoly.const(1, c) for c in f.coeffs]
    gc = [MultiPoly.const(1, c) for c in g.coeffs]
    assert sylvester_resultant(fc, gc).is_zero()


def test_sylvester_agrees_with_root_comparison_on_constructed_fixtures():
    rng = random.Random(23)
    for _ in range(20):
        shared = rng.random() < 0.5
        r1 = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        r2 = r1 if shared else r1 + Fraction(1, 5)
        f = UniPoly([-r1, 1]) * UniPoly([-rng.randint(1, 3), 1])
        g = UniPoly([-r2, 1]) * UniPoly([rng.randint(4, 6), 1])
        fc = [MultiPoly.const(1, c) for c in f.coeffs]
        gc = [MultiPoly.const(1, c) for c in g.coeffs]
        res = sylvester_resultant(fc, gc)
        candidates = {r1, r2, Fraction(rng.randint(1, 3)), Fraction(-rng.randint(4, 6))}
        brute = _brute_force_shared_rational_root(f, g, candidates)
        assert res.is_zero() == bool(brute)


def test_common_factor_examples():
    p = parse_poly("(x+y)*z")
    q = parse_poly("(x+y)*(x-z)")
    assert has_common_factor(p, q)
    assert not has_common_factor(parse_poly("x"), parse_poly("y"))
    # constructed product sharing the sphere factor
    assert has_common_factor(SPHERE, SPHERE * GRAPH)
    assert not has_common_factor(SPHERE, GRAPH)


def test_coeffs_in_var_reconstructs():
    rng = random.Random(29)
    for _ in range(20):
        p = nonzero_random_poly(rng)
        for var in range(3):
            coeffs = coeffs_in_var(p, var)
            acc = MultiPoly.zero(3)
            for k, c in enumerate(coeffs):
                acc = acc + c * MultiPoly.var(3, var, k) if k else acc + c
            assert acc == p


def test_monomial_order_matches_documented_layout():
    assert monomials(3, 2, min_deg=1) == [
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    ]


def test_to_string_round_trips_through_parser():
    rng = random.Random(31)
    for _ in range(50):
        p = random_poly(rng)
        assert parse_poly(to_string(p, names=["x", "y", "z"])) == p
