"""Fitting low-degree vanishing polynomials to points and lines.

A degree-D polynomial in 3 variables has (D+1)(D+2)(D+3)/6 coefficients, so a
point set smaller than that always admits a nonzero vanishing polynomial: the
evaluation matrix is underdetermined and any kernel vector is a witness.
Lines are handled by sampling D+1 points per line, which pins the whole
restriction to zero once the degree budget is respected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Line3, line_on_surface
from .linalg import nullspace_vector
from .multipoly import MultiPoly, monomials, poly_eval


def monomial_count(degree: int) -> int:
    """Dimension of the space of polynomials of degree <= degree in 3 vars."""
    return (degree + 1) * (degree + 2) * (degree + 3) // 6


def _dedupe_points(points):
    """Distinct points in canonical order.

    Sorting fixes the evaluation-matrix row order, so the returned kernel
    vector does not depend on how the caller happened to order the targets.
    """
    seen = set()
    for w in points:
        w = tuple(Fraction(c) for c in w)
        if len(w) != 3:
            raise ValueError("points must have 3 coordinates")
        seen.add(w)
    return sorted(seen)


def _evaluation_row(monos, w):
    row = []
    powers = [{0: Fraction(1)} for _ in range(3)]
    for exps in monos:
        val = Fraction(1)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = Fraction(w[i]) ** e
            val *= cache[e]
        row.append(val)
    return row


def _kernel_poly(rows, monos):
    vec = nullspace_vector(rows, len(monos))
    if vec is None:
        return None
    return MultiPoly(3, {exps: c for exps, c in zip(monos, vec) if c != 0})


def fit_on_points(points, degree: int):
    """Nonzero polynomial of degree <= degree vanishing at every point.

    Returns None only when the evaluation matrix has full column rank, which
    cannot happen while the distinct-point count is below the monomial count.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    pts = _dedupe_points(points)
    monos = monomials(3, degree)
    rows = [_evaluation_row(monos, w) for w in pts]
    return _kernel_poly(rows, monos)


def min_vanishing_degree(points):
    """Smallest degree with a vanishing witness, plus the witness."""
    pts = _dedupe_points(points)
    if not pts:
        raise ValueError("need at least one point")
    degree = 1  # a nonzero constant cannot vanish anywhere
    while True:
        poly = fit_on_points(pts, degree)
        if poly is not None:
            return degree, poly
        degree += 1


def line_sample_points(l: Line3, degree: int):
    """D+1 evenly spaced parameters t = 0..D on the line."""
    return [l.point_at(t) for t in range(degree + 1)]


def fit_on_lines(lines, degree: int):
    """Nonzero polynomial of degree <= degree vanishing on every line.

    Imposes degree+1 point conditions per line; a degree-<=D restriction with
    D+1 roots is identically zero, so vanishing at the samples is vanishing
    on the line.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    pts = []
    for l in lines:
        pts.extend(line_sample_points(l, degree))
    pts = _dedupe_points(pts)
    monos = monomials(3, degree)
    rows = [_evaluation_row(monos, w) for w in pts]
    poly = _kernel_poly(rows, monos)
    if poly is None:
        return None
    # The sample argument makes this a certainty; assert it cheaply anyway.
    for l in lines:
        if not line_on_surface(l, poly):
            raise AssertionError("fitted polynomial fails to contain an input line")
    return poly


@dataclass(frozen=True)
class DegreeReduceParams:
    """Sampling probability, seed, degree cap and retry budget."""

    probability: Fraction
    seed: int
    degree_cap: int
    retries: int = 5

    def __post_init__(self):
        p = Fraction(self.probability)
        if not 0 < p <= 1:
            raise ValueError("probability must lie in (0, 1]")
        object.__setattr__(self, "probability", p)
        if self.degree_cap < 0:
            raise ValueError("degree cap must be >= 0")
        if self.retries < 1:
            raise ValueError("retry count must be >= 1")


def degree_reduce(lines1, lines2, params: DegreeReduceParams):
    """Low-degree polynomial vanishing on lines2, built from a sample of lines1.

    Keeps each line of lines1 independently with the given probability
    (seeded), fits at the degree cap, and only returns the polynomial after
    verifying every line of lines2 lies on its zero set.  Retries with fresh
    sub-seeds; None after the budget is spent means the hypothesis (lots of
    mutual intersections) was not met at these parameters.
    """
    lines1 = list(lines1)
    lines2 = list(lines2)
    threshold = float(params.probability)
    for attempt in range(params.retries):
        rng = random.Random(f"{params.seed}:{attempt}")
        sample = [l for l in lines1 if rng.random() < threshold]
        if not sample:
            continue
        poly = fit_on_lines(sample, params.degree_cap)
        if poly is None:
            continue
        if all(line_on_surface(l, poly) for l in lines2):
            return poly
    return None


def verify_vanishing(poly: MultiPoly, points=(), lines=()):
    """Exact check that poly vanishes at all points and along all lines."""
    for w in points:
        if poly_eval(poly, w) != 0:
            return False
    for l in lines:
        if not line_on_surface(l, poly):
            return False
    return True
