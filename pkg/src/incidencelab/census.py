"""Brute-force exact counting of incidences, intersections, joints.

Everything here is the oracle the rest of the workbench is judged against,
so clarity wins over speed: all-pairs intersection, all-triples joint checks,
explicit witnesses for concentration reports.  Sizes are desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .fitting import fit_on_lines
from .geometry import Plane, is_joint, line_intersection, line_on_surface, plane_through_lines
from .multipoly import MultiPoly


@dataclass
class IntersectionCensus:
    """Exact map from intersection points to the lines through them."""

    lines: list
    multiplicity: dict        # point -> number of lines through it (>= 2)
    through: dict             # point -> sorted tuple of line indices
    intersecting_pairs: int   # unordered pairs of lines with a common point

    def points_with_multiplicity_at_least(self, k):
        return [w for w in sorted(self.multiplicity) if self.multiplicity[w] >= k]

    def pair_identity_holds(self):
        """sum over points of C(mult, 2) must equal the raw pair count."""
        return sum(comb(m, 2) for m in self.multiplicity.values()) == self.intersecting_pairs


def intersection_census(lines) -> IntersectionCensus:
    """All pairwise intersections of a family of distinct lines."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise ValueError("duplicate lines in census input")
    through = {}
    pairs = 0
    for i, j in combinations(range(len(lines)), 2):
        w = line_intersection(lines[i], lines[j])
        if w is None:
            continue
        pairs += 1
        bucket = through.setdefault(w, set())
        bucket.add(i)
        bucket.add(j)
    through = {w: tuple(sorted(ids)) for w, ids in through.items()}
    multiplicity = {w: len(ids) for w, ids in through.items()}
    return IntersectionCensus(lines, multiplicity, through, pairs)


def pk_census(census: IntersectionCensus, k: int):
    """Points met by between k and 2k of the lines."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return [w for w in sorted(census.multiplicity) if k <= census.multiplicity[w] <= 2 * k]


@dataclass
class JointsReport:
    """Joints found by exhaustive triple checks at high-multiplicity points."""

    joints: list
    count: int
    line_count: int
    ratio_to_three_halves_power: float


def count_joints(lines) -> JointsReport:
    """All points where three lines with independent directions meet."""
    census = intersection_census(lines)
    joints = []
    for w in sorted(census.multiplicity):
        ids = census.through[w]
        if len(ids) < 3:
            continue
        found = False
        for a, b, c in combinations(ids, 3):
            if is_joint(census.lines[a], census.lines[b], census.lines[c], w):
                found = True
                break
        if found:
            joints.append(w)
    n = len(census.lines)
    ratio = len(joints) / (n ** 1.5) if n else 0.0
    return JointsReport(joints, len(joints), n, ratio)


@dataclass
class ConcentrationReport:
    """Worst-case plane and quadric concentration with explicit witnesses."""

    max_coplanar: int
    plane_witness: Plane | None
    max_coquadric: int
    quadric_witness: MultiPoly | None
    quadric_strategy: str


EXHAUSTIVE_QUADRIC_LIMIT = 20


def concentration(lines) -> ConcentrationReport:
    """Maximum number of input lines in a common plane / degree-2 surface.

    Planes are enumerated exactly from coplanar line pairs.  The quadric
    search fits all lines first; below the size threshold it falls back to
    exhaustive 9-line subsets, above it to greedy growth (labelled as such).
    """
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise ValueError("duplicate lines in concentration input")
    n = len(lines)
    max_coplanar = min(1, n)
    plane_witness = None
    seen_planes = set()
    for i, j in combinations(range(n), 2):
        plane = plane_through_lines(lines[i], lines[j])
        if plane is None or plane in seen_planes:
            continue
        seen_planes.add(plane)
        count = sum(1 for l in lines if plane.contains_line(l))
        if count > max_coplanar:
            max_coplanar = count
            plane_witness = plane

    max_coq = 0
    quad_witness = None
    strategy = "none"
    if n:
        poly = fit_on_lines(lines, 2)
        if poly is not None:
            max_coq = n
            quad_witness = poly
            strategy = "all-lines-fit"
        elif n <= EXHAUSTIVE_QUADRIC_LIMIT:
            strategy = "exhaustive-subsets"
            max_coq, quad_witness = _quadric_subset_search(lines)
        else:
            strategy = "greedy-growth"
            max_coq, quad_witness = _quadric_greedy_search(lines)
    return ConcentrationReport(max_coplanar, plane_witness, max_coq, quad_witness, strategy)


def _count_on_quadric(lines, poly):
    return sum(1 for l in lines if line_on_surface(l, poly))


def _quadric_subset_search(lines):
    """Candidate quadrics from line subsets, exact at desk scale.

    Any 3 lines lie on some quadric (9 conditions, 10 coefficients), and a
    pairwise-skew triple determines its regulus uniquely, so 3-subsets with
    the full kernel basis catch small families; 9-subsets (the quadric's
    degrees of freedom) pin down large families directly.
    """
    from .fitting import line_sample_points, _evaluation_row
    from .linalg import solve_homogeneous_all
    from .multipoly import monomials

    n = len(lines)
    monos = monomials(3, 2)
    row_cache = []
    for l in lines:
        pts = line_sample_points(l, 2)
        row_cache.append([_evaluation_row(monos, w) for w in pts])
    best = 0
    witness = None
    seen = set()

    def consider(subset):
        nonlocal best, witness
        rows = [r for i in subset for r in row_cache[i]]
        for vec in solve_homogeneous_all(rows, len(monos)):
            poly = MultiPoly(3, {e: c for e, c in zip(monos, vec) if c != 0})
            if poly.is_zero():
                continue
            key = _normalized_poly_key(poly)
            if key in seen:
                continue
            seen.add(key)
            if not all(line_on_surface(lines[i], poly) for i in subset):
                continue
            count = _count_on_quadric(lines, poly)
            if count > best:
                best = count
                witness = poly

    for subset in combinations(range(n), min(3, n)):
        consider(subset)
    if n >= 9:
        for subset in combinations(range(n), 9):
            consider(subset)
    return best, witness


def _quadric_greedy_search(lines):
    """Greedy containment growth from each anchor line (lower bound only)."""
    n = len(lines)
    best = 0
    witness = None
    for anchor in range(n):
        subset = [lines[anchor]]
        current = None
        for j in range(n):
            if lines[j] == lines[anchor]:
                continue
            trial = fit_on_lines(subset + [lines[j]], 2)
            if trial is not None:
                subset.append(lines[j])
                current = trial
        if current is not None:
            count = _count_on_quadric(lines, current)
            if count > best:
                best = count
                witness = current
    return best, witness


def _normalized_poly_key(p: MultiPoly):
    exps, lead = p.leading()
    scaled = {e: c / lead for e, c in p.terms.items()}
    return (p.arity, tuple(sorted(scaled.items())))


# Planar incidence counting (for the point-line incidence bound check).

class PlanarLine:
    """Line a*x + b*y = c in the plane, canonicalised like Line3."""

    __slots__ = ("coeffs",)

    def __init__(self, a, b, c):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate planar line")
        scale = a if a != 0 else b
        self.coeffs = (a / scale, b / scale, c / scale)

    def contains_point(self, w):
        a, b, c = self.coeffs
        return a * Fraction(w[0]) + b * Fraction(w[1]) == c

    def __eq__(self, other):
        return isinstance(other, PlanarLine) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PlanarLine({', '.join(map(str, self.coeffs))})"


@dataclass
class PlanarIncidenceReport:
    incidences: int
    point_count: int
    line_count: int
    bound_value: float
    ratio: float


def planar_incidences(points, lines) -> PlanarIncidenceReport:
    """Exact incidence count against n^(2/3) m^(2/3) + n + m."""
    pts = [tuple(Fraction(c) for c in w) for w in points]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise ValueError("duplicate lines")
    count = sum(1 for w in pts for l in lines if l.contains_point(w))
    n = len(pts)
    m = len(lines)
    bound = n ** (2.0 / 3.0) * m ** (2.0 / 3.0) + n + m
    ratio = count / bound if bound else 0.0
    return PlanarIncidenceReport(count, n, m, bound, ratio)
