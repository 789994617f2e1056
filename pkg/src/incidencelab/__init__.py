"""incidencelab: exact-arithmetic workbench for incidence geometry.

Core capabilities: sparse rational polynomial algebra, exact line/plane
predicates, vanishing-polynomial fitting and certified degree reduction,
Cayley-Salmon flecnode polynomials with ruledness certificates, brute-force
incidence/joint censuses, the rigid-motion transform for distance problems,
and iterated polynomial ham-sandwich partitioning.  Everything numeric is a
Fraction; every probabilistic step is seeded and every returned object is
certified by exact re-evaluation.
"""

from fractions import Fraction as Rat

from .multipoly import (
    MultiPoly,
    divides,
    has_common_factor,
    monomials,
    poly_eval,
    poly_partial,
    restrict_parametric,
    sylvester_resultant,
    to_string,
)
from .unipoly import UniPoly, sturm_count
from .linalg import nullspace_vector, rank
from .geometry import (
    Line3,
    Plane,
    are_coplanar,
    is_joint,
    line_intersection,
    line_on_surface,
    point3,
    restrict_to_line,
)
from .fitting import (
    DegreeReduceParams,
    degree_reduce,
    fit_on_lines,
    fit_on_points,
    min_vanishing_degree,
    monomial_count,
)
from .flecnode import (
    DirectionalForms,
    FlecnodeResult,
    RuledVerdict,
    directional_forms,
    flecnodal_at,
    flecnode_polynomial,
    ruled_certificate,
)
from .census import (
    IntersectionCensus,
    JointsReport,
    PlanarLine,
    concentration,
    count_joints,
    intersection_census,
    pk_census,
    planar_incidences,
)
from .configs import make_configuration
from .motions import (
    MotionLine,
    QuadrupleReport,
    apply_motion,
    distance_set,
    motion_line,
    quadruple_count,
    quadruple_incidence_check,
    recover_pair,
)
from .partition import (
    PartitionResult,
    bisect_classes,
    cell_census,
    degree_schedule,
    lift,
    line_crossings,
    partition,
    verify_bisection,
)
from .polyparse import PolyParseError, parse_poly, print_poly
from .experiments import run_experiment

__version__ = "0.1.0"
