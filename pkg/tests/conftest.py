import random
from fractions import Fraction

import pytest

from incidencelab.multipoly import MultiPoly


def random_fraction(rng, span=9, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_poly(rng, arity=3, max_deg=3, terms=4):
    """Small random sparse polynomial with rational coefficients."""
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, max_deg) for _ in range(arity))
        if sum(exps) > max_deg:
            continue
        coeff = random_fraction(rng)
        if coeff:
            out[exps] = out.get(exps, Fraction(0)) + coeff
    return MultiPoly(arity, out)


def nonzero_random_poly(rng, arity=3, max_deg=3, terms=4):
    while True:
        p = random_poly(rng, arity, max_deg, terms)
        if not p.is_zero():
            return p


@pytest.fixture
def rng():
    return random.Random(20250810)
