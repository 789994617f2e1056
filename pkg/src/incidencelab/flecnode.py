"""Flecnode polynomials and ruledness certificates.

The construction follows the classical Cayley-Salmon route.  For a surface
p(x, y, z) = 0 and a direction vector v, the forms

    F1 = sum_i  dp/dx_i * v_i
    F2 = sum_ij d2p/dx_i dx_j * v_i v_j
    F3 = sum_ijk d3p/... * v_i v_j v_k

are the order-1..3 coefficients of t in p(w + t*v).  A point w is flecnodal
when some nonzero direction kills all three, i.e. a line has third-order
contact with the surface at w.  Eliminating the direction (solve F1 = 0 for
one v-coordinate, then take the resultant of the two remaining binary forms)
yields a single polynomial in (x, y, z) that vanishes at every flecnodal
point; the classical degree bound for it is 11*d - 24.

Variables live in a 6-variable arena: indices 0..2 are x, y, z and indices
3..5 are the direction coordinates v1, v2, v3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import line_on_surface
from .multipoly import (
    MultiPoly,
    divides,
    exact_divide,
    poly_partial,
    substitute,
    sylvester_resultant,
)

RULED_CERTIFIED = "ruled-certified"
NOT_RULED_CERTIFIED = "not-ruled-certified"
INCONCLUSIVE = "inconclusive"


def embed_xyz(p: MultiPoly) -> MultiPoly:
    """Lift an arity-3 polynomial into the 6-variable arena."""
    return MultiPoly(6, {exps + (0, 0, 0): c for exps, c in p.terms.items()})


def project_xyz(p: MultiPoly) -> MultiPoly:
    """Drop the direction variables (which must not occur)."""
    out = {}
    for exps, c in p.terms.items():
        if any(exps[3:]):
            raise ValueError("polynomial still involves direction variables")
        out[exps[:3]] = c
    return MultiPoly(3, out)


@dataclass(frozen=True)
class DirectionalForms:
    """Derivative forms of order 1, 2 and 3; homogeneous in (v1, v2, v3)."""

    f1: MultiPoly
    f2: MultiPoly
    f3: MultiPoly


def directional_forms(p: MultiPoly) -> DirectionalForms:
    """The three directional derivative forms of p."""
    if p.arity != 3:
        raise ValueError("expected an arity-3 polynomial")
    if p.degree < 1:
        raise ValueError("expected degree >= 1")
    v = [MultiPoly.var(6, 3 + i) for i in range(3)]
    partials1 = [poly_partial(p, i) for i in range(3)]
    f1 = MultiPoly.zero(6)
    for i in range(3):
        f1 = f1 + embed_xyz(partials1[i]) * v[i]
    f2 = MultiPoly.zero(6)
    partials2 = {}
    for i in range(3):
        for j in range(3):
            key = tuple(sorted((i, j)))
            if key not in partials2:
                partials2[key] = poly_partial(partials1[key[0]], key[1])
            f2 = f2 + embed_xyz(partials2[key]) * v[i] * v[j]
    f3 = MultiPoly.zero(6)
    partials3 = {}
    for i in range(3):
        for j in range(3):
            for k in range(3):
                key = tuple(sorted((i, j, k)))
                if key not in partials3:
                    partials3[key] = poly_partial(partials2[key[:2]], key[2])
                f3 = f3 + embed_xyz(partials3[key]) * v[i] * v[j] * v[k]
    return DirectionalForms(f1, f2, f3)


def _substitute_direction(form: MultiPoly, var6: int, minus_r: MultiPoly,
                          denom: MultiPoly, hom_degree: int) -> MultiPoly:
    """form with v_var := minus_r / denom, cleared by denom**hom_degree.

    form must be homogeneous of degree hom_degree in the direction variables;
    a term with v_var-exponent e picks up minus_r**e * denom**(hom_degree-e).
    """
    out = MultiPoly.zero(6)
    minus_r_pows = {0: MultiPoly.const(6, 1)}
    denom_pows = {0: MultiPoly.const(6, 1)}

    def power(cache, base, n):
        if n not in cache:
            top = max(cache)
            acc = cache[top]
            for k in range(top + 1, n + 1):
                acc = acc * base
                cache[k] = acc
        return cache[n]

    for exps, coeff in form.terms.items():
        e = exps[var6]
        rest = list(exps)
        rest[var6] = 0
        mono = MultiPoly(6, {tuple(rest): coeff})
        term = mono * power(minus_r_pows, minus_r, e)
        term = term * power(denom_pows, denom, hom_degree - e)
        out = out + term
    return out


def _binary_coeff_list(form: MultiPoly, u6: int, w6: int, formal_degree: int):
    """Coefficients of a binary form in (v_u, v_w), lowest u-power first.

    Entries are arity-3 polynomials in (x, y, z); trailing zeros are kept so
    the formal degree (and with it roots at infinity) is preserved.
    """
    buckets = [dict() for _ in range(formal_degree + 1)]
    for exps, coeff in form.terms.items():
        eu, ew = exps[u6], exps[w6]
        if eu + ew != formal_degree or any(exps[i] for i in (3, 4, 5) if i not in (u6, w6)):
            raise ValueError("not a binary form of the expected degree")
        buckets[eu][exps[:3]] = coeff
    return [MultiPoly(3, b) for b in buckets]


def _eliminate_direction(forms: DirectionalForms, chart: int):
    """Binary forms G2, G3 in the two off-chart direction variables.

    F1 = 0 is solved for the chart direction coordinate and the denominator
    (the chart gradient component) is cleared from F2 and F3.
    """
    var6 = 3 + (chart - 1)
    others6 = [i for i in (3, 4, 5) if i != var6]
    grad6 = MultiPoly.zero(6)
    minus_r = MultiPoly.zero(6)
    for exps, coeff in forms.f1.terms.items():
        if exps[var6] == 1:
            rest = list(exps)
            rest[var6] = 0
            grad6 = grad6 + MultiPoly(6, {tuple(rest): coeff})
        else:
            minus_r = minus_r - MultiPoly(6, {exps: coeff})
    g2 = _substitute_direction(forms.f2, var6, minus_r, grad6, 2)
    g3 = _substitute_direction(forms.f3, var6, minus_r, grad6, 3)
    u6, w6 = others6
    return (
        _binary_coeff_list(g2, u6, w6, 2),
        _binary_coeff_list(g3, u6, w6, 3),
        project_xyz(grad6),
    )


@dataclass
class FlecnodeResult:
    """Eliminant for one chart, with the factor-removal bookkeeping.

    flec * removed_factor**removed_power == raw holds exactly; flec is the
    zero polynomial when every surface point is flecnodal in this chart
    (degree <= 2 surfaces, cylinders over inflectional curves, ...).
    """

    flec: MultiPoly
    chart: int
    raw: MultiPoly
    removed_factor: MultiPoly
    removed_power: int

    @property
    def degree(self) -> int:
        return self.flec.degree


def flecnode_polynomial(p: MultiPoly, chart: int) -> FlecnodeResult:
    """Eliminate the direction against one gradient chart.

    chart is 1, 2 or 3; the corresponding gradient component must not vanish
    identically.  Extraneous powers of that component, introduced when the
    substitution denominators are cleared, are divided back out and recorded.
    """
    if chart not in (1, 2, 3):
        raise ValueError("chart must be 1, 2 or 3")
    grad = poly_partial(p, chart - 1)
    if grad.is_zero():
        raise ValueError(f"gradient component {chart} is identically zero; pick another chart")
    forms = directional_forms(p)
    g2_list, g3_list, grad_check = _eliminate_direction(forms, chart)
    assert grad_check == grad
    if all(c.is_zero() for c in g2_list) or all(c.is_zero() for c in g3_list):
        zero = MultiPoly.zero(3)
        return FlecnodeResult(zero, chart, zero, grad, 0)
    raw = sylvester_resultant(g2_list, g3_list)
    flec = raw
    removed = 0
    if not flec.is_zero() and grad.degree >= 1:
        while True:
            q = exact_divide(grad, flec)
            if q is None:
                break
            flec = q
            removed += 1
    return FlecnodeResult(flec, chart, raw, grad, removed)


def admissible_charts(p: MultiPoly):
    return [c for c in (1, 2, 3) if not poly_partial(p, c - 1).is_zero()]


def flecnodal_at(p: MultiPoly, w) -> bool:
    """Is there a nonzero direction with third-order contact at w?

    w must lie on the surface.  Decided over the complex numbers by exact
    case analysis: the specialised forms are eliminated down to two binary
    forms whose resultant (on full formal-degree coefficient vectors, so
    projective roots at infinity count) vanishes iff a common root exists.
    """
    from .multipoly import poly_eval

    if poly_eval(p, w) != 0:
        raise ValueError("point is not on the surface")
    forms = directional_forms(p)
    vals = [MultiPoly.const(6, Fraction(c)) for c in w]
    vs = [MultiPoly.var(6, i) for i in (3, 4, 5)]
    f1 = substitute(forms.f1, vals + vs)
    f2 = substitute(forms.f2, vals + vs)
    f3 = substitute(forms.f3, vals + vs)
    if f1.is_zero():
        # Any two plane curves (or fewer) meet over the complex numbers.
        return True
    chart = None
    for c in (1, 2, 3):
        coeff = f1.terms.get(tuple(1 if i == 3 + (c - 1) else 0 for i in range(6)))
        if coeff:
            chart = c
            break
    var6 = 3 + (chart - 1)
    others6 = [i for i in (3, 4, 5) if i != var6]
    coeff_mono = tuple(1 if i == var6 else 0 for i in range(6))
    denom = MultiPoly.const(6, f1.terms[coeff_mono])
    minus_r = denom * MultiPoly.var(6, var6) - f1
    g2 = _substitute_direction(f2, var6, minus_r, denom, 2)
    g3 = _substitute_direction(f3, var6, minus_r, denom, 3)
    g2_list = _binary_coeff_list(g2, others6[0], others6[1], 2)
    g3_list = _binary_coeff_list(g3, others6[0], others6[1], 3)
    if all(c.is_zero() for c in g2_list) or all(c.is_zero() for c in g3_list):
        # The surviving form (binary, positive degree) always has a root.
        return True
    res = sylvester_resultant(g2_list, g3_list)
    return res.is_zero()


@dataclass
class RuledVerdict:
    """Certificate outcome plus the evidence that produced it."""

    status: str
    line_count: int
    threshold: int
    chart_evidence: dict
    reason: str


def ruled_threshold(degree: int) -> int:
    """Line-count threshold 11*d^2 - 24*d, clamped below at 0."""
    return max(0, 11 * degree * degree - 24 * degree)


def ruled_certificate(p: MultiPoly, lines, declared_irreducible: bool = False) -> RuledVerdict:
    """Certify (complex) ruledness of the surface p = 0.

    Either more than 11*d^2 - 24*d distinct verified lines on the surface, or
    a flecnode eliminant that is zero / divisible by p in every admissible
    chart, certifies a ruling.  A nonzero non-divisible eliminant refutes it
    when the caller vouches that p is irreducible.
    """
    if p.is_zero():
        raise ValueError("surface polynomial is zero")
    canonical = []
    seen = set()
    for l in lines:
        if not line_on_surface(l, p):
            raise ValueError(f"line {l!r} is not on the surface")
        if l not in seen:
            seen.add(l)
            canonical.append(l)
    d = p.degree
    threshold = ruled_threshold(d)
    if len(canonical) > threshold:
        return RuledVerdict(
            RULED_CERTIFIED, len(canonical), threshold, {},
            f"{len(canonical)} verified lines exceed the threshold {threshold}",
        )
    evidence = {}
    all_vanish = True
    any_independent = False
    charts = admissible_charts(p)
    for chart in charts:
        result = flecnode_polynomial(p, chart)
        if result.flec.is_zero():
            evidence[chart] = "zero"
        elif divides(p, result.flec):
            evidence[chart] = "divides"
        else:
            evidence[chart] = "independent"
            all_vanish = False
            any_independent = True
    for chart in (1, 2, 3):
        if chart not in charts:
            evidence[chart] = "inadmissible"
    if charts and all_vanish:
        return RuledVerdict(
            RULED_CERTIFIED, len(canonical), threshold, evidence,
            "flecnode eliminant is zero or divisible by p in every admissible chart",
        )
    if any_independent and declared_irreducible:
        return RuledVerdict(
            NOT_RULED_CERTIFIED, len(canonical), threshold, evidence,
            "a chart eliminant is nonzero and coprime to the declared-irreducible p",
        )
    return RuledVerdict(
        INCONCLUSIVE, len(canonical), threshold, evidence,
        "not enough lines and no decisive flecnode evidence",
    )
