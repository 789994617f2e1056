"""Univariate polynomials over exact rationals, plus Sturm root counting."""

from __future__ import annotations

from fractions import Fraction


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(f"{c}*t^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(parts) + ")"

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def eval(self, t):
        """Exact value at t (Horner)."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self):
        if len(self.coeffs) <= 1:
            return UniPoly()
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])


def divmod_poly(a: UniPoly, b: UniPoly):
    """Quotient and remainder of a by b (b nonzero)."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(0, a.degree - b.degree + 1)
    r = list(a.coeffs)
    lead = b.coeffs[-1]
    while len(r) - 1 >= b.degree and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < b.degree:
            break
        k = len(r) - 1 - b.degree
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(b.coeffs):
            r[k + i] -= f * c
        r.pop()
    return UniPoly(q), UniPoly(r)


def _sign_changes(values):
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(q: UniPoly):
    """Canonical Sturm sequence q, q', then negated remainders."""
    chain = [q, q.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def sturm_count(q: UniPoly, lo, hi):
    """Number of distinct real roots of q in the open interval (lo, hi).

    Endpoints must not be roots; the caller perturbs them if they are.
    """
    if q.is_zero():
        raise ValueError("Sturm count of the zero polynomial")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if q.eval(lo) == 0 or q.eval(hi) == 0:
        raise ValueError("interval endpoint is a root; perturb the endpoint")
    if q.degree == 0:
        return 0
    chain = sturm_chain(q)
    v_lo = _sign_changes([p.eval(lo) for p in chain])
    v_hi = _sign_changes([p.eval(hi) for p in chain])
    return v_lo - v_hi


def cauchy_root_bound(q: UniPoly):
    """B with every real root of q strictly inside (-B, B)."""
    if q.is_zero() or q.degree == 0:
        return Fraction(1)
    lead = abs(q.coeffs[-1])
    top = max(abs(c) for c in q.coeffs[:-1]) if q.degree >= 1 else Fraction(0)
    return Fraction(1) + top / lead


def count_real_roots(q: UniPoly):
    """Distinct real roots of q over the whole line."""
    if q.is_zero():
        raise ValueError("root count of the zero polynomial")
    if q.degree == 0:
        return 0
    b = cauchy_root_bound(q)
    return sturm_count(q, -b, b)
