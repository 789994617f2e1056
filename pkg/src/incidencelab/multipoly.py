"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples to nonzero Fractions; the zero
polynomial has an empty term map.  The monomial order used everywhere for
leading terms, division and printing is graded lexicographic (total degree
first, then lexicographic with earlier variables heavier), fixed once so all
reductions are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .unipoly import UniPoly


def grlex_key(exps):
    return (sum(exps), exps)


def monomials(arity, max_deg, min_deg=0):
    """All exponent tuples with min_deg <= total degree <= max_deg.

    Ordered by ascending degree and, within a degree, descending
    lexicographic exponent tuple (x before y before z).
    """
    out = []

    def walk(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            walk(prefix + (e,), remaining - e, slots - 1)

    for deg in range(min_deg, max_deg + 1):
        walk((), deg, arity)
    return out


class MultiPoly:
    """Immutable sparse multivariate polynomial over the rationals."""

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                if len(exps) != arity:
                    raise ValueError(f"exponent tuple {exps} does not match arity {arity}")
                clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def const(cls, arity, value):
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def var(cls, arity, index, power=1):
        exps = [0] * arity
        exps[index] = power
        return cls(arity, {tuple(exps): Fraction(1)})

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.arity}, {to_string(self)!r})"

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        return MultiPoly.const(self.arity, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return MultiPoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return MultiPoly(self.arity, {e: c * f for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        acc = MultiPoly.const(self.arity, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc


def poly_eval(p: MultiPoly, point):
    """Exact value of p at a rational point."""
    if len(point) != p.arity:
        raise ValueError(f"point has {len(point)} coordinates, polynomial arity is {p.arity}")
    vals = [Fraction(x) for x in point]
    powers = [{0: Fraction(1)} for _ in range(p.arity)]
    total = Fraction(0)
    for exps, coeff in p.terms.items():
        term = coeff
        for i, e in enumerate(exps):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = vals[i] ** e
            term *= cache[e]
        total += term
    return total


def poly_partial(p: MultiPoly, var):
    """Formal partial derivative with respect to variable index var."""
    if var < 0 or var >= p.arity:
        raise ValueError(f"variable index {var} out of range for arity {p.arity}")
    out = {}
    for exps, coeff in p.terms.items():
        e = exps[var]
        if e == 0:
            continue
        new = list(exps)
        new[var] = e - 1
        out[tuple(new)] = coeff * e
    return MultiPoly(p.arity, out)


def restrict_parametric(p: MultiPoly, base, direction):
    """Univariate q(t) = p(base + t * direction)."""
    if len(base) != p.arity or len(direction) != p.arity:
        raise ValueError("base/direction length must equal polynomial arity")
    if all(Fraction(d) == 0 for d in direction):
        raise ValueError("zero direction vector")
    lines = [UniPoly([Fraction(b), Fraction(d)]) for b, d in zip(base, direction)]
    powers = [{0: UniPoly([1])} for _ in range(p.arity)]
    acc = UniPoly()
    for exps, coeff in p.terms.items():
        term = UniPoly([coeff])
        for i, e in enumerate(exps):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                top = max(cache)
                q = cache[top]
                for k in range(top + 1, e + 1):
                    q = q * lines[i]
                    cache[k] = q
            term = term * cache[e]
        acc = acc + term
    return acc


def substitute(p: MultiPoly, values):
    """Substitute a MultiPoly (or rational) for each variable.

    values[i] is either a polynomial of the target arity or a rational.
    """
    target = None
    for v in values:
        if isinstance(v, MultiPoly):
            target = v.arity
            break
    if target is None:
        raise ValueError("at least one substitution value must be a polynomial")
    subs = []
    for v in values:
        subs.append(v if isinstance(v, MultiPoly) else MultiPoly.const(target, v))
    powers = [{0: MultiPoly.const(target, 1)} for _ in range(p.arity)]
    acc = MultiPoly.zero(target)
    for exps, coeff in p.terms.items():
        term = MultiPoly.const(target, coeff)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                top = max(cache)
                q = cache[top]
                for k in range(top + 1, e + 1):
                    q = q * subs[i]
                    cache[k] = q
            term = term * cache[e]
        acc = acc + term
    return acc


def exact_divide(p: MultiPoly, q: MultiPoly):
    """Quotient q / p when p divides q exactly, else None.

    Single-divisor graded-lex reduction; since the order is multiplicative,
    p | q forces LT(p) | LT(q) at every step, so the loop can stop early.
    """
    if p.is_zero():
        raise ValueError("division by the zero polynomial")
    if q.arity != p.arity:
        raise ValueError("arity mismatch")
    quotient = MultiPoly.zero(p.arity)
    rem = q
    p_exps, p_coeff = p.leading()
    while not rem.is_zero():
        r_exps, r_coeff = rem.leading()
        diff = tuple(a - b for a, b in zip(r_exps, p_exps))
        if any(d < 0 for d in diff):
            return None
        mono = MultiPoly(p.arity, {diff: r_coeff / p_coeff})
        quotient = quotient + mono
        rem = rem - mono * p
    return quotient


def divides(p: MultiPoly, q: MultiPoly):
    """True iff q = p * h for some polynomial h."""
    if p.is_zero():
        raise ValueError("divisibility by the zero polynomial")
    if q.is_zero():
        return True
    return exact_divide(p, q) is not None


def coeffs_in_var(p: MultiPoly, var):
    """p written as a polynomial in one variable.

    Returns [c_0, ..., c_d] with p = sum c_k * x_var^k; each c_k keeps the
    full arity with exponent zero in the selected variable.
    """
    d = p.degree_in(var)
    if d < 0:
        return []
    buckets = [dict() for _ in range(d + 1)]
    for exps, coeff in p.terms.items():
        k = exps[var]
        reduced = list(exps)
        reduced[var] = 0
        buckets[k][tuple(reduced)] = coeff
    return [MultiPoly(p.arity, b) for b in buckets]


def poly_det(matrix):
    """Determinant of a square matrix of MultiPoly entries.

    Expansion over column subsets with memoisation; fine at the small sizes
    the elimination steps produce (Sylvester matrices up to ~8x8).
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    arity = matrix[0][0].arity
    memo = {}

    def minor(row, cols):
        if not cols:
            return MultiPoly.const(arity, 1)
        key = cols
        if key in memo and row == n - len(cols):
            return memo[key]
        acc = MultiPoly.zero(arity)
        for idx, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            rest = cols[:idx] + cols[idx + 1:]
            sub = minor(row + 1, rest)
            contrib = entry * sub
            acc = acc + (contrib if idx % 2 == 0 else -contrib)
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def sylvester_resultant(f_coeffs, g_coeffs):
    """Resultant of two polynomials in an eliminated variable.

    f_coeffs and g_coeffs list the coefficients (lowest degree first) of the
    eliminated variable; entries are MultiPoly in the remaining variables.
    The lists fix the *formal* degrees, so trailing zero entries are honoured:
    for homogeneous binary forms this makes a common projective root at
    infinity show up as a vanishing determinant.
    """
    if not f_coeffs or not g_coeffs:
        raise ValueError("empty coefficient list")
    m = len(f_coeffs) - 1
    n = len(g_coeffs) - 1
    if m < 1 or n < 1:
        raise ValueError("resultant needs degree >= 1 on both sides")
    arity = f_coeffs[0].arity
    if all(c.is_zero() for c in f_coeffs) or all(c.is_zero() for c in g_coeffs):
        raise ValueError("resultant of the zero polynomial")
    size = m + n
    zero = MultiPoly.zero(arity)
    rows = []
    f_desc = list(reversed(f_coeffs))
    g_desc = list(reversed(g_coeffs))
    for shift in range(n):
        rows.append([zero] * shift + f_desc + [zero] * (size - m - 1 - shift))
    for shift in range(m):
        rows.append([zero] * shift + g_desc + [zero] * (size - n - 1 - shift))
    return poly_det(rows)


def has_common_factor(p: MultiPoly, q: MultiPoly):
    """True iff gcd(p, q) is non-constant.

    Decided by univariate resultants: a non-constant common factor has
    positive degree in some variable present in both inputs, and exactly then
    the resultant in that variable vanishes identically.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("common-factor test needs nonzero polynomials")
    for var in range(p.arity):
        dp = p.degree_in(var)
        dq = q.degree_in(var)
        if dp < 1 or dq < 1:
            continue
        res = sylvester_resultant(coeffs_in_var(p, var), coeffs_in_var(q, var))
        if res.is_zero():
            return True
    return False


def to_string(p: MultiPoly, names=None):
    """Render in the workbench expression grammar (explicit '*', '^')."""
    if p.is_zero():
        return "0"
    if names is None:
        names = ["x", "y", "z", "v1", "v2", "v3"][: p.arity]
    parts = []
    for exps in sorted(p.terms, key=grlex_key, reverse=True):
        coeff = p.terms[exps]
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not parts:
            if coeff > 0:
                parts.append(body)
            elif factors and mag == 1:
                # the grammar has no unary minus on variables: "-x" must
                # round-trip as "-1*x"
                parts.append("-1*" + "*".join(factors))
            else:
                parts.append("-" + body)
        else:
            parts.append(("+" if coeff > 0 else "-") + body)
    return "".join(parts)
