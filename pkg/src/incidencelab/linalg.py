"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of Fractions (or ints).  Elimination is
fraction-free: each row is scaled to integers and kept gcd-reduced, so no
rational arithmetic happens until back-substitution.  Pivoting is fixed
(first usable row, columns in order), which makes every result deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows):
    """Scale each row by the lcm of its denominators and reduce by the gcd."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = 1
        for x in fracs:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        ints = [int(x * scale) for x in fracs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _echelon(rows, ncols):
    """Integer row echelon form; returns (rows, pivot column list)."""
    rows = [r for r in rows if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = None
        for i in range(top, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        pv = rows[top][col]
        for i in range(top + 1, len(rows)):
            if rows[i][col] == 0:
                continue
            f = rows[i][col]
            new = [rows[i][j] * pv - rows[top][j] * f for j in range(ncols)]
            g = 0
            for v in new:
                g = gcd(g, v)
            if g > 1:
                new = [v // g for v in new]
            rows[i] = new
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(rows, ncols=None):
    """Exact rank of the matrix."""
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    _, pivots = _echelon(_integer_rows(rows), ncols)
    return len(pivots)


def nullspace_vector(rows, ncols=None):
    """One nonzero rational kernel vector of the matrix, or None.

    Returns None exactly when the matrix has full column rank.  The vector is
    canonical: the first free column (in order) is set to 1 and the pivot
    variables are back-substituted, so repeated calls agree bit for bit.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if ncols == 0:
        return None
    if not rows:
        vec = [Fraction(0)] * ncols
        vec[0] = Fraction(1)
        return tuple(vec)
    ech, pivots = _echelon(_integer_rows(rows), ncols)
    if len(pivots) == ncols:
        return None
    pivot_set = set(pivots)
    free = next(c for c in range(ncols) if c not in pivot_set)
    vec = [Fraction(0)] * ncols
    vec[free] = Fraction(1)
    for i in reversed(range(len(pivots))):
        col = pivots[i]
        row = ech[i]
        s = Fraction(0)
        for j in range(col + 1, ncols):
            if row[j] != 0 and vec[j] != 0:
                s += Fraction(row[j]) * vec[j]
        vec[col] = -s / row[col]
    return tuple(vec)


def solve_homogeneous_all(rows, ncols):
    """Basis of the kernel (one canonical vector per free column)."""
    rows = list(rows)
    if not rows:
        basis = []
        for free in range(ncols):
            vec = [Fraction(0)] * ncols
            vec[free] = Fraction(1)
            basis.append(tuple(vec))
        return basis
    ech, pivots = _echelon(_integer_rows(rows), ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i in reversed(range(len(pivots))):
            col = pivots[i]
            row = ech[i]
            s = Fraction(0)
            for j in range(col + 1, ncols):
                if row[j] != 0 and vec[j] != 0:
                    s += Fraction(row[j]) * vec[j]
            vec[col] = -s / row[col]
        basis.append(tuple(vec))
    return basis
