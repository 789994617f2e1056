"""Iterated discrete polynomial ham-sandwich partitioning.

Degree-D polynomials in 3 variables are linearised through the monomial
lifting w -> (x, y, z, x^2, xy, ...), so simultaneous bisection of point
classes becomes a hyperplane search in the lifted space.  The search itself
may use floating point as a compass, but nothing is ever returned without an
exact rational certificate: strict positive/negative counts per class are
recounted by evaluation and must not exceed ceil(|class| / 2).

Connected components are replaced by sign-class cells (the strict sign
vector across all bisecting factors); cells refine components, so every
counting bound stated for components follows from the per-cell bounds.
Points on a factor's zero set leave the cell system and are reported as
boundary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, inf

from .geometry import Line3, restrict_to_line
from .linalg import nullspace_vector
from .multipoly import MultiPoly, monomials, poly_eval
from .unipoly import UniPoly, cauchy_root_bound, sturm_count


def lift_dim(degree: int) -> int:
    """Number of nonconstant monomials of degree <= degree in 3 variables."""
    return (degree + 1) * (degree + 2) * (degree + 3) // 6 - 1


def lift(w, degree: int):
    """Values of all monomials of degree 1..degree at w, graded order."""
    if degree < 1:
        raise ValueError("lifting degree must be >= 1")
    w = tuple(Fraction(c) for c in w)
    if len(w) != 3:
        raise ValueError("points have 3 coordinates")
    out = []
    powers = [{0: Fraction(1)} for _ in range(3)]
    for exps in monomials(3, degree, min_deg=1):
        val = Fraction(1)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = w[i] ** e
            val *= cache[e]
        out.append(val)
    return tuple(out)


def degree_schedule(s: int):
    """Per-round guaranteed degrees: round r bisects up to 2^r classes."""
    if s < 2 or s & (s - 1):
        raise ValueError("s must be a power of 2 and >= 2")
    rounds = s.bit_length() - 1
    schedule = []
    for r in range(rounds):
        d = 1
        while lift_dim(d) < 2 ** r:
            d += 1
        schedule.append(d)
    return schedule


def compounded_ceiling(m: int, rounds: int) -> int:
    """Iterated ceil(m / 2): the exact per-class size guarantee."""
    for _ in range(rounds):
        m = (m + 1) // 2
    return m


def side_cap(m: int) -> int:
    return (m + 1) // 2


def verify_bisection(g: MultiPoly, classes) -> bool:
    """Post-hoc certificate: strict counts per class at most ceil(m/2).

    Independent of how g was found; plain exact evaluation.
    """
    if g.is_zero():
        return False
    for cls in classes:
        plus = minus = 0
        for w in cls:
            v = poly_eval(g, w)
            if v > 0:
                plus += 1
            elif v < 0:
                minus += 1
        cap = side_cap(len(cls))
        if plus > cap or minus > cap:
            return False
    return True


class _Instance:
    """One bisection problem: classes of points lifted to degree D."""

    def __init__(self, classes, degree):
        import numpy as np

        self.degree = degree
        self.monos = monomials(3, degree, min_deg=1)
        self.n = len(self.monos)
        self.classes = [list(cls) for cls in classes]
        self.lifted = [[lift(w, degree) for w in cls] for cls in self.classes]
        self.all_lifted = [v for cls in self.lifted for v in cls]
        self.sizes = [len(cls) for cls in self.classes]
        self.caps = [side_cap(m) for m in self.sizes]
        self.float_rows = [
            np.array([[float(x) for x in v] for v in cls], dtype=float)
            for cls in self.lifted
        ]

    # ---- exact side ----------------------------------------------------

    def _exact_interval(self, values, cap):
        values = sorted(values)
        m = len(values)
        lo = values[m - cap - 1] if m - cap - 1 >= 0 else None
        hi = values[cap] if cap < m else None
        return lo, hi

    def exact_threshold(self, a):
        """Valid threshold b for exact direction a, or None."""
        max_lo = None
        min_hi = None
        for vecs, cap in zip(self.lifted, self.caps):
            values = [sum(ai * vi for ai, vi in zip(a, v) if ai != 0) for v in vecs]
            lo, hi = self._exact_interval(values, cap)
            if lo is not None and (max_lo is None or lo > max_lo):
                max_lo = lo
            if hi is not None and (min_hi is None or hi < min_hi):
                min_hi = hi
        if max_lo is not None and min_hi is not None:
            if max_lo > min_hi:
                return None
            return (max_lo + min_hi) / 2
        if max_lo is not None:
            return max_lo
        if min_hi is not None:
            return min_hi
        return Fraction(0)

    def poly_from(self, a, b):
        terms = {exps: Fraction(c) for exps, c in zip(self.monos, a) if c != 0}
        if b != 0:
            terms[(0, 0, 0)] = -Fraction(b)
        return MultiPoly(3, terms)

    def certify(self, a):
        """(bisector, boundary point count) for exact direction a, or None."""
        if all(c == 0 for c in a):
            return None
        b = self.exact_threshold(a)
        if b is None:
            return None
        g = self.poly_from(a, b)
        if g.is_zero() or not verify_bisection(g, self.classes):
            return None
        on_boundary = sum(
            1 for cls in self.classes for w in cls if poly_eval(g, w) == 0
        )
        return g, on_boundary

    def anchor_rows(self, a):
        """Median-straddle anchor rows along direction a.

        Each class contributes the midpoint of its two middle lifted order
        statistics; a hyperplane through all the midpoints is aligned with
        every class median at once.
        """
        rows = []
        for vecs, cap in zip(self.lifted, self.caps):
            m = len(vecs)
            order = sorted(range(m), key=lambda i: sum(x * y for x, y in zip(a, vecs[i])))
            i_lo = max(m - cap - 1, 0)
            i_hi = min(cap, m - 1)
            p = vecs[order[i_lo]]
            q = vecs[order[i_hi]]
            mid = [(x + y) / 2 for x, y in zip(p, q)]
            rows.append(mid + [Fraction(-1)])
        return rows

    def straddle_anchor(self, a):
        """One anchored hyperplane (direction part), or None."""
        vec = nullspace_vector(self.anchor_rows(a), self.n + 1)
        if vec is None:
            return None
        return vec[:self.n]

    def exact_anchor_rows(self, af):
        """Exact anchor rows with the straddle pairs chosen by float order.

        Classes that any hyperplane bisects (cap >= size) contribute no
        anchor; dropping them leaves the anchored family as roomy as
        possible.
        """
        rows = []
        for rowsf, vecs, m, cap in zip(self.float_rows, self.lifted, self.sizes, self.caps):
            if cap >= m:
                continue
            order = (rowsf @ af).argsort(kind="stable")
            i_lo = max(m - cap - 1, 0)
            i_hi = min(cap, m - 1)
            p = vecs[int(order[i_lo])]
            q = vecs[int(order[i_hi])]
            rows.append([(x + y) / 2 for x, y in zip(p, q)] + [Fraction(-1)])
        return rows

    def hyperplane_values(self, k):
        """Exact a.L(w) - b per point for the hyperplane vector k = (a, b)."""
        a, b = k[:self.n], k[self.n]
        out = []
        for cls in self.lifted:
            vals = []
            for v in cls:
                vals.append(sum(ai * vi for ai, vi in zip(a, v) if ai != 0) - b)
            out.append(vals)
        return out

    # ---- float side ----------------------------------------------------

    def float_gap(self, af):
        """max over classes of lo minus min over classes of hi (<= 0 is good)."""
        import numpy as np

        max_lo = -inf
        min_hi = inf
        for rows, m, cap in zip(self.float_rows, self.sizes, self.caps):
            vals = np.sort(rows @ af)
            if m - cap - 1 >= 0:
                max_lo = max(max_lo, vals[m - cap - 1])
            if cap < m:
                min_hi = min(min_hi, vals[cap])
        if max_lo == -inf or min_hi == inf:
            return -1.0
        return float(max_lo - min_hi)

    def float_gap_batch(self, u, w, ts):
        """float_gap along a + t*delta for every t in ts at once.

        u[ci], w[ci] are the per-class projections of a and delta.
        """
        import numpy as np

        ts = np.asarray(ts)
        max_lo = np.full(ts.shape, -inf)
        min_hi = np.full(ts.shape, inf)
        for ci, (m, cap) in enumerate(zip(self.sizes, self.caps)):
            vals = u[ci][None, :] + ts[:, None] * w[ci][None, :]
            vals.sort(axis=1)
            if m - cap - 1 >= 0:
                np.maximum(max_lo, vals[:, m - cap - 1], out=max_lo)
            if cap < m:
                np.minimum(min_hi, vals[:, cap], out=min_hi)
        gaps = max_lo - min_hi
        gaps[~np.isfinite(gaps)] = -1.0
        return gaps


def _int_reduced(vec):
    """Scale a rational vector to coprime integers (deterministic sign)."""
    fracs = [Fraction(x) for x in vec]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(ints)


ENUM_SUBSET_LIMIT = 2500
ENUM_POINT_LIMIT = 60


def _anchored_float_iteration(inst, af, iters=40):
    """Self-consistent anchored direction search, all floating point.

    Repeats: anchor midpoints along the current direction, take the kernel
    of the anchor rows, and replace the direction with the kernel combination
    closest to it.  Balanced hyperplanes are fixed points; on separated cell
    classes this converges in a few dozen steps.  Returns the best direction
    seen and its gap.
    """
    import numpy as np

    n = inst.n
    best_af = af.copy()
    best_gap = inst.float_gap(af)
    for _ in range(iters):
        rows = []
        for rowsf, m, cap in zip(inst.float_rows, inst.sizes, inst.caps):
            if cap >= m:
                continue
            order = np.argsort(rowsf @ af, kind="stable")
            i_lo = max(m - cap - 1, 0)
            i_hi = min(cap, m - 1)
            mid = (rowsf[order[i_lo]] + rowsf[order[i_hi]]) / 2.0
            rows.append(np.concatenate([mid, [-1.0]]))
        if not rows:
            break
        A = np.array(rows)
        try:
            _, _, vt = np.linalg.svd(A)
        except np.linalg.LinAlgError:
            break
        K = vt[len(rows):]
        if K.shape[0] == 0:
            K = vt[-1:]
        D = K[:, :n]
        G = D @ D.T
        rhs = D @ af
        try:
            combo = np.linalg.solve(G + 1e-12 * np.eye(len(G)), rhs)
        except np.linalg.LinAlgError:
            break
        d = combo @ D
        norm = np.linalg.norm(d)
        if norm < 1e-12:
            break
        af = d / norm * max(np.linalg.norm(af), 1.0)
        gap = inst.float_gap(af)
        if gap < best_gap:
            best_gap = gap
            best_af = af.copy()
        if gap <= 0:
            break
    return best_af, best_gap


def _sweep_pencil(inst, k1, k2, consider_pair):
    """Search the hyperplane pencil k1 + t*k2 for a certified bisector.

    Strict side counts are piecewise constant in t with breakpoints where a
    point crosses the moving hyperplane, so breakpoints plus the midpoints
    between them cover every sign pattern the pencil realises.  Violations
    are screened in floating point; promising t values (exact rationals) are
    certified through consider_pair.  Returns (bisector or None, and a
    direction hint from the least-violating candidate for iterating).
    """
    import numpy as np

    p_cls = inst.hyperplane_values(k1)
    q_cls = inst.hyperplane_values(k2)
    breakpoints = set()
    for pc, qc in zip(p_cls, q_cls):
        for pw, qw in zip(pc, qc):
            if qw != 0:
                breakpoints.add(-pw / qw)
    if not breakpoints:
        return None, None
    bps = sorted(breakpoints)
    cands = [bps[0] - 1]
    for x, y in zip(bps, bps[1:]):
        cands.append(x)
        cands.append((x + y) / 2)
    cands.append(bps[-1])
    cands.append(bps[-1] + 1)
    tf = np.array([float(t) for t in cands])
    violation = np.zeros(len(cands))
    boundary = np.zeros(len(cands))
    for pc, qc, cap in zip(p_cls, q_cls, inst.caps):
        pv = np.array([float(x) for x in pc])[:, None]
        qv = np.array([float(x) for x in qc])[:, None]
        vals = pv + tf[None, :] * qv
        eps = 1e-9 * (1.0 + float(np.abs(vals).max()))
        pos = (vals > eps).sum(axis=0)
        neg = (vals < -eps).sum(axis=0)
        violation += np.maximum(0, pos - cap) + np.maximum(0, neg - cap)
        boundary += vals.shape[0] - pos - neg
    order = np.lexsort((boundary, violation))
    tried = 0
    for idx in order:
        if violation[idx] > 0.5 or tried >= 6:
            break
        tried += 1
        t = cands[int(idx)]
        kv = tuple(x + t * y for x, y in zip(k1, k2))
        g = consider_pair(kv[:inst.n], kv[inst.n])
        if g is not None:
            return g, None
    t = cands[int(order[0])]
    kv = tuple(x + t * y for x, y in zip(k1, k2))
    return None, kv[:inst.n]


def _search_bisector(classes, degree, seed, restarts=24, line_searches=40,
                     allow_wipeout=True):
    """Layered bisector search at a fixed degree; None on budget exhaustion.

    Exact stages first (coordinate cuts, median-straddle anchors, small
    exhaustive enumeration through lifted points), then a seeded descent on
    the interval gap, float-screened and exactly certified.  Certified
    candidates that strictly split (no boundary points) win immediately;
    boundary-heavy ones are kept as ranked fallbacks, and a full wipeout
    (every point on the zero set) is only ever returned when allow_wipeout
    is set -- it is a correct but uninformative bisection.
    """
    import numpy as np

    inst = _Instance(classes, degree)
    n = inst.n
    total = sum(inst.sizes)
    fallback = None  # (boundary_count, g)

    def consider(a, screened=False):
        """Certify a direction; return a clean bisector or bank a fallback.

        The float screen only skips exact work for clearly hopeless
        directions; acceptance always goes through the exact certificate.
        """
        nonlocal fallback
        if not screened:
            gapf = inst.float_gap(np.array([float(x) for x in a]))
            if gapf > 1e-6:
                return None
        scored = inst.certify(a)
        if scored is None:
            return None
        g, on_boundary = scored
        if on_boundary == 0:
            return g
        if fallback is None or on_boundary < fallback[0]:
            fallback = (on_boundary, g)
        return None

    # Stage 1: coordinate cuts and coordinate pairs.
    basis = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        basis.append(tuple(e))
    for a in basis:
        g = consider(a)
        if g is not None:
            return g
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (1, -1):
                a = list(basis[i])
                a[j] = Fraction(sj)
                g = consider(tuple(a))
                if g is not None:
                    return g

    # Stage 2: anchored pencil sweeps -- force the hyperplane through the
    # per-class median midpoints, then rotate exactly within that family.
    def consider_pair(avec, b):
        nonlocal fallback
        if all(c == 0 for c in avec):
            return None
        g = inst.poly_from(avec, b)
        if g.is_zero() or not verify_bisection(g, inst.classes):
            return None
        on_boundary = sum(
            1 for cls in inst.classes for w in cls if poly_eval(g, w) == 0
        )
        if on_boundary == 0:
            return g
        if fallback is None or on_boundary < fallback[0]:
            fallback = (on_boundary, g)
        return None

    from .linalg import solve_homogeneous_all

    rng_anchor = random.Random(f"anchor:{seed}:{degree}")
    for start in range(5):
        if start == 0:
            af = np.zeros(n)
            af[0] = 1.0
        else:
            af = np.array([rng_anchor.randint(-9, 9) for _ in range(n)], dtype=float)
            if not af.any():
                continue
        af, _ = _anchored_float_iteration(inst, af, iters=40 + 10 * len(inst.classes))
        # certify the converged direction directly, then sweep the exact
        # pencil of hyperplanes through its anchors
        a_exact = tuple(Fraction(x).limit_denominator(10 ** 6) for x in af)
        if any(c != 0 for c in a_exact):
            g = consider(_int_reduced(a_exact))
            if g is not None:
                return g
        rows = inst.exact_anchor_rows(af)
        if not rows:
            continue
        kbasis = solve_homogeneous_all(rows, n + 1)
        kbasis = [_int_reduced(k) for k in kbasis]
        pairs = [(0, 1)] if len(kbasis) == 2 else [(0, 1), (0, 2), (1, 2)]
        for i1, i2 in pairs:
            if i2 >= len(kbasis):
                continue
            g, _ = _sweep_pencil(inst, kbasis[i1], kbasis[i2], consider_pair)
            if g is not None:
                return g
        if len(kbasis) == 1:
            g = consider(kbasis[0][:n])
            if g is not None:
                return g

    # Stage 3: exhaustive hyperplanes through n lifted points (small inputs).
    if total <= ENUM_POINT_LIMIT and n <= total and comb(total, n) <= ENUM_SUBSET_LIMIT:
        for subset in combinations(range(total), n):
            rows = [list(inst.all_lifted[i]) + [Fraction(-1)] for i in subset]
            vec = nullspace_vector(rows, n + 1)
            if vec is None:
                continue
            g = inst.poly_from(vec[:n], vec[n])
            if g.is_zero() or not verify_bisection(g, inst.classes):
                continue
            on_boundary = sum(
                1 for cls in inst.classes for w in cls if poly_eval(g, w) == 0
            )
            if on_boundary == 0:
                return g
            if fallback is None or on_boundary < fallback[0]:
                fallback = (on_boundary, g)

    # Stage 4: seeded descent on the float gap with exact certification.
    rng = random.Random(f"bisect:{seed}:{degree}")
    same_class_pairs = []
    for ci, cls in enumerate(inst.lifted):
        for p, q in combinations(range(len(cls)), 2):
            same_class_pairs.append((ci, p, q))

    for restart in range(restarts):
        if restart == 0:
            a = basis[0]
        else:
            a = tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))
            if all(c == 0 for c in a):
                continue
        af = np.array([float(x) for x in a])
        best = inst.float_gap(af)
        stall = 0
        for step in range(line_searches):
            if best <= 1e-9:
                g = consider(a, screened=True)
                if g is not None:
                    return g
            if step < n:
                delta = basis[step]
            elif step % 5 == 4:
                anchored = inst.straddle_anchor(a)
                if anchored is not None and any(c != 0 for c in anchored):
                    cand = _int_reduced(anchored)
                    g = consider(cand)
                    if g is not None:
                        return g
                    gap = inst.float_gap(np.array([float(x) for x in cand]))
                    if gap < best:
                        a, af, best = cand, np.array([float(x) for x in cand]), gap
                continue
            else:
                delta = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
                if all(c == 0 for c in delta):
                    continue
            df = np.array([float(x) for x in delta])
            u = [inst.float_rows[ci] @ af for ci in range(len(inst.sizes))]
            w = [inst.float_rows[ci] @ df for ci in range(len(inst.sizes))]
            # candidate t values: same-class order-statistic breakpoints
            cands = [0.0]
            for ci, p, q in same_class_pairs:
                dw = w[ci][p] - w[ci][q]
                if dw != 0.0:
                    cands.append(-(u[ci][p] - u[ci][q]) / dw)
            cands.sort()
            lo_t, hi_t = cands[0], cands[-1]
            for extra in (1.0, 8.0, 64.0):
                cands.append(lo_t - extra)
                cands.append(hi_t + extra)
            gaps = inst.float_gap_batch(u, w, cands)
            k = int(gaps.argmin())
            if not gaps[k] < best - 1e-12:
                stall += 1
                if stall > n + 6:
                    break
                continue
            stall = 0
            t_exact = Fraction(cands[k]).limit_denominator(10 ** 9)
            a = _int_reduced(tuple(x + t_exact * d for x, d in zip(a, delta)))
            if all(c == 0 for c in a):
                a = basis[0]
            af = np.array([float(x) for x in a])
            best = inst.float_gap(af)
            if best <= 1e-9:
                g = consider(a, screened=True)
                if g is not None:
                    return g
        g = consider(a)
        if g is not None:
            return g

    if fallback is not None:
        if fallback[0] < total or allow_wipeout:
            return fallback[1]
    return None


def bisect_classes(classes, degree, seed):
    """Certified simultaneous bisector of the classes at the given degree.

    Requires the lifted dimension to cover the class count (the ham-sandwich
    guarantee); the search can still exhaust its budget, in which case None
    is returned even though a bisector exists.
    """
    classes = [list(c) for c in classes if c]
    if not classes:
        raise ValueError("no classes to bisect")
    if lift_dim(degree) < len(classes):
        raise ValueError(
            f"lifted dimension {lift_dim(degree)} at degree {degree} cannot cover "
            f"{len(classes)} classes"
        )
    return _search_bisector(classes, degree, seed)


@dataclass
class PartitionResult:
    """Bisecting factors plus the exact sign-class bookkeeping."""

    factors: list
    assignment: dict            # point -> tuple of +1/-1 over the factors
    boundary: list              # points on some factor's zero set
    total_degree: int
    target: int
    class_bound: int            # compounded ceiling guarantee
    schedule: list              # guaranteed degree ceiling per round
    failed_round: int | None = None

    @property
    def succeeded(self) -> bool:
        return self.failed_round is None

    def class_sizes(self):
        out = {}
        for sig in self.assignment.values():
            out[sig] = out.get(sig, 0) + 1
        return out


def partition(points, s: int, seed: int) -> PartitionResult:
    """log2(s) rounds of certified simultaneous bisection.

    Every round tries degrees 1..ceiling (the ceiling is the scheduled degree
    whose lifted dimension covers the theoretical class count), taking the
    first certified bisector, so easy inputs get low-degree factors while the
    guarantee holds in general.  Budget exhaustion is reported on the result
    rather than raised.
    """
    pts = [tuple(Fraction(c) for c in w) for w in points]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate input points")
    for w in pts:
        if len(w) != 3:
            raise ValueError("points have 3 coordinates")
    schedule = degree_schedule(s)
    rounds = len(schedule)
    classes = [pts]
    factors = []
    failed = None
    for r in range(rounds):
        current = [c for c in classes if c]
        if not current:
            break
        g = None
        for d in range(1, schedule[r] + 1):
            light = d < schedule[r]
            g = _search_bisector(
                current, d, f"{seed}:round{r}",
                restarts=2 if light else 24,
                line_searches=12 if light else 40,
                allow_wipeout=not light,
            )
            if g is not None:
                break
        if g is None:
            failed = r
            break
        factors.append(g)
        next_classes = []
        for cls in current:
            plus, minus = [], []
            for w in cls:
                v = poly_eval(g, w)
                if v > 0:
                    plus.append(w)
                elif v < 0:
                    minus.append(w)
            cap = side_cap(len(cls))
            if len(plus) > cap or len(minus) > cap:
                raise AssertionError("certified bisector failed the recount")
            next_classes.append(plus)
            next_classes.append(minus)
        classes = next_classes
    assignment = {}
    boundary = []
    for w in pts:
        signs = []
        on_boundary = False
        for g in factors:
            v = poly_eval(g, w)
            if v == 0:
                on_boundary = True
                break
            signs.append(1 if v > 0 else -1)
        if on_boundary:
            boundary.append(w)
        else:
            assignment[w] = tuple(signs)
    return PartitionResult(
        factors=factors,
        assignment=assignment,
        boundary=sorted(boundary),
        total_degree=sum(g.degree for g in factors),
        target=s,
        class_bound=compounded_ceiling(len(pts), rounds),
        schedule=schedule,
        failed_round=failed,
    )


def cell_census(result: PartitionResult):
    """Exact per-sign-vector class sizes (boundary points excluded)."""
    return result.class_sizes()


def line_crossings(l: Line3, result: PartitionResult):
    """Distinct real crossings of the line with the union of factor zero sets.

    Returns None when some factor vanishes identically on the line (the
    containment case, reported distinctly).  Otherwise a Sturm count over a
    Cauchy bracket of the product restriction; always <= total_degree.
    """
    if not result.factors:
        return 0
    product = UniPoly([1])
    for g in result.factors:
        q = restrict_to_line(g, l)
        if q.is_zero():
            return None
        product = product * q
    if product.degree == 0:
        return 0
    bound = cauchy_root_bound(product)
    return sturm_count(product, -bound, bound)


@dataclass
class CrossingReport:
    """Per-line crossing counts against the partition factors."""

    counts: list                # per line: int or None for contained
    total_degree: int
    contained_lines: int = field(default=0)

    def max_count(self):
        vals = [c for c in self.counts if c is not None]
        return max(vals) if vals else 0


def crossing_report(lines, result: PartitionResult) -> CrossingReport:
    counts = []
    contained = 0
    for l in lines:
        c = line_crossings(l, result)
        if c is None:
            contained += 1
        counts.append(c)
    return CrossingReport(counts, result.total_degree, contained)
