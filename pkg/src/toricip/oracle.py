"""Brute-force geometric ground truth for every algebraic result.

Everything here works directly with lattice points of rational polytopes in
the corank-dimensional z-space: a point u is optimal iff the polytope
{Bz <= u, (-cB)z <= 0} contains only the origin, a relaxation solves the
program iff the same holds after deleting the rows indexed by the face, and a
standard polytope is a singleton that loses the property when any single
B-row is dropped.  None of it consults the Groebner machinery, which is the
point: the two routes must agree and the test suite enforces that.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import fibers
from .core import IntMatrix, cached_kernel_basis
from .errors import BoundUnavailable, Degenerate, NotAFace, Unbounded
from .linalg import det_int, dot
from .linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp
from .stdpairs import Decomposition, StandardPair
from .triangulation import RegularSubdivision, cached_subdivision


@dataclass(frozen=True)
class IneqPolytope:
    """{z : s . z <= offset per row}, with integer data."""

    rows: tuple  # ((coeffs), offset) pairs

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple((tuple(int(c) for c in s), int(o)) for s, o in rows))

    @property
    def dim(self):
        return len(self.rows[0][0]) if self.rows else 0

    def is_bounded(self):
        """Whether the recession cone {s . z <= 0} is trivial."""
        return _recession_trivial(tuple(s for s, _ in self.rows), self.dim)


@lru_cache(maxsize=4096)
def _recession_trivial(normals, dim):
    if dim == 0:
        return True
    a_ub = [list(s) for s in normals]
    b_ub = [0] * len(normals)
    for i in range(dim):
        for sense in (1, -1):
            obj = [0] * dim
            obj[i] = sense
            cap = [0] * dim
            cap[i] = sense
            res = solve_lp(obj, a_ub + [cap], b_ub + [1], maximize=True)
            if res.status != OPTIMAL or res.value > 0:
                return False
    return True


def enumerate_lattice_points(poly: IneqPolytope, limit=None):
    """All integer points of a bounded polytope, in ascending lex order.

    ``limit`` stops the sweep early once that many points are found.  Raises
    Unbounded when the recession cone is nontrivial.
    """
    if not poly.is_bounded():
        raise Unbounded("recession cone is nontrivial")
    out = []
    _sweep([(list(s), o) for s, o in poly.rows], poly.dim, (), out, limit)
    return out


def _sweep(rows, dim, prefix, out, limit):
    if dim == 0:
        if all(o >= 0 for _, o in rows):
            out.append(prefix)
        return limit is not None and len(out) >= limit
    if dim == 1:
        lo = hi = None
        for (coef,), o in rows:
            if coef > 0:
                q = math.floor(Fraction(o, coef))
                hi = q if hi is None else min(hi, q)
            elif coef < 0:
                q = math.ceil(Fraction(o, coef))
                lo = q if lo is None else max(lo, q)
            elif o < 0:
                return False
        if lo is None or hi is None:
            raise Unbounded("one-dimensional slice is unbounded")
        for v in range(lo, hi + 1):
            out.append(prefix + (v,))
            if limit is not None and len(out) >= limit:
                return True
        return False
    lo = _slice_extremum(rows, dim, minimize=True)
    if lo is None:
        return False
    hi = _slice_extremum(rows, dim, minimize=False)
    for v in range(math.ceil(lo), math.floor(hi) + 1):
        sub = [(coefs[1:], o - coefs[0] * v) for coefs, o in rows]
        if _sweep(sub, dim - 1, prefix + (v,), out, limit):
            return True
    return False


def _slice_extremum(rows, dim, minimize):
    obj = [0] * dim
    obj[0] = 1
    res = solve_lp(obj, [c for c, _ in rows], [o for _, o in rows], maximize=not minimize)
    if res.status == INFEASIBLE:
        return None
    if res.status == UNBOUNDED:
        raise Unbounded("slice extremum is unbounded")
    return res.value


def lattice_points_boxed(rows, dim, limit=None):
    """Integer points of a bounded polytope via its vertex bounding box.

    Vertices are the feasible basic solutions (integer Cramer), the box they
    span is swept with pure integer arithmetic.  Assumes boundedness, which
    callers establish once per normal pattern via the recession-cone check.
    """
    if dim == 0:
        return [()] if all(o >= 0 for _, o in rows) else []
    verts = []
    for sub in combinations(range(len(rows)), dim):
        m = [rows[i][0] for i in sub]
        d = det_int(m)
        if d == 0:
            continue
        z = []
        for j in range(dim):
            mj = [list(rows[i][0]) for i in sub]
            for t in range(dim):
                mj[t][j] = rows[sub[t]][1]
            z.append(Fraction(det_int(mj), d))
        if all(dot(s, z) <= o for s, o in rows):
            verts.append(z)
    if not verts:
        return []
    lo = [math.ceil(min(v[j] for v in verts)) for j in range(dim)]
    hi = [math.floor(max(v[j] for v in verts)) for j in range(dim)]
    out = []
    for z in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(dot(s, z) <= o for s, o in rows):
            out.append(z)
            if limit is not None and len(out) >= limit:
                break
    return out


_lattice = cached_kernel_basis


def cost_row(a: IntMatrix, cost):
    """The objective row -cB of the z-space reformulation."""
    lat = _lattice(a)
    return tuple(-dot(cost, col) for col in lat.columns())


def q_polytope(a: IntMatrix, cost, u, tau=()):
    """Q_u^{tau-bar}: B rows off tau bounded by u, plus the cost cut."""
    lat = _lattice(a)
    tau = set(tau)
    rows = [(lat.matrix[i], u[i]) for i in range(a.n) if i not in tau]
    rows.append((cost_row(a, cost), 0))
    return IneqPolytope.from_rows(rows)


def fiber_solve(a: IntMatrix, cost, b, with_fiber=False):
    """Optimal point of the program by exhaustive fiber enumeration.

    Lexicographic tie-break; returns None when infeasible (a marker, not an
    error).  With ``with_fiber`` the full fiber is returned alongside.
    """
    cost = tuple(int(v) for v in cost)
    if with_fiber:
        fiber = fibers.fiber_list(a.entries, b)
        best = min(fiber, key=lambda x: (dot(cost, x), x)) if fiber else None
        return best, fiber
    return fibers.fiber_optimum(a.entries, cost, b)


def _singleton(rows, dim):
    """Whether {rows} cages exactly the origin (assumes 0 feasible, bounded)."""
    pts = lattice_points_boxed(rows, dim, limit=2)
    return pts == [(0,) * dim]


def is_standard_polytope(a: IntMatrix, cost, u, tau, delta: RegularSubdivision = None) -> bool:
    """Definition test: singleton, and every single B-row drop admits a point.

    Unbounded relaxations count as admitting one (integral data puts lattice
    points on any unbounded edge).  Raises NotAFace when tau is not a face.
    """
    cost = tuple(int(v) for v in cost)
    if delta is None:
        delta = cached_subdivision(a, cost)
    tau = tuple(sorted(tau))
    if tau not in delta:
        raise NotAFace(f"{tau} is not a face of the triangulation")
    lat = _lattice(a)
    ndim = lat.corank
    taubar = [i for i in range(a.n) if i not in set(tau)]
    crow = (cost_row(a, cost), 0)
    rows = [(lat.matrix[i], int(u[i])) for i in taubar] + [crow]
    if not _singleton(rows, ndim):
        return False
    for k in range(len(taubar)):
        rel = rows[:k] + rows[k + 1 : len(taubar)] + [crow]
        normals = tuple(s for s, _ in rel)
        if not _recession_trivial(normals, ndim):
            continue  # unbounded: admits a nonzero lattice point
        if len(lattice_points_boxed(rel, ndim, limit=2)) < 2:
            return False
    return True


def kannan_bound(rows, ndim):
    """2 M (n+2) Delta_n / delta_n for the row system, exactly.

    M is the largest row l1-norm, Delta/delta the extreme absolute values of
    the n x n minors; a zero minor is the degenerate case and raises.
    """
    rows = [tuple(int(v) for v in r) for r in rows]
    m = max(sum(abs(v) for v in r) for r in rows)
    minors = [
        abs(det_int([rows[i] for i in sub])) for sub in combinations(range(len(rows)), ndim)
    ]
    if not minors or min(minors) == 0:
        raise Degenerate("a maximal minor of the row system vanishes")
    return Fraction(2 * m * (ndim + 2) * max(minors), min(minors))


def kannan_root_bound(a: IntMatrix, cost):
    """Kannan bound for standard-polytope right-hand sides, or None if degenerate."""
    lat = _lattice(a)
    if lat.corank == 0:
        return 0
    rows = list(lat.matrix) + [cost_row(a, cost)]
    try:
        return math.floor(kannan_bound(rows, lat.corank))
    except Degenerate:
        return None


def width_along(poly: IneqPolytope, v):
    """max v.z - min v.z over the polytope, as an exact rational."""
    if not any(v):
        raise ValueError("direction must be nonzero")
    a_ub = [list(s) for s, _ in poly.rows]
    b_ub = [o for _, o in poly.rows]
    hi = solve_lp(list(v), a_ub, b_ub, maximize=True)
    lo = solve_lp(list(v), a_ub, b_ub)
    if hi.status == UNBOUNDED or lo.status == UNBOUNDED:
        raise Unbounded("width direction is unbounded")
    if hi.status != OPTIMAL or lo.status != OPTIMAL:
        raise ValueError("empty polytope has no width")
    return hi.value - lo.value


def brute_force_standard_pairs(
    a: IntMatrix, cost, delta: RegularSubdivision, root_box=None, margin=0
) -> Decomposition:
    """All standard pairs by direct standard-polytope search.

    Roots are swept per face in a monotone fashion: growing any coordinate of
    the right-hand side only grows the polytope, so once the singleton test
    fails the rest of that branch is dead.  Coordinates are capped by the
    Kannan bound when no maximal minor of the lifted row system vanishes,
    intersected with a caller-supplied box (plus ``margin``, so a too-small
    box shows up as extra pairs rather than silent agreement); with a
    vanishing minor and no box, the search is refused.
    """
    cost = tuple(int(v) for v in cost)
    lat = _lattice(a)
    kb = kannan_root_bound(a, cost)
    if kb is None and root_box is None:
        raise BoundUnavailable("degenerate minors and no caller-supplied root box")
    box = []
    for i in range(a.n):
        cap = kb
        if root_box is not None:
            capped = root_box[i] + margin
            cap = capped if cap is None else min(cap, capped)
        box.append(cap)
    crow = (cost_row(a, cost), 0)
    ndim = lat.corank
    pairs = []
    for face in delta.faces():
        taubar = [i for i in range(a.n) if i not in set(face)]
        if ndim == 0:
            # zero-dimensional z-space: the single full face carries (0, face)
            if not taubar:
                pairs.append(StandardPair((0,) * a.n, face))
            continue
        caps = [box[i] for i in taubar]
        brows = [lat.matrix[i] for i in taubar]
        # every nonzero lattice point reachable within the box contributes a
        # clipped threshold vector; Q_w cages only the origin iff no threshold
        # is dominated by w
        thresholds = _thresholds(brows, caps, crow, ndim)
        # per dropped row: the relaxation is unbounded (always admits a point)
        # or its reachable points give their own threshold antichain
        drop_info = []
        for k in range(len(taubar)):
            kept = [t for t in range(len(taubar)) if t != k]
            normals = tuple(brows[t] for t in kept) + (crow[0],)
            if not _recession_trivial(normals, ndim):
                drop_info.append(None)  # unbounded: admits a point for free
            else:
                drop_info.append(
                    _thresholds([brows[t] for t in kept], [caps[t] for t in kept], crow, ndim)
                )

        def drops_ok(w):
            for k, th in enumerate(drop_info):
                if th is None:
                    continue
                rest = w[:k] + w[k + 1 :]
                if not any(all(e <= x for e, x in zip(t, rest)) for t in th):
                    return False
            return True

        for w in _undominated(thresholds, caps):
            if drops_ok(w):
                root = [0] * a.n
                for t, i in enumerate(taubar):
                    root[i] = w[t]
                pairs.append(StandardPair(tuple(root), face))
    return Decomposition.from_pairs(pairs, delta)


def _thresholds(brows, caps, crow, ndim):
    """Minimal clipped B-images of the nonzero points reachable within caps."""
    rows = [(brows[t], caps[t]) for t in range(len(brows))] + [crow]
    zero = (0,) * ndim
    thresh = set()
    for z in lattice_points_boxed(rows, ndim):
        if z == zero:
            continue
        thresh.add(tuple(max(dot(b, z), 0) for b in brows))
    out = []
    for t in sorted(thresh):
        if not any(all(e <= x for e, x in zip(s, t)) for s in out):
            out.append(t)
    return out


def _undominated(thresholds, caps):
    """All w in the cap box dominating no threshold vector, lex order."""
    k = len(caps)
    lastnz = [max((t for t in range(k) if th[t] != 0), default=-1) for th in thresholds]
    out = []

    def rec(depth, w):
        for ti, th in enumerate(thresholds):
            if lastnz[ti] < depth and all(th[t] <= w[t] for t in range(depth)):
                return False
        if depth == k:
            out.append(tuple(w))
            return True
        for v in range(caps[depth] + 1):
            w.append(v)
            alive = rec(depth + 1, w)
            w.pop()
            if not alive:
                break  # domination only deepens as the coordinate grows
        return True

    rec(0, [])
    return out
