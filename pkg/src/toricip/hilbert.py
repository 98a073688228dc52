"""Hilbert bases of pointed cones, normality tests, and cost constructions.

A matrix is normal when its columns generate every lattice point of their
cone; Delta-normal when the columns inside each maximal cell of a
triangulation form a Hilbert basis of that cell; supernormal when the same
holds over every column-subset cone.  Delta-normality over a regular
triangulation yields, constructively, a generic cost whose family is solved
entirely by Gomory relaxations; :func:`gomory_cost` carries out that
construction and re-verifies its own postcondition before returning.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import fibers, stdpairs
from .core import IntMatrix
from .errors import NotDeltaNormal, NotPointed, NotRegular
from .groebner import CostOrder, toric_groebner
from .linalg import dot, rank, solve_exact
from .linprog import OPTIMAL, lp_feasible, solve_lp
from .stdpairs import initial_ideal, is_gomory_family, standard_pair_decomposition
from .triangulation import regular_subdivision


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple  # sorted integer vectors
    generators: tuple


def _in_cone_of(gens, x):
    k = len(gens)
    if k == 0:
        return all(v == 0 for v in x)
    cols = [[g[i] for g in gens] for i in range(len(x))]
    a_ub = [[-1 if j == i else 0 for j in range(k)] for i in range(k)]
    return lp_feasible(a_ub, [0] * k, cols, list(x))


def _pointed(gens):
    k = len(gens)
    cols = [[g[i] for g in gens] for i in range(len(gens[0]))]
    a_ub = [[-1 if j == i else 0 for j in range(k)] for i in range(k)]
    return not lp_feasible(a_ub, [0] * k, cols + [[1] * k], [0] * len(gens[0]) + [1])


def _parallelepiped_points(gens):
    """Lattice points of {sum lam_i g_i : 0 <= lam_i < 1} for independent gens."""
    r = len(gens)
    d = len(gens[0])
    corners = []
    for mask in range(1 << r):
        corners.append(
            tuple(sum(gens[t][i] for t in range(r) if mask >> t & 1) for i in range(d))
        )
    out = []
    cols = [[g[i] for g in gens] for i in range(d)]
    for x in _integer_box(corners):
        lam = solve_exact(cols, x)
        if lam is not None and all(0 <= v < 1 for v in lam):
            out.append(tuple(x))
    return out


def _integer_box(corners):
    from itertools import product

    d = len(corners[0])
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    return product(*[range(a, b + 1) for a, b in zip(lo, hi)])


def hilbert_basis(generators) -> HilbertBasis:
    """The minimal Hilbert basis of cone(generators) in Z^d.

    Candidates are the generators plus the parallelepiped points of every
    independent spanning subset (these generate the full point semigroup of
    the cone); an element is kept iff subtracting any other candidate leaves
    the cone.  Raises NotPointed when the cone contains a line.
    """
    gens = [tuple(int(v) for v in g) for g in generators]
    gens = [g for g in gens if any(g)]
    if not gens:
        return HilbertBasis((), ())
    if not _pointed(gens):
        raise NotPointed("cone contains a line")
    r = rank(gens)
    cands = set(gens)
    for sub in combinations(gens, r):
        if rank(sub) < r:
            continue
        cands.update(_parallelepiped_points(sub))
    cands.discard(tuple([0] * len(gens[0])))
    cands = sorted(cands)
    minimal = []
    for x in cands:
        reducible = False
        for y in cands:
            if y != x:
                diff = tuple(a - b for a, b in zip(x, y))
                if _in_cone_of(gens, diff):
                    reducible = True
                    break
        if not reducible:
            minimal.append(x)
    return HilbertBasis(tuple(minimal), tuple(gens))


def _semigroup_member(columns, x):
    """x in N{columns}: integer feasibility by fiber sweep."""
    rows = [tuple(col[i] for col in columns) for i in range(len(x))]
    return fibers.fiber_first(rows, x) is not None


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    witness: tuple | None
    delta_normal: bool | None
    per_face: tuple  # (face, bool) pairs when a triangulation was supplied
    supernormal: bool | None


def _columns_in_cone(a: IntMatrix, gens):
    return [j for j in range(a.n) if _in_cone_of(gens, a.column(j))]


def _hilbert_property(a: IntMatrix, cone_gens):
    """Do the columns of A inside cone(cone_gens) generate all its points?

    Returns (flag, witness).
    """
    inside = _columns_in_cone(a, cone_gens)
    cols = [a.column(j) for j in inside]
    for h in hilbert_basis(cone_gens).elements:
        if not _semigroup_member(cols, h):
            return False, h
    return True, None


def normality_report(a: IntMatrix, delta=None, check_super=False) -> NormalityReport:
    """Normality of A, per-cell Delta-normality, optional supernormality.

    The normal flag asks whether every minimal Hilbert basis element of
    cone(A) is reachable as a nonnegative integer combination of columns; the
    witness is the first unreachable lattice point.
    """
    all_cols = [a.column(j) for j in range(a.n)]
    normal = True
    witness = None
    for h in hilbert_basis(all_cols).elements:
        if not _semigroup_member(all_cols, h):
            normal = False
            witness = h
            break
    per_face = []
    delta_normal = None
    if delta is not None:
        faces = delta.maximal_faces if hasattr(delta, "maximal_faces") else tuple(delta)
        for sigma in faces:
            flag, _ = _hilbert_property(a, [a.column(j) for j in sigma])
            per_face.append((tuple(sigma), flag))
        delta_normal = all(flag for _, flag in per_face)
    supernormal = None
    if check_super:
        supernormal = True
        seen = set()
        for size in range(1, a.n + 1):
            for sub in combinations(range(a.n), size):
                key = frozenset(a.column(j) for j in sub)
                if key in seen:
                    continue
                seen.add(key)
                flag, _ = _hilbert_property(a, [a.column(j) for j in sub])
                if not flag:
                    supernormal = False
                    break
            if not supernormal:
                break
    return NormalityReport(normal, witness, delta_normal, tuple(per_face), supernormal)


@dataclass(frozen=True)
class GomoryCostResult:
    cost: tuple
    delta_faces: tuple
    pairs: tuple
    residue_roots: tuple  # (face, roots) pairs from the construction


def _certificate_cost(a: IntMatrix, faces):
    """Some integer cost whose subdivision realizes the given maximal cells.

    Solved as one LP over a candidate cost and one dual vector per cell, with
    a uniform strictness margin; NotRegular when no margin is positive.
    """
    n = a.n
    d = a.d
    faces = [tuple(sorted(f)) for f in faces]
    k = len(faces)
    nv = n + d * k + 1  # c, y_1..y_k, t
    a_ub = []
    b_ub = []
    a_eq = []
    b_eq = []
    for fi, face in enumerate(faces):
        for j in range(n):
            row = [0] * nv
            for i in range(d):
                row[n + d * fi + i] = a.entries[i][j]
            if j in face:
                row[j] = -1
                a_eq.append(row)
                b_eq.append(0)
            else:
                row[j] = -1
                row[-1] = 1
                a_ub.append(row)
                b_ub.append(0)
    for j in range(n):
        box = [0] * nv
        box[j] = 1
        a_ub.append(box)
        b_ub.append(1)
        box = [0] * nv
        box[j] = -1
        a_ub.append(box)
        b_ub.append(1)
    cap = [0] * nv
    cap[-1] = 1
    a_ub.append(cap)
    b_ub.append(1)
    obj = [0] * nv
    obj[-1] = 1
    res = solve_lp(obj, a_ub, b_ub, a_eq, b_eq, maximize=True)
    if res.status != OPTIMAL or res.value <= 0:
        raise NotRegular("no cost vector certifies the triangulation")
    c = res.x[:n]
    denom = 1
    for v in c:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    return tuple(int(v * denom) for v in c)


def gomory_cost(a: IntMatrix, faces) -> GomoryCostResult:
    """A generic integer cost making the triangulation a Gomory family.

    Follows the constructive route: lift interior columns onto the cells of a
    certifying cost, then pull the ray generators down.  The expected pairs
    are the per-cell residue optima under the symbolic two-level order
    (lifted cost, then ray deficit, then lex); an integer cost realizing them
    is found by scaling and certified by re-running the whole pipeline.
    """
    faces = tuple(tuple(sorted(f)) for f in faces)
    cprime = _certificate_cost(a, faces)
    sub0 = regular_subdivision(a, cprime)
    if set(sub0.maximal_faces) != set(faces):
        raise NotRegular(
            f"certificate induces {sub0.maximal_faces}, not the requested cells"
        )
    report = normality_report(a, sub0)
    if not report.delta_normal:
        raise NotDeltaNormal("some cell's columns are not a Hilbert basis")
    rays = sorted({j for f in faces for j in f})
    # piecewise-linear lift of the certificate onto the cells
    lifted = [Fraction(0)] * a.n
    for j in range(a.n):
        if j in rays:
            lifted[j] = Fraction(cprime[j])
            continue
        col = a.column(j)
        for face in faces:
            if _in_cone_of([a.column(i) for i in face], col):
                y = sub0.certificate(face)
                lifted[j] = Fraction(dot(col, y))
                break
        else:
            raise NotRegular(f"column {j} is outside every cell")
    denom = 1
    for v in lifted:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    c0 = tuple(int(v * denom) for v in lifted)
    omega = tuple(-1 if j in rays else 0 for j in range(a.n))

    # residue optima per cell under the symbolic order (c0, omega, lex)
    def sym_key(x):
        return (dot(c0, x), -sum(x[j] for j in rays), x)

    residue_roots = []
    expected = set()
    for face in faces:
        gens = [a.column(j) for j in face]
        roots = []
        for b in _parallelepiped_points(gens):
            opt = fibers.fiber_optimum(a.entries, None, b, key=sym_key)
            if opt is None:
                raise NotDeltaNormal(f"residue {b} has an empty fiber")
            root = tuple(0 if j in set(face) else opt[j] for j in range(a.n))
            roots.append(root)
            expected.add(stdpairs.StandardPair(root, face))
        residue_roots.append((face, tuple(sorted(roots))))

    scale = 1
    for _ in range(24):
        cand = tuple(scale * cv + ov for cv, ov in zip(c0, omega))
        if _certify(a, cand, faces, expected):
            return GomoryCostResult(cand, faces, tuple(sorted(expected)), tuple(residue_roots))
        scale *= 4
    raise NotRegular("no scaling realized the symbolic construction")


def _certify(a, cand, faces, expected):
    sub = regular_subdivision(a, cand)
    if not sub.is_triangulation or set(sub.maximal_faces) != set(faces):
        return False
    gb = toric_groebner(a, CostOrder.from_cost(cand))
    if not gb.generic:
        return False
    decomp = standard_pair_decomposition(initial_ideal(gb), sub)
    return set(decomp.pairs) == expected and is_gomory_family(decomp, sub)


def sharp_family(m: int):
    """The corank-m family whose associated-set chain meets the length bound.

    Rows of the sign matrix are every +-1 vector except all-minus-one, sorted
    by (number of -1 entries, their positions); the first row is all ones and
    is added to the rest to make the coefficient matrix nonnegative.  The
    returned cost contracts the kernel basis to the all-minus-one objective.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    rows = []
    for mask in range(1 << m):
        if mask == (1 << m) - 1:
            continue
        row = tuple(-1 if mask >> t & 1 else 1 for t in range(m))
        rows.append(row)
    rows.sort(key=lambda r: (sum(1 for v in r if v < 0), tuple(t for t, v in enumerate(r) if v < 0)))
    d = (1 << m) - 1
    n = d + m
    aprime = [[1 if i == j else 0 for j in range(d)] + list(rows[i]) for i in range(d)]
    amat = [aprime[0]] + [
        [x + y for x, y in zip(aprime[i], aprime[0])] for i in range(1, d)
    ]
    a = IntMatrix(tuple(tuple(r) for r in amat))
    cost = tuple([11] + [0] * (d - 1) + [10] * m)
    bmat = rows + [[-1 if t == s else 0 for s in range(m)] for t in range(m)]
    contracted = [sum(cost[i] * bmat[i][t] for i in range(n)) for t in range(m)]
    if contracted != [1] * m:
        raise AssertionError("cost does not contract the kernel basis to ones")
    return a, cost
