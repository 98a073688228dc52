"""Regular subdivisions of cone(A) and the linear-programming structure they encode.

A subset sigma of column indices is a face of the regular subdivision for cost
c exactly when some y satisfies y.a_j = c_j on sigma and y.a_j < c_j off it.
Maximal cells correspond to vertices of the dual polyhedron {y : yA <= c}, so
they are found by enumerating nonsingular d-subsets, solving for the unique y,
and recording its exact equality set.  A cost is generic when every maximal
cell is a d-simplex; the result carries that flag instead of raising, and
non-generic inputs are never silently perturbed.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .core import IntMatrix, gcd_maximal_minors
from .errors import NotAFace, OutsideCone
from .linprog import lp_feasible


def _as_face(indices):
    return tuple(sorted(indices))


@dataclass(frozen=True)
class RegularSubdivision:
    """The subdivision Delta_c: maximal cells, exact dual certificates, flags."""

    matrix: IntMatrix
    cost: tuple
    maximal_faces: tuple  # sorted tuple of faces (0-based index tuples)
    certificates: tuple  # parallel tuple of rational y vectors
    is_triangulation: bool

    def certificate(self, face):
        face = _as_face(face)
        for f, y in zip(self.maximal_faces, self.certificates):
            if f == face:
                return y
        raise NotAFace(f"{face} is not a maximal face")

    def faces(self):
        """All faces, by subset closure of the maximal ones (triangulations)."""
        out = set()
        for f in self.maximal_faces:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return sorted(out, key=lambda f: (len(f), f))

    def __contains__(self, face):
        face = set(face)
        return any(face <= set(f) for f in self.maximal_faces)


def regular_subdivision(a: IntMatrix, cost) -> RegularSubdivision:
    """Compute Delta_c with exact certificates.

    Maximal cells are the equality sets of the vertices of {y : yA <= c};
    the subdivision is a triangulation iff they all have size d.
    """
    cost = tuple(int(v) for v in cost)
    if len(cost) != a.n:
        raise ValueError("cost length must match column count")
    at = [list(a.column(j)) for j in range(a.n)]  # row j is a_j
    cells = {}
    for sigma in combinations(range(a.n), a.d):
        sub = [at[j] for j in sigma]
        if linalg.det_int(sub) == 0:
            continue
        y = linalg.solve_exact(sub, [cost[j] for j in sigma])
        if y is None:
            continue
        eq = []
        ok = True
        for j in range(a.n):
            v = linalg.dot(at[j], y)
            if v == cost[j]:
                eq.append(j)
            elif v > cost[j]:
                ok = False
                break
        if ok:
            cells.setdefault(tuple(eq), y)
    faces = sorted(cells, key=lambda f: (len(f), f))
    certs = tuple(cells[f] for f in faces)
    is_tri = all(len(f) == a.d for f in faces)
    return RegularSubdivision(a, cost, tuple(faces), certs, is_tri)


@lru_cache(maxsize=256)
def cached_subdivision(a: IntMatrix, cost) -> RegularSubdivision:
    return regular_subdivision(a, cost)


def in_cone(a: IntMatrix, tau, b) -> bool:
    """Exact membership b in cone(A_tau) = {A_tau lam : lam >= 0}."""
    tau = _as_face(tau)
    if not tau:
        return all(v == 0 for v in b)
    k = len(tau)
    sub = a.columns(tau)
    a_ub = [[-1 if j == i else 0 for j in range(k)] for i in range(k)]
    return lp_feasible(a_ub, [0] * k, sub, list(b))


def optimal_face(delta: RegularSubdivision, b):
    """The unique smallest face tau of Delta with b in cone(A_tau).

    This is the support of an optimal solution of the linear relaxation for
    right-hand side b.  Raises OutsideCone when b is not in cone(A).
    """
    a = delta.matrix
    if len(b) != a.d:
        raise ValueError("rhs length must match row count")
    for face in delta.faces():
        if in_cone(a, face, b):
            return face
    raise OutsideCone(f"{tuple(b)} is outside cone(A)")


@dataclass(frozen=True)
class UnimodularityReport:
    indices: tuple  # (face, lattice index) pairs, sorted
    tdi: bool


def unimodularity_report(a: IntMatrix, delta: RegularSubdivision) -> UnimodularityReport:
    """Lattice index |det A_sigma| / gcd(maximal minors) per maximal cell.

    The system yA <= c is totally dual integral iff every index is 1,
    i.e. the triangulation is unimodular (relative to the column lattice ZA).
    """
    g = gcd_maximal_minors(a)
    out = []
    for face in delta.maximal_faces:
        det = abs(linalg.det_int(a.columns(face)))
        out.append((face, det // g))
    return UnimodularityReport(tuple(out), all(ix == 1 for _, ix in out))


def reduced_cost(a: IntMatrix, cost, sigma):
    """c~ = c - c_sigma A_sigma^{-1} A as a full-length rational vector.

    sigma must index a nonsingular d x d submatrix; the result vanishes on
    sigma and on any column lying on the same lifted facet.
    """
    sigma = _as_face(sigma)
    sub_t = [list(a.column(j)) for j in sigma]
    y = linalg.solve_exact(sub_t, [cost[j] for j in sigma])
    return tuple(Fraction(cost[j]) - linalg.dot(a.column(j), y) for j in range(a.n))
