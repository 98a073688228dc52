"""Group relaxations: build, solve, lift, and the standard-pair solver.

The relaxation for a face tau drops nonnegativity on the tau-variables.  In
z-space it reads: minimize (-cB).z over B^{tau-bar} z <= pi_tau(u) for any
feasible u of the fiber, a polytope exactly when tau is a face of the
triangulation.  The winner z* lifts to x* = u - B z*, integral by
construction; the relaxation solves the program iff the lifted tau-part is
nonnegative.
"""

from dataclasses import dataclass

from . import fibers, oracle
from .core import IntMatrix, cached_kernel_basis
from .errors import Infeasible, NotAFace
from .linalg import dot, solve_exact
from .stdpairs import Decomposition
from .triangulation import RegularSubdivision, reduced_cost


@dataclass(frozen=True)
class GroupRelaxation:
    matrix: IntMatrix
    cost: tuple
    face: tuple
    rhs: tuple
    feasible: tuple  # a fiber point u
    sigma: tuple  # the maximal face supplying the reduced cost
    ctilde: tuple  # full-length rational reduced cost, zero on sigma
    cost_row: tuple  # -cB

    def projected_rhs(self):
        drop = set(self.face)
        return tuple(self.feasible[i] for i in range(self.matrix.n) if i not in drop)

    def constraint_rows(self):
        lat = cached_kernel_basis(self.matrix)
        drop = set(self.face)
        rows = [
            (lat.matrix[i], self.feasible[i]) for i in range(self.matrix.n) if i not in drop
        ]
        rows.append((self.cost_row, 0))
        return rows


@dataclass(frozen=True)
class RelaxationOutcome:
    z: tuple
    x: tuple  # full lifted point, integral
    solves_ip: bool
    value: int  # cost of the lifted point


def build_relaxation(a: IntMatrix, cost, delta: RegularSubdivision, tau, b) -> GroupRelaxation:
    """Assemble G^tau(b).  NotAFace when tau is outside the triangulation
    (the relaxation would be unbounded); Infeasible when the fiber is empty.
    """
    cost = tuple(int(v) for v in cost)
    tau = tuple(sorted(tau))
    if tau not in delta:
        raise NotAFace(f"{tau} indexes an unbounded relaxation")
    u = fibers.fiber_first(a.entries, b)
    if u is None:
        raise Infeasible(f"no lattice point with A x = {tuple(b)}")
    sigma = next(f for f in sorted(delta.maximal_faces) if set(tau) <= set(f))
    ctilde = reduced_cost(a, cost, sigma)
    return GroupRelaxation(
        a, cost, tau, tuple(int(v) for v in b), u, sigma, ctilde,
        oracle.cost_row(a, cost),
    )


def solve_relaxation(r: GroupRelaxation) -> RelaxationOutcome:
    """Optimal z of the relaxation, lifted and classified.

    The feasible region with the cost cut is a polytope; its lattice points
    are enumerated exactly and the (-cB)-minimum taken with lexicographic
    tie-break.
    """
    lat = cached_kernel_basis(r.matrix)
    ndim = lat.corank
    rows = r.constraint_rows()
    pts = oracle.lattice_points_boxed(rows, ndim)
    if not pts:
        raise AssertionError("relaxation lost the origin")
    z = min(pts, key=lambda p: (dot(r.cost_row, p), p))
    x = tuple(ui - bi for ui, bi in zip(r.feasible, lat.apply(z)))
    in_face = set(r.face)
    solves = all(x[i] >= 0 for i in range(r.matrix.n) if i in in_face)
    if any(x[i] < 0 for i in range(r.matrix.n) if i not in in_face):
        raise AssertionError("lift broke nonnegativity off the face")
    return RelaxationOutcome(z, x, solves, dot(r.cost, x))


def solve_via_standard_pairs(decomp: Decomposition, a: IntMatrix, b):
    """Solve the program by scanning pair linear systems A_tau x = b - A u.

    Any pair whose square system has a nonnegative integral solution yields
    the optimum (the lifted point lies in the pair's semigroup, hence among
    the optimal points, and fibers meet the optimal set once).  Maximal faces
    are tried first, then faces by decreasing size.
    """
    b = tuple(int(v) for v in b)
    maximal = set(decomp.delta.maximal_faces)
    ordered = sorted(
        decomp.pairs,
        key=lambda p: (0 if p.face in maximal else 1, -len(p.face), p.face, p.root),
    )
    for pair in ordered:
        rhs = tuple(bi - vi for bi, vi in zip(b, a.apply(pair.root)))
        tau = pair.face
        if not tau:
            if all(v == 0 for v in rhs):
                return pair.root, pair
            continue
        cols = a.columns(tau)
        sol = solve_exact(cols, rhs)
        if sol is None:
            continue
        if any(v.denominator != 1 or v < 0 for v in sol):
            continue
        x = list(pair.root)
        for t, i in enumerate(tau):
            x[i] = int(sol[t])
        return tuple(x), pair
    raise Infeasible(f"no standard pair solves A x = {b}; the fiber is empty")
