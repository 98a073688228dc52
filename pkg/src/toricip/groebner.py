"""Toric Groebner bases and integer programming by normal-form reduction.

The toric ideal of A is the binomial ideal of its kernel relations.  We start
from a saturated kernel lattice basis, run a binomial Buchberger completion,
and saturate by each variable in turn with a graded reverse-lexicographic pass
(the lattice-ideal saturation trick: for positively graded ideals, dividing
every reduced-basis element by the variable made cheapest computes the
quotient by that variable's powers).  A final completion under the cost order
yields the reduced basis, the unique minimal test set of the family.

Orders are weight stacks refined by lex, encoded as sort keys, so every run is
deterministic even for non-generic costs; genericity is reported, never
assumed.
"""

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

from . import fibers
from .core import IntMatrix, LatticeBasis, cached_kernel_basis
from .errors import Infeasible
from .linalg import dot
from .linprog import OPTIMAL, solve_lp


@dataclass(frozen=True)
class CostOrder:
    """Total order on monomials: weight rows compared in sequence, then lex."""

    weights: tuple
    n: int

    @classmethod
    def from_cost(cls, cost):
        return cls((tuple(int(v) for v in cost),), len(cost))

    @property
    def cost(self):
        return self.weights[0]

    def key(self, u):
        return tuple(dot(w, u) for w in self.weights) + u

    def ties_through_weights(self, u, v):
        return all(dot(w, u) == dot(w, v) for w in self.weights)


class _RevlexSat:
    """Weight-graded reverse lex with one variable cheapest (saturation pass)."""

    def __init__(self, grading, n, cheapest):
        self.grading = grading
        self.seq = [j for j in range(n) if j != cheapest] + [cheapest]
        self.seq.reverse()

    def key(self, u):
        return (dot(self.grading, u),) + tuple(-u[j] for j in self.seq)


@dataclass(frozen=True)
class Binomial:
    """x^head - x^tail with head > tail in the working order and A(head-tail)=0."""

    head: tuple
    tail: tuple

    @property
    def vector(self):
        return tuple(a - b for a, b in zip(self.head, self.tail))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple  # Binomials sorted by head key
    order: CostOrder
    matrix: IntMatrix
    lattice: LatticeBasis
    generic: bool


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def _strip(u, v):
    m = tuple(min(a, b) for a, b in zip(u, v))
    if any(m):
        u = tuple(a - b for a, b in zip(u, m))
        v = tuple(a - b for a, b in zip(v, m))
    return u, v


def _orient(u, v, order):
    if u == v:
        return None
    return (u, v) if order.key(u) > order.key(v) else (v, u)


def _reduce_full(head, tail, basis, order):
    """Full normal form of x^head - x^tail; None when it reduces to zero."""
    changed = True
    while changed:
        changed = False
        for g in basis:
            if _divides(g[0], head):
                head = tuple(a - b + c for a, b, c in zip(head, g[0], g[1]))
                if head == tail:
                    return None
                if order.key(head) < order.key(tail):
                    head, tail = tail, head
                changed = True
                break
    changed = True
    while changed:
        changed = False
        for g in basis:
            if _divides(g[0], tail):
                tail = tuple(a - b + c for a, b, c in zip(tail, g[0], g[1]))
                changed = True
                break
    return head, tail


def _completion(gens, order, strip_common):
    """Buchberger completion for binomials; returns the reduced basis."""
    basis = []
    for u, v in gens:
        if strip_common:
            u, v = _strip(u, v)
        ov = _orient(u, v, order)
        if ov and ov not in basis:
            basis.append(ov)

    heap = []
    counter = 0
    for i in range(len(basis)):
        for j in range(i):
            lcm = tuple(max(a, b) for a, b in zip(basis[i][0], basis[j][0]))
            counter += 1
            heapq.heappush(heap, (order.key(lcm), counter, i, j))

    while heap:
        _, _, i, j = heapq.heappop(heap)
        hi, ti = basis[i]
        hj, tj = basis[j]
        if all(a == 0 or b == 0 for a, b in zip(hi, hj)):
            continue  # coprime heads: S-pair reduces to zero
        lcm = tuple(max(a, b) for a, b in zip(hi, hj))
        u = tuple(l - a + b for l, a, b in zip(lcm, hi, ti))
        v = tuple(l - a + b for l, a, b in zip(lcm, hj, tj))
        if u == v:
            continue
        if strip_common:
            u, v = _strip(u, v)
        ov = _orient(u, v, order)
        red = _reduce_full(ov[0], ov[1], basis, order)
        if red is None:
            continue
        u, v = red
        if strip_common:
            u, v = _strip(u, v)
        ov = _orient(u, v, order)
        if ov in basis:
            continue
        basis.append(ov)
        k = len(basis) - 1
        for i2 in range(k):
            lcm = tuple(max(a, b) for a, b in zip(basis[k][0], basis[i2][0]))
            counter += 1
            heapq.heappush(heap, (order.key(lcm), counter, k, i2))

    return _interreduce(basis, order)


def _interreduce(basis, order):
    """Minimalize heads, then put every tail in normal form."""
    basis = sorted(set(basis), key=lambda g: order.key(g[0]))
    kept = []
    for g in basis:
        if not any(_divides(h[0], g[0]) for h in kept):
            kept.append(g)
    out = []
    for idx, (head, tail) in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        changed = True
        while changed:
            changed = False
            for g in others:
                if _divides(g[0], tail):
                    tail = tuple(a - b + c for a, b, c in zip(tail, g[0], g[1]))
                    changed = True
                    break
        out.append((head, tail))
    return sorted(out, key=lambda g: order.key(g[0]))


def positive_grading(a: IntMatrix):
    """An integer vector w = yA with all entries positive.

    Exists because the kernel of A misses the orthant (Gordan duality); makes
    every kernel binomial homogeneous, which the saturation passes rely on.
    """
    n = a.n
    # variables y in R^d: minimize sum_j (y . a_j) subject to y . a_j >= 1
    neg_cols = [[-a.entries[i][j] for i in range(a.d)] for j in range(n)]
    res = solve_lp([sum(row) for row in a.entries], neg_cols, [-1] * n)
    if res.status != OPTIMAL:
        raise AssertionError("no positive grading; matrix invariants violated")
    w = [dot(res.x, a.column(j)) for j in range(n)]
    denom = 1
    for v in w:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    return tuple(int(v * denom) for v in w)


def toric_groebner(a: IntMatrix, order: CostOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal of A under the given order."""
    lattice = cached_kernel_basis(a)
    gens = [(tuple(max(v, 0) for v in col), tuple(max(-v, 0) for v in col))
            for col in lattice.columns()]
    if not gens:
        return GroebnerBasis((), order, a, lattice, True)
    w = positive_grading(a)
    basis = [g for g in gens]
    for i in range(a.n):
        basis = _completion(basis, _RevlexSat(w, a.n, i), False)
        stripped = []
        for head, tail in basis:
            m = min(head[i], tail[i])
            if m:
                head = head[:i] + (head[i] - m,) + head[i + 1 :]
                tail = tail[:i] + (tail[i] - m,) + tail[i + 1 :]
            if head != tail:
                stripped.append((head, tail))
        basis = stripped
    basis = _completion(basis, order, True)
    elems = tuple(Binomial(h, t) for h, t in basis)
    generic = all(not order.ties_through_weights(b.head, b.tail) for b in elems)
    return GroebnerBasis(elems, order, a, lattice, generic)


@lru_cache(maxsize=128)
def cached_groebner(a: IntMatrix, order: CostOrder) -> GroebnerBasis:
    return toric_groebner(a, order)


def is_generic(a: IntMatrix, cost):
    """Whether every reduced-basis element has a strict cost gap.

    Returns (flag, witness): on failure the witness is a basis binomial whose
    two monomials tie under the cost (so optima are not unique).
    """
    gb = cached_groebner(a, CostOrder.from_cost(cost))
    for b in gb.elements:
        if dot(gb.order.cost, b.head) == dot(gb.order.cost, b.tail):
            return False, b
    return True, None


def lex_realizing_cost(a: IntMatrix, cost):
    """An integer cost realizing (cost, lex tie-break) generically.

    For costs whose subdivision is not simplicial or whose basis carries ties,
    geometric lex weights are added at increasing scales until the perturbed
    cost is generic, reproduces the tie-broken initial ideal exactly, and
    induces a genuine triangulation.  The verification makes the scaling safe:
    a wrong scale is rejected, never returned.
    """
    from .triangulation import regular_subdivision

    cost = tuple(int(v) for v in cost)
    gb = cached_groebner(a, CostOrder.from_cost(cost))
    if gb.generic and regular_subdivision(a, cost).is_triangulation:
        return cost
    heads = {b.head for b in gb.elements}
    n = a.n
    for base in (8, 64, 1024):
        w = tuple(base ** (n - 1 - j) for j in range(n))
        scale = sum(w) + 1
        for _ in range(10):
            c2 = tuple(scale * cv + wv for cv, wv in zip(cost, w))
            gb2 = toric_groebner(a, CostOrder.from_cost(c2))
            if gb2.generic and {b.head for b in gb2.elements} == heads:
                if regular_subdivision(a, c2).is_triangulation:
                    return c2
            scale *= 32
    raise RuntimeError("no scale realized the lex refinement")


def normal_form(gb: GroebnerBasis, u):
    """Reduce x^u to its normal form, always by the lowest-index element."""
    u = tuple(int(v) for v in u)
    changed = True
    while changed:
        changed = False
        for b in gb.elements:
            if _divides(b.head, u):
                u = tuple(a - h + t for a, h, t in zip(u, b.head, b.tail))
                changed = True
                break
    return u


def solve_ip(a: IntMatrix, order: CostOrder, b):
    """Optimal point of min {cost . x : Ax = b, x in N^n} via normal form.

    A feasible point is taken from the fiber sweep (lex-first, cost-blind) and
    reduced by the basis; by the test-set property the result is the unique
    optimum under the order.
    """
    u = fibers.fiber_first(a.entries, b)
    if u is None:
        raise Infeasible(f"no lattice point with A x = {tuple(b)}")
    gb = cached_groebner(a, order)
    return normal_form(gb, u)
