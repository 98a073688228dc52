"""Standard-pair decompositions of the optimal-point order ideal.

The optimal solutions of the whole family form a down set whose complement is
generated by the initial-ideal exponents.  A pair (root u, face tau) is
admissible when the shifted coordinate semigroup u + N^tau avoids the ideal,
and standard when no admissible pair properly contains it; the decomposition
by standard pairs is unique.  Roots of standard pairs are bounded coordinate-
wise by the generator exponents (a consequence of admissibility plus the
single-step maximality test), which makes the enumeration here finite.

Faces of standard pairs are the associated sets of the family; they carry the
multiplicities, the arithmetic degree and the chain structure audited by
:func:`associated_report`.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import IntMatrix
from .errors import ChainViolation, FaceViolation, LengthViolation, NotOptimal
from .groebner import CostOrder, GroebnerBasis, cached_groebner, lex_realizing_cost
from .triangulation import RegularSubdivision, regular_subdivision


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generating exponents of a monomial ideal (an antichain)."""

    generators: tuple
    nvars: int
    from_generic_order: bool = True

    def contains(self, u):
        return any(all(e <= x for e, x in zip(g, u)) for g in self.generators)

    def max_exponents(self):
        if not self.generators:
            return (0,) * self.nvars
        return tuple(max(g[i] for g in self.generators) for i in range(self.nvars))


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """in_c(I_A): minimal elements among the basis heads.

    When the order was not generic the result is only the monomial part and is
    flagged via ``from_generic_order``.
    """
    heads = sorted({b.head for b in gb.elements})
    minimal = []
    for h in heads:
        if not any(all(e <= x for e, x in zip(g, h)) for g in minimal if g != h):
            minimal.append(h)
    return MonomialIdeal(tuple(minimal), gb.matrix.n, gb.generic)


@dataclass(frozen=True, order=True)
class StandardPair:
    root: tuple
    face: tuple


@dataclass(frozen=True)
class Decomposition:
    pairs: tuple
    delta: RegularSubdivision
    ideal: MonomialIdeal | None = None

    @classmethod
    def from_pairs(cls, pairs, delta, ideal=None):
        ordered = tuple(sorted(pairs, key=lambda p: (len(p.face), p.face, p.root)))
        return cls(ordered, delta, ideal)

    @property
    def arithmetic_degree(self):
        return len(self.pairs)

    @property
    def multiplicities(self):
        out = {}
        for p in self.pairs:
            out[p.face] = out.get(p.face, 0) + 1
        return out

    @property
    def associated_sets(self):
        return sorted(self.multiplicities, key=lambda f: (len(f), f))

    def pairs_on(self, face):
        face = tuple(sorted(face))
        return [p for p in self.pairs if p.face == face]


def _admissible_roots(taubar, proj_gens, bounds):
    """Roots over the taubar coordinates whose semigroup avoids the ideal.

    proj_gens are the generators projected to taubar; a subtree dies as soon
    as one generator is dominated on assigned coordinates and vanishes on the
    rest.
    """
    k = len(taubar)
    lastnz = [max((t for t in range(k) if g[t] != 0), default=-1) for g in proj_gens]
    out = []

    def rec(depth, u):
        for gi, g in enumerate(proj_gens):
            if lastnz[gi] < depth and all(g[t] <= u[t] for t in range(depth)):
                return
        if depth == k:
            out.append(tuple(u))
            return
        for v in range(bounds[depth]):
            u.append(v)
            rec(depth + 1, u)
            u.pop()

    rec(0, [])
    return out


def standard_pair_decomposition(ideal: MonomialIdeal, delta: RegularSubdivision) -> Decomposition:
    """The unique standard-pair decomposition of the standard monomials.

    Candidate faces range over all index subsets; the theory says every face
    that survives is a face of the triangulation, and a FaceViolation is
    raised if that fails (an internal-consistency alarm, not a user error).
    """
    n = ideal.nvars
    if n > 16:
        raise ValueError("decomposition enumeration is desk-scale (n <= 16)")
    gens = ideal.generators
    maxexp = ideal.max_exponents()
    delta_faces = set(delta.faces())
    pairs = []
    for size in range(n + 1):
        for tau in combinations(range(n), size):
            taubar = [i for i in range(n) if i not in tau]
            if not gens:
                # zero ideal: all of N^n is standard; only the full face survives
                if not taubar:
                    pairs.append(StandardPair((0,) * n, tau))
                continue
            proj = [tuple(g[i] for i in taubar) for g in gens]
            if any(not any(p) for p in proj):
                continue  # some generator lives inside tau: nothing is admissible
            proj = _minimalize(proj)
            bounds = [maxexp[i] for i in taubar]
            for u in _admissible_roots(taubar, proj, bounds):
                if _is_maximal(u, proj):
                    root = [0] * n
                    for t, i in enumerate(taubar):
                        root[i] = u[t]
                    pairs.append(StandardPair(tuple(root), tau))
    for p in pairs:
        if p.face not in delta_faces:
            raise FaceViolation(f"standard pair face {p.face} not in the triangulation")
    return Decomposition.from_pairs(pairs, delta, ideal)


def _minimalize(gens):
    gens = sorted(set(gens))
    out = []
    for g in gens:
        if not any(all(e <= x for e, x in zip(h, g)) for h in out):
            out.append(g)
    return out


def _is_maximal(u, proj_gens):
    # the pair cannot be grown by any single extra coordinate
    k = len(u)
    for skip in range(k):
        ok = False
        for g in proj_gens:
            if all(t == skip or g[t] <= u[t] for t in range(k)):
                ok = True
                break
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class AssociatedReport:
    associated_sets: tuple
    multiplicities: tuple  # (face, count) pairs
    arithmetic_degree: int
    max_chain: tuple
    max_chain_length: int
    length_bound: int


def associated_report(decomp: Decomposition, delta: RegularSubdivision) -> AssociatedReport:
    """Associated sets with multiplicities, plus the chain audit.

    Verifies that every maximal cell is associated, that every associated set
    below full rank is covered by an associated set one larger, and that the
    longest chain respects min(d, 2^(n-d) - (n-d+1)).  Violations raise: the
    theorems guarantee they cannot fire on a valid decomposition.
    """
    a = delta.matrix
    assoc = decomp.associated_sets
    assoc_set = set(assoc)
    for sigma in delta.maximal_faces:
        if sigma not in assoc_set:
            raise ChainViolation(f"maximal face {sigma} is not associated")
    d = a.d
    for tau in assoc:
        if len(tau) < d:
            stau = set(tau)
            if not any(
                len(t2) == len(tau) + 1 and stau < set(t2) for t2 in assoc_set
            ):
                raise ChainViolation(f"no one-step extension for associated set {tau}")
    # longest chain in the inclusion poset
    order = sorted(assoc, key=len)
    best_len = {}
    best_pred = {}
    for t in order:
        st = set(t)
        best = 0
        pred = None
        for t2 in order:
            if len(t2) >= len(t):
                break
            if set(t2) < st and best_len[t2] + 1 > best:
                best = best_len[t2] + 1
                pred = t2
        best_len[t] = best
        best_pred[t] = pred
    top = max(order, key=lambda t: best_len[t])
    chain = [top]
    while best_pred[chain[-1]] is not None:
        chain.append(best_pred[chain[-1]])
    chain.reverse()
    corank = a.n - a.d
    bound = min(d, 2**corank - (corank + 1)) if corank > 0 else 0
    length = best_len[top]
    if length > bound:
        raise LengthViolation(f"chain of length {length} exceeds bound {bound}")
    mults = tuple(sorted(decomp.multiplicities.items(), key=lambda kv: (len(kv[0]), kv[0])))
    return AssociatedReport(
        tuple(assoc), mults, decomp.arithmetic_degree, tuple(chain), length, bound
    )


def is_gomory_family(decomp: Decomposition, delta: RegularSubdivision) -> bool:
    """True iff every standard pair sits on a maximal cell.

    Equivalently, every program in the family is solved by one of its Gomory
    relaxations.
    """
    maximal = set(delta.maximal_faces)
    return all(p.face in maximal for p in decomp.pairs)


def decomposition_for(a: IntMatrix, cost):
    """One-stop pipeline: (triangulation, basis, decomposition) for a cost.

    When the cost is degenerate (ties in the basis or a non-simplicial cell)
    the subdivision is refined by the deterministic lex tie-break, reported in
    the returned flag, never silently.  Returns (delta, gb, decomp, refined).
    """
    cost = tuple(int(v) for v in cost)
    gb = cached_groebner(a, CostOrder.from_cost(cost))
    delta = regular_subdivision(a, cost)
    refined = False
    if not gb.generic or not delta.is_triangulation:
        delta = regular_subdivision(a, lex_realizing_cost(a, cost))
        refined = True
    decomp = standard_pair_decomposition(initial_ideal(gb), delta)
    return delta, gb, decomp, refined


def relaxations_solving(v, decomp: Decomposition):
    """All faces tau such that the tau-relaxation solves the program of A v.

    These are the subsets of faces of pairs whose semigroup contains v; raises
    NotOptimal when v is not an optimal point (it is covered by no pair).
    """
    v = tuple(int(x) for x in v)
    covering = []
    for p in decomp.pairs:
        face = set(p.face)
        if all(v[i] == p.root[i] for i in range(len(v)) if i not in face) and all(
            v[i] >= 0 for i in range(len(v))
        ):
            covering.append(p.face)
    if not covering:
        raise NotOptimal(f"{v} is not covered by any standard pair")
    out = set()
    for face in covering:
        for k in range(len(face) + 1):
            out.update(combinations(face, k))
    return sorted(out, key=lambda f: (len(f), f))
