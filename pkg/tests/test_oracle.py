import random
from fractions import Fraction

import pytest
from conftest import GFAMILY_COST, KNAPSACK_COST, face

from toricip import oracle
from toricip.core import IntMatrix
from toricip.errors import BoundUnavailable, Degenerate, NotAFace, Unbounded
from toricip.linalg import dot
from toricip.oracle import (
    IneqPolytope,
    brute_force_standard_pairs,
    enumerate_lattice_points,
    fiber_solve,
    is_standard_polytope,
    kannan_bound,
    lattice_points_boxed,
    width_along,
)

# the standard polytope the paper prints for the knapsack pair ((1,0,0), {}),
# with the cost row as computed from the printed basis
PAPER_QUAD = IneqPolytope.from_rows(
    [((-1, 4), 1), ((2, 0), 0), ((-1, -1), 0), ((9801, -39999), 0)]
)


def test_paper_standard_polytope_is_singleton():
    assert enumerate_lattice_points(PAPER_QUAD) == [(0, 0)]


def test_unit_square():
    sq = IneqPolytope.from_rows(
        [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]
    )
    assert enumerate_lattice_points(sq) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_unbounded_raises():
    ray = IneqPolytope.from_rows([((1, 0), 0), ((0, 1), 0)])
    assert not ray.is_bounded()
    with pytest.raises(Unbounded):
        enumerate_lattice_points(ray)


@pytest.mark.parametrize("seed", range(25))
def test_boxed_enumeration_matches_lp_sweep(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    rows = []
    for i in range(dim):
        lo = [0] * dim
        lo[i] = -1
        hi = [0] * dim
        hi[i] = 1
        rows += [(tuple(lo), rng.randint(0, 4)), (tuple(hi), rng.randint(0, 4))]
    for _ in range(rng.randint(0, 3)):
        rows.append((tuple(rng.randint(-3, 3) for _ in range(dim)), rng.randint(-2, 6)))
    poly = IneqPolytope.from_rows(rows)
    swept = sorted(enumerate_lattice_points(poly))
    boxed = sorted(lattice_points_boxed(list(poly.rows), dim))
    assert swept == boxed


def test_q_polytope_optimum_is_singleton(knapsack_pipeline):
    a, _, _, _, _ = knapsack_pipeline
    best = fiber_solve(a, KNAPSACK_COST, (27,))
    assert best == (1, 5, 0)
    poly = oracle.q_polytope(a, KNAPSACK_COST, best, ())
    assert enumerate_lattice_points(poly) == [(0, 0)]
    # a non-optimal point's polytope picks up an extra lattice point
    poly2 = oracle.q_polytope(a, KNAPSACK_COST, (11, 1, 0), ())
    assert len(enumerate_lattice_points(poly2, limit=2)) == 2


def test_fiber_solve_examples(long_chain_pipeline):
    a = IntMatrix(((2, 5, 8),))
    assert fiber_solve(a, KNAPSACK_COST, (0,)) == (0, 0, 0)
    assert fiber_solve(a, KNAPSACK_COST, (3,)) is None
    opt, fib = fiber_solve(a, KNAPSACK_COST, (10,), with_fiber=True)
    assert opt == (0, 2, 0) and set(fib) == {(5, 0, 0), (0, 2, 0), (1, 0, 1)}
    lc, _, _, _, _ = long_chain_pipeline
    v = (1, 1, 1, 0, 0, 0)
    from conftest import LONG_CHAIN_COST

    assert fiber_solve(lc, LONG_CHAIN_COST, lc.apply(v)) == v


def test_is_standard_polytope_examples(knapsack_pipeline):
    a, _, _, _, _ = knapsack_pipeline
    assert is_standard_polytope(a, KNAPSACK_COST, (0, 2, 0), face(3))
    assert not is_standard_polytope(a, KNAPSACK_COST, (0, 8, 0), face(3))
    assert is_standard_polytope(a, KNAPSACK_COST, (0, 0, 0), face(3))
    with pytest.raises(NotAFace):
        is_standard_polytope(a, KNAPSACK_COST, (0, 0, 0), face(1))


def test_width_examples():
    sq = IneqPolytope.from_rows(
        [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]
    )
    assert width_along(sq, (1, 0)) == 1
    # translation invariance
    sq2 = IneqPolytope.from_rows(
        [((1, 0), 8), ((-1, 0), -7), ((0, 1), 4), ((0, -1), -3)]
    )
    assert width_along(sq2, (1, 0)) == 1
    assert width_along(sq2, (2, 1)) == width_along(sq, (2, 1)) == 3
    with pytest.raises(Unbounded):
        width_along(IneqPolytope.from_rows([((1, 0), 0), ((0, 1), 0)]), (1, 1))


def test_width_cross_checked_by_vertices():
    # width of the paper's triangular standard polytope along its cost row
    tri = IneqPolytope.from_rows(
        [((-1, 4), 0), ((2, 0), 2), ((9801, -39999), 0)]
    )
    crow = (9801, -39999)
    w = width_along(tri, crow)
    verts = [(0, 0), (1, Fraction(1, 4)), (1, Fraction(9801, 39999))]
    vals = [dot(crow, v) for v in verts]
    assert w == max(vals) - min(vals)


def test_width_of_singleton_simplex_is_zero(knapsack_pipeline):
    a, _, _, _, _ = knapsack_pipeline
    poly = oracle.q_polytope(a, KNAPSACK_COST, (0, 0, 0), face(3))
    crow = oracle.cost_row(a, KNAPSACK_COST)
    assert width_along(poly, crow) == 0


def test_standard_polytopes_satisfy_narrow_width_bound(knapsack_pipeline):
    # some defining row sees width at most M(n+2) on every standard polytope
    a, delta, _, ideal, decomp = knapsack_pipeline
    from toricip.core import cached_kernel_basis

    lat = cached_kernel_basis(a)
    crow = oracle.cost_row(a, KNAPSACK_COST)
    ndim = lat.corank
    for p in decomp.pairs:
        taubar = [i for i in range(a.n) if i not in set(p.face)]
        rows = [(lat.matrix[i], p.root[i]) for i in taubar] + [(crow, 0)]
        poly = IneqPolytope.from_rows(rows)
        m_norm = max(sum(abs(v) for v in s) for s, _ in rows)
        assert min(width_along(poly, s) for s, _ in rows) <= m_norm * (ndim + 2)


def test_kannan_bound_paper_rows():
    rows = [(-1, 4), (2, 0), (-1, -1), (9801, -39999)]
    assert kannan_bound(rows, 2) == Fraction(2 * 49800 * 4 * 79998, 2)


def test_kannan_identity_and_scaling():
    ident = [(1, 0), (0, 1)]
    assert kannan_bound(ident, 2) == 2 * 1 * 4 * 1
    rows = [(-1, 4), (2, 1), (3, -1)]
    base = kannan_bound(rows, 2)
    scaled = kannan_bound([tuple(5 * v for v in r) for r in rows], 2)
    # M scales by 5, minors by 25, their ratio cancels
    assert scaled == 5 * base
    with pytest.raises(Degenerate):
        kannan_bound([(1, 0), (2, 0), (0, 1)], 2)


def test_brute_force_knapsack(knapsack_pipeline):
    a, delta, _, ideal, alg = knapsack_pipeline
    box = [max(m - 1, 0) for m in ideal.max_exponents()]
    dec = brute_force_standard_pairs(a, KNAPSACK_COST, delta, root_box=box, margin=1)
    assert set(dec.pairs) == set(alg.pairs)
    assert dec.multiplicities == {(): 12, (2,): 8}  # 12 quadrangular, 8 triangular


def test_brute_force_trivial_and_gfamily(gfamily_pipeline):
    one = IntMatrix(((1,),))
    from toricip.triangulation import regular_subdivision

    d1 = regular_subdivision(one, (0,))
    dec = brute_force_standard_pairs(one, (0,), d1, root_box=[0])
    assert [(p.root, p.face) for p in dec.pairs] == [((0,), (0,))]

    a, delta, _, ideal, alg = gfamily_pipeline
    box = [max(m - 1, 0) for m in ideal.max_exponents()]
    dec = brute_force_standard_pairs(a, GFAMILY_COST, delta, root_box=box, margin=1)
    assert set(dec.pairs) == set(alg.pairs)


def test_bound_unavailable_and_box_fallback():
    # a duplicated column yields a zero row in the kernel basis, hence a zero
    # maximal minor in the lifted row system
    a = IntMatrix(((1, 0, 1), (0, 1, 0)))
    from toricip.triangulation import regular_subdivision

    c = (1, 2, 3)
    delta = regular_subdivision(a, c)
    assert oracle.kannan_root_bound(a, c) is None
    with pytest.raises(BoundUnavailable):
        brute_force_standard_pairs(a, c, delta)
    dec = brute_force_standard_pairs(a, c, delta, root_box=[0, 0, 0])
    assert [(p.root, p.face) for p in dec.pairs] == [((0, 0, 0), (0, 1))]


def test_emptypolys_lemma_both_parts(knapsack_pipeline):
    # (i) u optimal iff Q_u is a singleton; (ii) relaxation solves iff
    # Q_u^taubar is a singleton, for u optimal
    import itertools

    from toricip.relax import build_relaxation, solve_relaxation

    a, delta, _, _, _ = knapsack_pipeline
    for u in itertools.product(range(3), range(3), range(2)):
        opt = fiber_solve(a, KNAPSACK_COST, a.apply(u))
        single = (
            enumerate_lattice_points(oracle.q_polytope(a, KNAPSACK_COST, u, ()), limit=2)
            == [(0, 0)]
        )
        assert single == (opt == u)
        if opt == u:
            out = solve_relaxation(
                build_relaxation(a, KNAPSACK_COST, delta, face(3), a.apply(u))
            )
            single3 = (
                enumerate_lattice_points(
                    oracle.q_polytope(a, KNAPSACK_COST, u, face(3)), limit=2
                )
                == [(0, 0)]
            )
            assert out.solves_ip == single3
