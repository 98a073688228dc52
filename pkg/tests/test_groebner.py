import random

import pytest
from conftest import EX1, EX1_COST, KNAPSACK, KNAPSACK_COST

from toricip import fibers, oracle
from toricip.core import IntMatrix
from toricip.errors import Infeasible
from toricip.groebner import (
    CostOrder,
    cached_groebner,
    is_generic,
    normal_form,
    positive_grading,
    solve_ip,
    toric_groebner,
)
from toricip.linalg import dot


def test_knapsack_reduced_basis():
    a = IntMatrix(KNAPSACK)
    gb = toric_groebner(a, CostOrder.from_cost(KNAPSACK_COST))
    heads = {b.head for b in gb.elements}
    assert heads == {(0, 8, 0), (1, 0, 1), (1, 6, 0), (2, 4, 0), (3, 2, 0), (4, 0, 0)}
    # tails pin the full binomials: x1^4 - x3, x2^8 - x3^5, ...
    as_pairs = {(b.head, b.tail) for b in gb.elements}
    assert ((4, 0, 0), (0, 0, 1)) in as_pairs
    assert ((0, 8, 0), (0, 0, 5)) in as_pairs
    assert gb.generic


def test_basis_elements_are_kernel_binomials_with_disjoint_support():
    a = IntMatrix(KNAPSACK)
    gb = cached_groebner(a, CostOrder.from_cost(KNAPSACK_COST))
    for b in gb.elements:
        assert all(v == 0 for v in a.apply(b.vector))
        assert all(p == 0 or m == 0 for p, m in zip(b.head, b.tail))
        assert dot(KNAPSACK_COST, b.head) > dot(KNAPSACK_COST, b.tail)


def test_reducedness():
    a = IntMatrix(KNAPSACK)
    gb = cached_groebner(a, CostOrder.from_cost(KNAPSACK_COST))
    for i, b in enumerate(gb.elements):
        for j, other in enumerate(gb.elements):
            if i == j:
                continue
            assert not all(x <= y for x, y in zip(other.head, b.head))
            assert not all(x <= y for x, y in zip(other.head, b.tail))


def test_square_matrix_gives_empty_basis():
    a = IntMatrix(((1, 0), (0, 1)))
    gb = toric_groebner(a, CostOrder.from_cost((3, 7)))
    assert gb.elements == () and gb.generic


def test_positive_grading():
    for rows in [KNAPSACK, EX1, ((1, -1, 3), (0, 2, 1))]:
        a = IntMatrix(rows)
        w = positive_grading(a)
        assert all(v > 0 for v in w)


def test_is_generic_cases():
    a = IntMatrix(KNAPSACK)
    flag, witness = is_generic(a, KNAPSACK_COST)
    assert flag and witness is None
    flag, witness = is_generic(a, (0, 0, 0))
    assert not flag
    assert witness is not None and all(v == 0 for v in a.apply(witness.vector))
    assert is_generic(IntMatrix(EX1), EX1_COST)[0]


def test_solve_ip_examples():
    a = IntMatrix(KNAPSACK)
    order = CostOrder.from_cost(KNAPSACK_COST)
    assert solve_ip(a, order, (27,)) == (1, 5, 0)
    assert solve_ip(a, order, (0,)) == (0, 0, 0)
    assert solve_ip(a, order, (8,)) == (0, 0, 1)
    with pytest.raises(Infeasible):
        solve_ip(a, order, (1,))


@pytest.mark.parametrize("seed", range(5))
def test_solve_ip_agrees_with_fiber_oracle(seed):
    rng = random.Random(seed)
    a = IntMatrix(EX1)
    order = CostOrder.from_cost(EX1_COST)
    for _ in range(10):
        u = tuple(rng.randint(0, 4) for _ in range(a.n))
        b = a.apply(u)
        assert solve_ip(a, order, b) == oracle.fiber_solve(a, EX1_COST, b)


def test_order_ideal_property():
    # anything below an optimum is its own normal form
    a = IntMatrix(KNAPSACK)
    order = CostOrder.from_cost(KNAPSACK_COST)
    gb = cached_groebner(a, order)
    star = solve_ip(a, order, (27,))
    for i in range(star[0] + 1):
        for j in range(star[1] + 1):
            for k in range(star[2] + 1):
                assert normal_form(gb, (i, j, k)) == (i, j, k)


def test_test_set_property():
    # every feasible non-optimal point is improved by some basis element
    a = IntMatrix(KNAPSACK)
    order = CostOrder.from_cost(KNAPSACK_COST)
    gb = cached_groebner(a, order)
    rng = random.Random(3)
    for _ in range(40):
        u = tuple(rng.randint(0, 6) for _ in range(3))
        opt = oracle.fiber_solve(a, KNAPSACK_COST, a.apply(u))
        if u == opt:
            continue
        improved = False
        for b in gb.elements:
            if all(h <= x for h, x in zip(b.head, u)):
                v = tuple(x - h + t for x, h, t in zip(u, b.head, b.tail))
                improved = dot(KNAPSACK_COST, v) < dot(KNAPSACK_COST, u)
                break
        assert improved


@pytest.mark.parametrize("cost", [(10000, 100, 1), (1, 1, 1), (3, 9, 2), (0, 5, 17)])
def test_paper_generators_lie_in_the_ideal(cost):
    # the published generating set x1^4 - x3, x2^2 - x1 x3 must reduce to zero
    # under every order: both sides of each binomial share a normal form
    a = IntMatrix(KNAPSACK)
    gb = cached_groebner(a, CostOrder.from_cost(cost))
    for u, v in [((4, 0, 0), (0, 0, 1)), ((0, 2, 0), (1, 0, 1))]:
        assert normal_form(gb, u) == normal_form(gb, v)


def test_phi_bijectivity_on_box():
    # distinct normal forms have distinct images A u
    a = IntMatrix(EX1)
    gb = cached_groebner(a, CostOrder.from_cost(EX1_COST))
    forms = set()
    images = set()
    for u in fibers.iter_fiber(((1, 1, 1, 1),), (4,)):  # all |u| = 4
        nf = normal_form(gb, u)
        if nf in forms:
            continue
        forms.add(nf)
        img = a.apply(nf)
        assert img not in images
        images.add(img)
