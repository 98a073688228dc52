import random

import pytest

from toricip.core import IntMatrix
from toricip.errors import DomainError
from toricip.groebner import CostOrder, cached_groebner, is_generic
from toricip.stdpairs import initial_ideal, standard_pair_decomposition
from toricip.triangulation import regular_subdivision

KNAPSACK = ((2, 5, 8),)
KNAPSACK_COST = (10000, 100, 1)

EX1 = ((1, 1, 1, 1), (0, 1, 2, 3))
EX1_COST = (1, 0, 0, 1)
EX2_COST = (0, 1, 0, 1)
EX3 = ((1, 3, 2, 1), (0, 1, 2, 3))

LONG_CHAIN = ((5, 0, 0, 2, 1, 0), (0, 5, 0, 1, 4, 2), (0, 0, 5, 2, 0, 3))
LONG_CHAIN_COST = (21, 6, 1, 0, 0, 0)

GFAMILY = ((1, 0, 1, 1, 1, 1), (0, 1, 1, 1, 2, 2), (0, 0, 1, 2, 3, 4))
GFAMILY_COST = (0, 0, 1, 1, 0, 3)

NONNORMAL = ((1, 1, 1, 1), (0, 1, 3, 4))


def face(*idx):
    """1-based indices to the internal 0-based sorted face."""
    return tuple(sorted(i - 1 for i in idx))


def faces_1based(faces):
    return sorted(tuple(i + 1 for i in f) for f in faces)


def make_instance(seed, max_entry=4, cost_range=40):
    """A random valid (matrix, generic cost) pair, deterministic per seed."""
    rng = random.Random(seed)
    d = 1 + rng.randrange(3)
    n = d + 1 + rng.randrange(min(6, d + 3) - d)
    while True:
        rows = tuple(tuple(rng.randint(0, max_entry) for _ in range(n)) for _ in range(d))
        try:
            a = IntMatrix(rows)
        except DomainError:
            continue
        for _ in range(60):
            c = tuple(rng.randint(0, cost_range) for _ in range(n))
            generic, _ = is_generic(a, c)
            if generic and regular_subdivision(a, c).is_triangulation:
                return a, c


@pytest.fixture(scope="session")
def knapsack_pipeline():
    a = IntMatrix(KNAPSACK)
    delta = regular_subdivision(a, KNAPSACK_COST)
    gb = cached_groebner(a, CostOrder.from_cost(KNAPSACK_COST))
    ideal = initial_ideal(gb)
    decomp = standard_pair_decomposition(ideal, delta)
    return a, delta, gb, ideal, decomp


@pytest.fixture(scope="session")
def long_chain_pipeline():
    a = IntMatrix(LONG_CHAIN)
    delta = regular_subdivision(a, LONG_CHAIN_COST)
    gb = cached_groebner(a, CostOrder.from_cost(LONG_CHAIN_COST))
    ideal = initial_ideal(gb)
    decomp = standard_pair_decomposition(ideal, delta)
    return a, delta, gb, ideal, decomp


@pytest.fixture(scope="session")
def gfamily_pipeline():
    a = IntMatrix(GFAMILY)
    delta = regular_subdivision(a, GFAMILY_COST)
    gb = cached_groebner(a, CostOrder.from_cost(GFAMILY_COST))
    ideal = initial_ideal(gb)
    decomp = standard_pair_decomposition(ideal, delta)
    return a, delta, gb, ideal, decomp
