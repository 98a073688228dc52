import random
from itertools import permutations

import pytest

from toricip import linalg


def det_by_permutations(rows):
    """Leibniz-formula determinant, the independent oracle for det_int."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


@pytest.mark.parametrize("seed", range(30))
def test_det_matches_permutation_expansion(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
    assert linalg.det_int(rows) == det_by_permutations(rows)


def test_det_singular():
    assert linalg.det_int([[1, 2], [2, 4]]) == 0
    assert linalg.det_int([]) == 1


@pytest.mark.parametrize("seed", range(30))
def test_kernel_basis_spans_and_saturates(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    n = rng.randint(d, d + 3)
    rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(d)]
    basis, rk = linalg.kernel_basis(rows, n)
    assert rk == linalg.rank(rows)
    assert len(basis) == n - rk
    for col in basis:
        assert all(sum(r[i] * col[i] for i in range(n)) == 0 for r in rows)
    if basis:
        bmat = [[col[i] for col in basis] for i in range(n)]
        assert all(s == 1 for s in linalg.smith_invariants(bmat))


@pytest.mark.parametrize("seed", range(20))
def test_smith_invariants_match_determinantal_divisors(seed):
    # product of the first k invariants equals the gcd of all k x k minors
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    n = rng.randint(1, 4)
    rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
    inv = linalg.smith_invariants(rows)
    prod = 1
    for k, s in enumerate(inv, start=1):
        prod *= s
        assert prod == linalg.gcd_of_minors(rows, k)
    if len(inv) < min(m, n):
        assert linalg.gcd_of_minors(rows, len(inv) + 1) == 0


def test_smith_divisibility_chain():
    rows = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    inv = linalg.smith_invariants(rows)
    for a, b in zip(inv, inv[1:]):
        assert b % a == 0


def test_solve_exact_consistency():
    from fractions import Fraction

    sol = linalg.solve_exact([[1, 2], [3, 4]], [5, 6])
    assert sol == (Fraction(-4), Fraction(9, 2))
    assert linalg.solve_exact([[1], [1]], [1, 2]) is None
    with pytest.raises(ValueError):
        linalg.solve_exact([[1, 1]], [1])
