"""Exact enumeration of fibers {x in N^n : A x = b}.

Fibers are finite whenever the kernel of A meets the nonnegative orthant only
at the origin, which IntMatrix construction guarantees.  Enumeration is a lex
sweep with exact per-coordinate bounds: cheap integer bounds when the matrix
is nonnegative, rational LP bounds otherwise.
"""

from .linalg import dot
from .linprog import OPTIMAL, solve_lp


def _is_nonneg(rows):
    return all(v >= 0 for row in rows for v in row)


def iter_fiber(rows, b):
    """Yield all x in N^n with rows @ x = b, in lexicographic order."""
    d = len(rows)
    n = len(rows[0]) if d else 0
    b = tuple(int(v) for v in b)
    if _is_nonneg(rows):
        yield from _iter_nonneg(rows, d, n, 0, b, ())
    else:
        yield from _iter_lp(rows, d, n, 0, b, ())


def _iter_nonneg(rows, d, n, k, residual, prefix):
    if any(r < 0 for r in residual):
        return
    if k == n:
        if all(r == 0 for r in residual):
            yield prefix
        return
    ub = None
    for i in range(d):
        a = rows[i][k]
        if a > 0:
            q = residual[i] // a
            ub = q if ub is None else min(ub, q)
    if ub is None:
        # zero column: ruled out by the boundedness assumption
        raise ValueError("zero column makes the fiber infinite")
    for v in range(ub + 1):
        nres = tuple(residual[i] - v * rows[i][k] for i in range(d))
        yield from _iter_nonneg(rows, d, n, k + 1, nres, prefix + (v,))


def _iter_lp(rows, d, n, k, residual, prefix):
    if k == n:
        if all(r == 0 for r in residual):
            yield prefix
        return
    nrest = n - k
    cols = [[rows[i][j] for j in range(k, n)] for i in range(d)]
    a_ub = [[-1 if j == i else 0 for j in range(nrest)] for i in range(nrest)]
    res = solve_lp(
        [1] + [0] * (nrest - 1), a_ub, [0] * nrest, cols, list(residual), maximize=True
    )
    if res.status != OPTIMAL:
        return
    ub = int(res.value)  # floor of a nonnegative rational
    for v in range(ub + 1):
        nres = tuple(residual[i] - v * rows[i][k] for i in range(d))
        yield from _iter_lp(rows, d, n, k + 1, nres, prefix + (v,))


def fiber_first(rows, b):
    """Lexicographically first fiber point, or None when the fiber is empty.

    Deliberately independent of any cost vector, so it can seed optimization
    paths without biasing them.
    """
    for x in iter_fiber(rows, b):
        return x
    return None


def fiber_list(rows, b):
    return list(iter_fiber(rows, b))


def fiber_optimum(rows, cost, b, key=None):
    """Cost-minimal fiber point with lexicographic tie-break, or None.

    ``key`` overrides the default key (cost . x, x); it must map a point to a
    comparable tuple.
    """
    if key is None:
        key = lambda x: (dot(cost, x), x)
    best = None
    best_key = None
    for x in iter_fiber(rows, b):
        k = key(x)
        if best_key is None or k < best_key:
            best, best_key = x, k
    return best
