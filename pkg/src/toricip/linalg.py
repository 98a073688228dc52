"""Exact integer and rational linear algebra on plain tuples.

Matrices are sequences of rows; all arithmetic is over Python ints and
``fractions.Fraction``, so nothing here ever rounds.
"""

from fractions import Fraction
from math import gcd


def det_int(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows):
    """Rank over Q, by fraction Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def solve_exact(rows, rhs):
    """Solve ``rows @ x = rhs`` over Q.

    The matrix must have full column rank.  Returns the unique solution as a
    tuple of Fractions, or None when the system is inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    if r < n:
        raise ValueError("matrix does not have full column rank")
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = a[i][n]
    return tuple(x)


def _colop_combine(mat, j0, j1, x, y, z, w):
    """Columns (j0, j1) <- (x*j0 + y*j1, z*j0 + w*j1), in place."""
    for row in mat:
        a, b = row[j0], row[j1]
        row[j0] = x * a + y * b
        row[j1] = z * a + w * b


def kernel_basis(rows, n):
    """Basis of the saturated integer kernel {x in Z^n : rows @ x = 0}.

    Column-style Hermite reduction with a unimodular transform: A*U = [H | 0],
    so the trailing columns of U span the kernel lattice and the basis is
    automatically saturated.  Returns (basis_columns, rank).
    """
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cc = 0
    for r in range(len(a)):
        piv = next((j for j in range(cc, n) if a[r][j] != 0), None)
        if piv is None:
            continue
        if piv != cc:
            for row in a:
                row[cc], row[piv] = row[piv], row[cc]
            for row in u:
                row[cc], row[piv] = row[piv], row[cc]
        for j in range(cc + 1, n):
            if a[r][j] == 0:
                continue
            p, q = a[r][cc], a[r][j]
            g, x, y = _xgcd(p, q)
            _colop_combine(a, cc, j, x, y, -(q // g), p // g)
            _colop_combine(u, cc, j, x, y, -(q // g), p // g)
        cc += 1
    basis = [tuple(u[i][j] for i in range(n)) for j in range(cc, n)]
    return basis, cc


def _xgcd(a, b):
    """g, x, y with x*a + y*b = g = gcd(a, b), g > 0 for (a, b) != (0, 0)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_invariants(rows):
    """Nonzero invariant factors of an integer matrix (Smith normal form)."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    invariants = []
    top = 0
    while top < m and top < n:
        found = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] != 0:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i0, j0 = found
        a[top], a[i0] = a[i0], a[top]
        for row in a:
            row[top], row[j0] = row[j0], row[top]
        while True:
            # Euclid down the pivot column
            dirty = True
            while dirty:
                dirty = False
                for i in range(top + 1, m):
                    if a[i][top] != 0:
                        q = a[i][top] // a[top][top]
                        a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                        if a[i][top] != 0:
                            a[top], a[i] = a[i], a[top]
                            dirty = True
            # Euclid across the pivot row (may dirty the column again)
            dirty = True
            while dirty:
                dirty = False
                for j in range(top + 1, n):
                    if a[top][j] != 0:
                        q = a[top][j] // a[top][top]
                        for row in a:
                            row[j] -= q * row[top]
                        if a[top][j] != 0:
                            for row in a:
                                row[top], row[j] = row[j], row[top]
                            dirty = True
            if any(a[i][top] for i in range(top + 1, m)):
                continue
            if any(a[top][j] for j in range(top + 1, n)):
                continue
            # divisibility: the pivot must divide every remaining entry
            bad = None
            for i in range(top + 1, m):
                if any(a[i][j] % a[top][top] != 0 for j in range(top + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            a[top] = [x + y for x, y in zip(a[top], a[bad])]
        invariants.append(abs(a[top][top]))
        top += 1
    return invariants


def gcd_of_minors(rows, k):
    """gcd of the absolute values of all k x k minors."""
    from itertools import combinations

    m = len(rows)
    n = len(rows[0]) if m else 0
    g = 0
    for ri in combinations(range(m), k):
        sub = [rows[i] for i in ri]
        for ci in combinations(range(n), k):
            minor = det_int([[row[j] for j in ci] for row in sub])
            g = gcd(g, minor)
            if g == 1:
                return 1
    return g


def mat_vec(rows, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in rows)


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))
