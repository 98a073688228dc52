"""Integer coefficient matrices and their kernel lattices.

The central object is :class:`IntMatrix`, the d x n integer matrix whose
columns generate the cone and the semigroup behind a family of integer
programs.  Construction enforces the structural assumptions the whole theory
rests on: full row rank and a kernel meeting the nonnegative orthant only at
the origin (which also forces the cone to be pointed and every program in the
family to be bounded).
"""

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .errors import BadIndex, RankDeficient, UnboundedFamily
from .linprog import lp_feasible


@dataclass(frozen=True)
class IntMatrix:
    """A d x n integer matrix of full row rank with pointed column cone."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise RankDeficient("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise RankDeficient("ragged rows")
        if linalg.rank(rows) < len(rows):
            raise RankDeficient(f"rank below {len(rows)}")
        if self._kernel_meets_orthant():
            raise UnboundedFamily("kernel of A meets the nonnegative orthant")

    def _kernel_meets_orthant(self):
        # feasibility of {x >= 0, Ax = 0, sum x = 1}, exactly
        n = self.n
        a_ub = [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
        b_ub = [0] * n
        a_eq = [list(r) for r in self.entries] + [[1] * n]
        b_eq = [0] * self.d + [1]
        return lp_feasible(a_ub, b_ub, a_eq, b_eq)

    @property
    def d(self):
        return len(self.entries)

    @property
    def n(self):
        return len(self.entries[0])

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self, idx):
        """Submatrix A_sigma as rows, for 0-based column indices."""
        return tuple(tuple(row[j] for j in idx) for row in self.entries)

    def apply(self, x):
        return linalg.mat_vec(self.entries, x)

    def __str__(self):
        head = f"{self.d} {self.n}"
        return "\n".join([head] + [" ".join(str(v) for v in r) for r in self.entries])


@dataclass(frozen=True)
class LatticeBasis:
    """n x (n-d) integer basis of the saturated kernel lattice of A."""

    matrix: tuple  # n rows, n-d columns
    source: IntMatrix

    @property
    def n(self):
        return len(self.matrix)

    @property
    def corank(self):
        return len(self.matrix[0]) if self.matrix and self.matrix[0] else 0

    def columns(self):
        return [tuple(self.matrix[i][k] for i in range(self.n)) for k in range(self.corank)]

    def rows_without(self, tau):
        """B^{tau-bar}: the rows of B with indices outside tau (0-based)."""
        drop = set(tau)
        return tuple(self.matrix[i] for i in range(self.n) if i not in drop)

    def apply(self, z):
        """B z, as a length-n integer vector."""
        return tuple(linalg.dot(row, z) for row in self.matrix)


def kernel_lattice_basis(a: IntMatrix) -> LatticeBasis:
    """Basis B of the saturated lattice {x in Z^n : A x = 0}, A B = 0.

    The basis comes from a unimodular column reduction of A, so its column
    lattice is saturated by construction; both facts are re-verified before
    returning (A B = 0 entrywise, Smith invariants of B all 1).
    """
    cols, rk = linalg.kernel_basis(a.entries, a.n)
    if rk < a.d:
        raise RankDeficient("rank below row count")
    bmat = tuple(tuple(col[i] for col in cols) for i in range(a.n))
    for col in cols:
        if any(v != 0 for v in a.apply(col)):
            raise AssertionError("kernel basis failed A B = 0")
    if cols and any(s != 1 for s in linalg.smith_invariants(bmat)):
        raise AssertionError("kernel basis not saturated")
    return LatticeBasis(bmat, a)


@lru_cache(maxsize=256)
def cached_kernel_basis(a: IntMatrix) -> LatticeBasis:
    return kernel_lattice_basis(a)


def gcd_maximal_minors(a: IntMatrix) -> int:
    """gcd of the absolute values of all d x d minors of A (positive)."""
    return linalg.gcd_of_minors(a.entries, a.d)


def face_determinant(a: IntMatrix, sigma) -> int:
    """|det(A_sigma)| for a 0-based column set sigma with |sigma| = d."""
    sigma = tuple(sorted(sigma))
    if len(sigma) != a.d or len(set(sigma)) != len(sigma):
        raise BadIndex(f"need {a.d} distinct column indices")
    if any(j < 0 or j >= a.n for j in sigma):
        raise BadIndex("column index out of range")
    return abs(linalg.det_int(a.columns(sigma)))
