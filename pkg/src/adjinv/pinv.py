"""Moore-Penrose inverse by adjugate-analogue minor sums.

Two equivalent representations are implemented.  The column form ("eq1")
divides minor sums of the column-replaced Gram matrix A*A by the sum of its
order-r principal minors; the row form ("eq2") does the dual with AA*.  The
numerator matrices L and R generalize the classical adjugate: L @ A equals
the denominator times the projector A+ A, exactly as adjugate(A) @ A equals
det(A) times the identity.

``mp_inverse`` dispatches on rank: square nonsingular matrices go through the
classical adjugate ("classical_inverse"), full-column-rank ones through the
determinant form of (A*A)^-1 A* ("eq6"), full-row-rank ones through its dual
("eq7"), and everything else through whichever minor-sum form evaluates fewer
determinants.  The projector operations compute A+ A and A A+ directly from
minor sums over replaced Gram matrices, without forming A+ first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import minors
from ._parallel import parallel_map
from .index_sets import enumerate_containing
from .matrices import (
    Matrix,
    conjugate_transpose,
    multiply,
    rank,
    replace_column,
    replace_row,
)
from .scalars import ONE, ZERO, Scalar


class ZeroMatrixError(ValueError):
    """The minor-sum representations need a nonzero matrix."""


@dataclass(frozen=True)
class PinvResult:
    """A Moore-Penrose inverse together with its minor-sum ledger.

    ``pseudo_inverse`` is n x m.  For the "eq1" / "eq2" representations every
    entry times ``denominator`` equals the corresponding ``numerators`` entry;
    the denominator is the order-r principal-minor sum of the Gram matrix
    used and is never zero.
    """

    pseudo_inverse: Matrix
    denominator: Scalar
    numerators: Matrix
    representation_used: str  # eq1 | eq2 | eq6 | eq7 | classical_inverse | zero


def _require_nonzero(a: Matrix) -> None:
    if a.is_zero:
        raise ZeroMatrixError("zero matrix: minor-sum representation undefined, use mp_inverse")


def mp_inverse_columns(a: Matrix, threads: int = 1) -> PinvResult:
    """Column representation: entries l_ij / d_r(A*A) ("eq1")."""
    _require_nonzero(a)
    r = rank(a)
    astar = conjugate_transpose(a)
    gram = multiply(astar, a)
    denom = minors.principal_minor_sum(gram, r)
    if not denom:
        raise ArithmeticError("principal-minor sum of A*A at the rank order vanished; this is a bug")
    n, m = a.cols, a.rows

    def numerator(ij: tuple[int, int]) -> Scalar:
        i, j = ij
        replaced = replace_column(gram, i, astar.column(j - 1))
        total = ZERO
        for beta in enumerate_containing(r, n, i):
            total = total + minors.minor(replaced, beta, beta)
        return total

    nums = parallel_map(numerator, [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)], threads)
    numerators = Matrix(n, m, nums)
    inverse = numerators * (ONE / denom)
    return PinvResult(inverse, denom, numerators, "eq1")


def mp_inverse_rows(a: Matrix, threads: int = 1) -> PinvResult:
    """Row representation: entries r_ij / d_r(AA*) ("eq2")."""
    _require_nonzero(a)
    r = rank(a)
    astar = conjugate_transpose(a)
    gram = multiply(a, astar)
    denom = minors.principal_minor_sum(gram, r)
    if not denom:
        raise ArithmeticError("principal-minor sum of AA* at the rank order vanished; this is a bug")
    n, m = a.cols, a.rows

    def numerator(ij: tuple[int, int]) -> Scalar:
        i, j = ij
        replaced = replace_row(gram, j, astar.row(i - 1))
        total = ZERO
        for alpha in enumerate_containing(r, m, j):
            total = total + minors.minor(replaced, alpha, alpha)
        return total

    nums = parallel_map(numerator, [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)], threads)
    numerators = Matrix(n, m, nums)
    inverse = numerators * (ONE / denom)
    return PinvResult(inverse, denom, numerators, "eq2")


def mp_inverse(a: Matrix, method: str = "auto", threads: int = 1) -> PinvResult:
    """Moore-Penrose inverse of any matrix, choosing the cheapest representation.

    ``method`` forces "eq1" or "eq2"; "auto" dispatches on rank as described
    in the module docstring.  The zero matrix short-circuits to the zero
    inverse, the unique solution of the defining equations.
    """
    if method not in ("auto", "eq1", "eq2"):
        raise ValueError(f"unknown method {method!r}, expected eq1, eq2, or auto")
    m, n = a.rows, a.cols
    if a.is_zero:
        zero = Matrix.zeros(n, m)
        return PinvResult(zero, ONE, zero, "zero")
    if method == "eq1":
        return mp_inverse_columns(a, threads)
    if method == "eq2":
        return mp_inverse_rows(a, threads)
    r = rank(a)
    if r == n == m:
        d = minors.det(a)
        adj = minors.adjugate(a)
        return PinvResult(adj * (ONE / d), d, adj, "classical_inverse")
    astar = conjugate_transpose(a)
    if r == n < m:
        gram = multiply(astar, a)
        d = minors.det(gram)

        def entry6(ij: tuple[int, int]) -> Scalar:
            i, j = ij
            return minors.det(replace_column(gram, i, astar.column(j - 1)))

        nums = parallel_map(entry6, [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)], threads)
        numerators = Matrix(n, m, nums)
        return PinvResult(numerators * (ONE / d), d, numerators, "eq6")
    if r == m < n:
        gram = multiply(a, astar)
        d = minors.det(gram)

        def entry7(ij: tuple[int, int]) -> Scalar:
            i, j = ij
            return minors.det(replace_row(gram, j, astar.row(i - 1)))

        nums = parallel_map(entry7, [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)], threads)
        numerators = Matrix(n, m, nums)
        return PinvResult(numerators * (ONE / d), d, numerators, "eq7")
    # Rank-deficient both ways: pick the form that evaluates fewer minors,
    # C(n-1, r-1) versus C(m-1, r-1) per entry; ties go to the column form.
    if comb(n - 1, r - 1) <= comb(m - 1, r - 1):
        return mp_inverse_columns(a, threads)
    return mp_inverse_rows(a, threads)


def projector_p(a: Matrix, threads: int = 1) -> Matrix:
    """The projector A+ A (n x n, Hermitian, idempotent).

    Computed by minor sums over column-replaced A*A whenever the rank is
    deficient on the column side (r < min(m, n) or r = m < n); otherwise
    A+ A is the identity-like product and is formed directly.
    """
    m, n = a.rows, a.cols
    if a.is_zero:
        return Matrix.zeros(n, n)
    r = rank(a)
    if r < min(m, n) or (r == m and m < n):
        astar = conjugate_transpose(a)
        gram = multiply(astar, a)
        denom = minors.principal_minor_sum(gram, r)

        def entry(ij: tuple[int, int]) -> Scalar:
            i, j = ij
            replaced = replace_column(gram, i, gram.column(j - 1))
            total = ZERO
            for beta in enumerate_containing(r, n, i):
                total = total + minors.minor(replaced, beta, beta)
            return total

        nums = parallel_map(entry, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)], threads)
        return Matrix(n, n, nums) * (ONE / denom)
    return multiply(mp_inverse(a, threads=threads).pseudo_inverse, a)


def projector_q(a: Matrix, threads: int = 1) -> Matrix:
    """The projector A A+ (m x m, Hermitian, idempotent).

    Dual of :func:`projector_p`: minor sums over row-replaced AA* whenever
    r < min(m, n) or r = n < m, else the direct product.
    """
    m, n = a.rows, a.cols
    if a.is_zero:
        return Matrix.zeros(m, m)
    r = rank(a)
    if r < min(m, n) or (r == n and n < m):
        astar = conjugate_transpose(a)
        gram = multiply(a, astar)
        denom = minors.principal_minor_sum(gram, r)

        def entry(ij: tuple[int, int]) -> Scalar:
            i, j = ij
            replaced = replace_row(gram, j, gram.row(i - 1))
            total = ZERO
            for alpha in enumerate_containing(r, m, j):
                total = total + minors.minor(replaced, alpha, alpha)
            return total

        nums = parallel_map(entry, [(i, j) for i in range(1, m + 1) for j in range(1, m + 1)], threads)
        return Matrix(m, m, nums) * (ONE / denom)
    return multiply(a, mp_inverse(a, threads=threads).pseudo_inverse)
