"""Cramer-style solvers built on the minor-sum representations.

``lsq_solve`` returns the minimal-norm least squares solution of A x = y.
With full column rank it is a determinant ratio over the Gram matrix A*A and
the transformed right side f = A* y ("eq13", the direct generalization of
Cramer's rule); otherwise each component is a minor sum over the
column-replaced Gram matrix divided by the order-r principal-minor sum
("eq14").  ``lsq_solve_row_system`` solves the row form x A = y the same way
with AA* and g = y A*.

``drazin_solve`` returns the Drazin-inverse solution of a square system:
the unique solution of the generalized normal equations A^(k+1) x = A^k y
lying in the range of A^k, computed componentwise from minors of A^(k+1)
with g = A^k y as the replacement column ("eq16"; for a nonsingular matrix
this degenerates to the classical Cramer rule).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import minors
from ._parallel import parallel_map
from .index_sets import enumerate_containing
from .matrices import (
    Matrix,
    column_vector,
    conjugate_transpose,
    multiply,
    power,
    rank,
    replace_column,
    replace_row,
    row_vector,
)
from .scalars import ONE, ZERO, Scalar
from .drazin import index_of


@dataclass(frozen=True)
class SolveReport:
    """A solution vector plus the numerator/denominator ledger behind it.

    ``solution[j] * denominator == numerators[j]`` componentwise and the
    denominator is never zero.  ``transformed_rhs`` is the right side the
    formulas actually consume (A* y, y A*, or A^k y).
    """

    solution: Matrix
    method: str  # eq13 | eq14 | row_eq_fullrank | row_eq_general | eq16 | classical_cramer
    denominator: Scalar
    numerators: tuple[Scalar, ...]
    transformed_rhs: Matrix


def lsq_solve(a: Matrix, y: Matrix, threads: int = 1) -> SolveReport:
    """Minimal-norm least squares solution of A x = y (y is m x 1)."""
    if not (y.cols == 1 and y.rows == a.rows):
        raise ValueError(f"right side must be {a.rows}x1, got {y.rows}x{y.cols}")
    n = a.cols
    astar = conjugate_transpose(a)
    f = multiply(astar, y)
    r = rank(a)
    if r == 0:
        # Zero system: the minimal-norm least squares solution is zero.  The
        # general formula degenerates cleanly (empty minor sums over an
        # order-0 family, with the empty principal-minor sum taken as 1).
        return SolveReport(Matrix.zeros(n, 1), "eq14", ONE, (ZERO,) * n, f)
    gram = multiply(astar, a)
    fcol = f.column(0)
    if r == n:
        denom = minors.det(gram)
        nums = parallel_map(
            lambda j: minors.det(replace_column(gram, j, fcol)), range(1, n + 1), threads
        )
        method = "eq13"
    else:
        denom = minors.principal_minor_sum(gram, r)

        def component(j: int) -> Scalar:
            replaced = replace_column(gram, j, fcol)
            total = ZERO
            for beta in enumerate_containing(r, n, j):
                total = total + minors.minor(replaced, beta, beta)
            return total

        nums = parallel_map(component, range(1, n + 1), threads)
        method = "eq14"
    solution = column_vector([v / denom for v in nums])
    return SolveReport(solution, method, denom, tuple(nums), f)


def lsq_solve_row_system(y: Matrix, a: Matrix, threads: int = 1) -> SolveReport:
    """Minimal-norm least squares solution of the row system x A = y (y is 1 x n)."""
    if not (y.rows == 1 and y.cols == a.cols):
        raise ValueError(f"right side must be 1x{a.cols}, got {y.rows}x{y.cols}")
    m = a.rows
    astar = conjugate_transpose(a)
    g = multiply(y, astar)
    r = rank(a)
    if r == 0:
        return SolveReport(Matrix.zeros(1, m), "row_eq_general", ONE, (ZERO,) * m, g)
    gram = multiply(a, astar)
    grow = g.row(0)
    if r == m:
        denom = minors.det(gram)
        nums = parallel_map(
            lambda i: minors.det(replace_row(gram, i, grow)), range(1, m + 1), threads
        )
        method = "row_eq_fullrank"
    else:
        denom = minors.principal_minor_sum(gram, r)

        def component(i: int) -> Scalar:
            replaced = replace_row(gram, i, grow)
            total = ZERO
            for alpha in enumerate_containing(r, m, i):
                total = total + minors.minor(replaced, alpha, alpha)
            return total

        nums = parallel_map(component, range(1, m + 1), threads)
        method = "row_eq_general"
    solution = row_vector([v / denom for v in nums])
    return SolveReport(solution, method, denom, tuple(nums), g)


def drazin_solve(a: Matrix, y: Matrix, threads: int = 1) -> SolveReport:
    """Drazin-inverse solution of a square system A x = y.

    Satisfies the generalized normal equations A^(k+1) x = A^k y exactly and
    lies in the range of A^k (k = index of A); equals drazin_inverse(a) @ y.
    """
    if not a.is_square:
        raise ValueError(f"Drazin solution needs a square matrix, got {a.rows}x{a.cols}")
    if not (y.cols == 1 and y.rows == a.rows):
        raise ValueError(f"right side must be {a.rows}x1, got {y.rows}x{y.cols}")
    n = a.rows
    k = index_of(a)
    ak = power(a, k)
    g = multiply(ak, y)
    r = rank(ak)
    if r == 0:
        return SolveReport(Matrix.zeros(n, 1), "eq16", ONE, (ZERO,) * n, g)
    b = power(a, k + 1)
    denom = minors.principal_minor_sum(b, r)
    gcol = g.column(0)

    def component(i: int) -> Scalar:
        replaced = replace_column(b, i, gcol)
        total = ZERO
        for beta in enumerate_containing(r, n, i):
            total = total + minors.minor(replaced, beta, beta)
        return total

    nums = parallel_map(component, range(1, n + 1), threads)
    solution = column_vector([v / denom for v in nums])
    method = "classical_cramer" if k == 0 else "eq16"
    return SolveReport(solution, method, denom, tuple(nums), g)
