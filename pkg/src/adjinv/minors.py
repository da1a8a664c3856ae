"""Minor evaluation, principal-minor sums, and characteristic coefficients.

This is the computational kernel shared by the generalized-inverse
representations and the Cramer-style solvers.  A minor is the exact
determinant of the submatrix selected by two strictly increasing 1-based
index sequences; sums of principal minors of a fixed order give the
characteristic-polynomial coefficients.

Determinants go through fraction-free Bareiss elimination on an extracted
copy of the submatrix: cubic in the minor order, versus exponential cofactor
expansion (which the test suite keeps only as a small-case oracle).
"""

from __future__ import annotations

from fractions import Fraction

from . import elimination
from .index_sets import enumerate_k_subsets
from .matrices import Matrix
from .scalars import ZERO, Scalar


def _check_index_seq(seq, limit: int, what: str) -> tuple[int, ...]:
    seq = tuple(seq)
    for t, value in enumerate(seq):
        if not 1 <= value <= limit:
            raise ValueError(f"{what} index {value} outside 1..{limit}")
        if t and seq[t - 1] >= value:
            raise ValueError(f"{what} indices must be strictly increasing, got {seq}")
    return seq


def minor(a: Matrix, alpha, beta) -> Scalar:
    """Exact determinant of the submatrix with rows ``alpha``, columns ``beta``.

    Both index sequences are 1-based, strictly increasing, and must have the
    same length.
    """
    alpha = _check_index_seq(alpha, a.rows, "row")
    beta = _check_index_seq(beta, a.cols, "column")
    if len(alpha) != len(beta):
        raise ValueError(f"selection is not square: {len(alpha)} rows, {len(beta)} columns")
    if not alpha:
        raise ValueError("empty index selection")
    sub = a.submatrix([i - 1 for i in alpha], [j - 1 for j in beta])
    return _det(sub)


def det(a: Matrix) -> Scalar:
    """Determinant of a square matrix."""
    if not a.is_square:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    return _det(a)


def _det(a: Matrix) -> Scalar:
    pairs, scale = elimination.integerize(a.row_lists())
    re, im = elimination.det_pairs(pairs, a.rows)
    return Scalar(Fraction(re, scale), Fraction(im, scale))


def principal_minor_sum(a: Matrix, k: int) -> Scalar:
    """Sum of all order-k principal minors of a square matrix."""
    if not a.is_square:
        raise ValueError(f"principal minors need a square matrix, got {a.rows}x{a.cols}")
    if not 1 <= k <= a.rows:
        raise ValueError(f"minor order {k} outside 1..{a.rows}")
    total = ZERO
    for beta in enumerate_k_subsets(k, a.rows):
        total = total + minor(a, beta, beta)
    return total


def char_poly_coeffs(a: Matrix) -> tuple[Scalar, ...]:
    """Coefficients d_1 .. d_n with det(tI - a) = t^n - d_1 t^(n-1) + ... + (-1)^n d_n.

    d_k is the sum of all order-k principal minors.
    """
    if not a.is_square:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {a.rows}x{a.cols}")
    return tuple(principal_minor_sum(a, k) for k in range(1, a.rows + 1))


def adjugate(a: Matrix) -> Matrix:
    """Classical adjugate: adjugate(a) @ a == det(a) * identity."""
    if not a.is_square:
        raise ValueError(f"adjugate needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 1:
        return Matrix.identity(1)
    entries = []
    all_indices = range(1, n + 1)
    for i in all_indices:
        for j in all_indices:
            # adjugate(i, j) is the (j, i) cofactor: delete row j, column i.
            alpha = tuple(r for r in all_indices if r != j)
            beta = tuple(c for c in all_indices if c != i)
            cof = minor(a, alpha, beta)
            entries.append(cof if (i + j) % 2 == 0 else -cof)
    return Matrix(n, n, entries)
