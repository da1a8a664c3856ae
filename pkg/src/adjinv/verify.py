"""Independent oracles and defining-equation checkers.

Everything here validates the minor-sum results without sharing their code
path: the pseudoinverse oracle goes through a rank factorization obtained
from reduced row echelon form, with the two small inverses computed by
cofactor-expansion adjugates; the Drazin oracle composes powers with that
pseudoinverse.  Only the primitive matrix operations are reused.  All checks
are exact equalities; there is no tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Matrix, conjugate_transpose, hstack, multiply, power, rank
from .scalars import ONE, ZERO, Scalar


@dataclass(frozen=True)
class VerifyReport:
    """Named exact-equality checks, with the first failing residual as witness."""

    checks: tuple[tuple[str, bool], ...]
    witness: Matrix | None = None

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failed_names(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.checks if not ok)


def _run_checks(named_pairs) -> VerifyReport:
    checks = []
    witness = None
    for name, lhs, rhs in named_pairs:
        ok = lhs == rhs
        checks.append((name, ok))
        if not ok and witness is None:
            witness = lhs - rhs
    return VerifyReport(tuple(checks), witness)


def check_penrose(a: Matrix, x: Matrix) -> VerifyReport:
    """The four defining equations of the Moore-Penrose inverse, exactly."""
    if x.rows != a.cols or x.cols != a.rows:
        raise ValueError(
            f"candidate inverse must be {a.cols}x{a.rows}, got {x.rows}x{x.cols}"
        )
    ax = multiply(a, x)
    xa = multiply(x, a)
    return _run_checks(
        [
            ("AXA=A", multiply(ax, a), a),
            ("XAX=X", multiply(xa, x), x),
            ("(AX)*=AX", conjugate_transpose(ax), ax),
            ("(XA)*=XA", conjugate_transpose(xa), xa),
        ]
    )


def check_drazin(a: Matrix, x: Matrix, k: int) -> VerifyReport:
    """The three defining equations of the Drazin inverse at index k, exactly."""
    if not (a.is_square and x.is_square and a.rows == x.rows):
        raise ValueError(
            f"need square matrices of equal size, got {a.rows}x{a.cols} and {x.rows}x{x.cols}"
        )
    ak = power(a, k)
    return _run_checks(
        [
            ("A^(k+1)X=A^k", multiply(multiply(ak, a), x), ak),
            ("XAX=X", multiply(multiply(x, a), x), x),
            ("AX=XA", multiply(a, x), multiply(x, a)),
        ]
    )


def range_membership(b: Matrix, x: Matrix) -> bool:
    """True iff the column vector x lies in the column space of b."""
    if not (x.cols == 1 and x.rows == b.rows):
        raise ValueError(f"vector must be {b.rows}x1, got {x.rows}x{x.cols}")
    return rank(hstack(b, x)) == rank(b)


# -- cofactor-expansion determinant and adjugate inverse ------------------------
#
# Deliberately naive: expansion along the first row, no index-set enumeration,
# no shared code with the elimination kernel.  Fine for the small orders the
# oracles need.


def _det_cofactor(a: Matrix) -> Scalar:
    n = a.rows
    if n == 1:
        return a.at(0, 0)
    total = ZERO
    rest_rows = range(1, n)
    for j in range(n):
        lead = a.at(0, j)
        if not lead:
            continue
        sub = a.submatrix(rest_rows, [c for c in range(n) if c != j])
        term = lead * _det_cofactor(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def _inverse_adjugate(a: Matrix) -> Matrix:
    """Inverse of a nonsingular matrix via cofactor adjugate."""
    n = a.rows
    d = _det_cofactor(a)
    if not d:
        raise ZeroDivisionError("matrix is singular")
    if n == 1:
        return Matrix(1, 1, [ONE / d])
    entries = []
    for i in range(n):
        for j in range(n):
            sub = a.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i])
            cof = _det_cofactor(sub)
            entries.append(cof / d if (i + j) % 2 == 0 else -cof / d)
    return Matrix(n, n, entries)


def _rref(a: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form with the pivot column positions (0-based)."""
    rows = a.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        p = next((i for i in range(r, a.rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(a.rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [e - factor * rr for e, rr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def oracle_pinv(a: Matrix) -> Matrix:
    """Moore-Penrose inverse by rank factorization, independent of minor sums.

    Factor A = F G with F the pivot columns of A and G the nonzero rows of
    the reduced row echelon form; then A+ = G* (G G*)^-1 (F* F)^-1 F*.
    """
    if a.is_zero:
        raise ValueError("oracle_pinv needs a nonzero matrix")
    rows, pivots = _rref(a)
    r = len(pivots)
    f = a.submatrix(range(a.rows), pivots)
    g = Matrix(r, a.cols, [e for row in rows[:r] for e in row])
    fstar = conjugate_transpose(f)
    gstar = conjugate_transpose(g)
    middle = multiply(_inverse_adjugate(multiply(g, gstar)), _inverse_adjugate(multiply(fstar, f)))
    return multiply(multiply(gstar, middle), fstar)


def oracle_drazin(a: Matrix) -> Matrix:
    """Drazin inverse as a^k (a^(2k+1))+ a^k with the oracle pseudoinverse."""
    if not a.is_square:
        raise ValueError(f"Drazin oracle needs a square matrix, got {a.rows}x{a.cols}")
    # Index by rank iteration, using only the primitive operations.
    k = 0
    rank_prev = a.rows
    p = Matrix.identity(a.rows)
    while True:
        p = multiply(p, a)
        rank_next = rank(p)
        if rank_next == rank_prev:
            break
        rank_prev = rank_next
        k += 1
    ak = power(a, k)
    if ak.is_zero:
        return Matrix.zeros(a.rows, a.rows)
    return multiply(multiply(ak, oracle_pinv(power(a, 2 * k + 1))), ak)
