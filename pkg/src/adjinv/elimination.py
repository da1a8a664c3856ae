"""Fraction-free elimination kernels shared by rank and minor evaluation.

Each row is first cleared to a common denominator so every entry becomes a
Gaussian integer, held as a plain ``(re, im)`` pair of Python ints.  Bareiss
cross-multiplication then keeps all intermediate values integral and every
division exact, which bounds entry growth without ever leaving exact
arithmetic.  Pivots are the first nonzero entry in column scan order; with
exact arithmetic the pivot choice is correctness-neutral.
"""

from __future__ import annotations

from math import lcm

Pair = tuple[int, int]

_ZERO: Pair = (0, 0)
_ONE: Pair = (1, 0)


def integerize(rows) -> tuple[list[list[Pair]], int]:
    """Scale each row of Scalars to Gaussian integers.

    Returns the integer rows and the product of the per-row multipliers;
    the determinant of the scaled matrix is that product times the original
    determinant, while the rank is unchanged.
    """
    out = []
    scale = 1
    for row in rows:
        mult = 1
        for s in row:
            mult = lcm(mult, s.re.denominator, s.im.denominator)
        out.append([(int(s.re * mult), int(s.im * mult)) for s in row])
        scale *= mult
    return out, scale


def _mul(x: Pair, y: Pair) -> Pair:
    a, b = x
    c, d = y
    if b == 0 and d == 0:
        return (a * c, 0)
    return (a * c - b * d, a * d + b * c)


def _div_exact(x: Pair, y: Pair) -> Pair:
    # Exact Gaussian-integer division; Bareiss guarantees divisibility,
    # and the divmod check turns any violation into a loud failure.
    a, b = x
    c, d = y
    if d == 0:
        qr, rr = divmod(a, c)
        qi, ri = divmod(b, c)
    else:
        n2 = c * c + d * d
        qr, rr = divmod(a * c + b * d, n2)
        qi, ri = divmod(b * c - a * d, n2)
    if rr or ri:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (qr, qi)


def det_pairs(a: list[list[Pair]], n: int) -> Pair:
    """Determinant of an n x n Gaussian-integer matrix (mutates ``a``)."""
    if n == 1:
        return a[0][0]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k] != _ZERO), None)
        if pivot_row is None:
            return _ZERO
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        top = a[k]
        for i in range(k + 1, n):
            row = a[i]
            lead = row[k]
            for j in range(k + 1, n):
                row[j] = _div_exact(
                    _sub(_mul(pivot, row[j]), _mul(lead, top[j])), prev
                )
            row[k] = _ZERO
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign == 1 else (-d[0], -d[1])


def rank_pairs(a: list[list[Pair]], m: int, n: int) -> int:
    """Rank of an m x n Gaussian-integer matrix (mutates ``a``)."""
    prev = _ONE
    r = 0
    for col in range(n):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if a[i][col] != _ZERO), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        top = a[r]
        for i in range(r + 1, m):
            row = a[i]
            lead = row[col]
            # Rows with a zero lead still get the pivot/prev rescale; that is
            # what keeps every later division exact.
            for j in range(col + 1, n):
                row[j] = _div_exact(
                    _sub(_mul(pivot, row[j]), _mul(lead, top[j])), prev
                )
            row[col] = _ZERO
        prev = pivot
        r += 1
    return r


def _sub(x: Pair, y: Pair) -> Pair:
    return (x[0] - y[0], x[1] - y[1])
