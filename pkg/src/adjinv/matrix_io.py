"""Matrix file parsing and exact or decimal output formatting.

File format: the first data line holds ``m n``; the next m data lines hold n
whitespace-separated scalar tokens.  ``#`` starts a comment to end of line
and blank lines are ignored.  Decimal tokens are exact base-10 rationals.
Rational-mode output is itself a valid matrix file, so formatting and parsing
round-trip exactly.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix
from .scalars import Scalar, ScalarParseError, parse_scalar


class MatrixFormatError(ValueError):
    """A malformed matrix file; carries 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class OutputFormat:
    """Display settings: exact rationals by default, decimal opt-in.

    Decimal mode is display-only; values remain exact internally.
    """

    decimal_digits: int | None = None
    json_layout: bool = False


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def parse_matrix_text(text: str) -> Matrix:
    """Parse matrix-file content from a string."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MatrixFormatError("empty input: expected a dimensions header", 1) from None
    fields = header.split()
    if len(fields) != 2:
        raise MatrixFormatError(
            f"header must be two integers 'm n', got {len(fields)} tokens", lineno
        )
    try:
        m, n = int(fields[0]), int(fields[1])
    except ValueError:
        raise MatrixFormatError(f"header must be two integers 'm n', got {header.strip()!r}", lineno) from None
    if m < 1 or n < 1:
        raise MatrixFormatError(f"dimensions must be positive, got {m} x {n}", lineno)
    entries: list[Scalar] = []
    rows_seen = 0
    last_line = lineno
    for lineno, body in lines:
        last_line = lineno
        if rows_seen == m:
            raise MatrixFormatError(f"extra data beyond the declared {m} rows", lineno)
        tokens = _tokens_with_columns(body)
        if len(tokens) != n:
            raise MatrixFormatError(
                f"expected {n} entries in this row, got {len(tokens)}", lineno
            )
        for column, token in tokens:
            try:
                entries.append(parse_scalar(token))
            except ScalarParseError as exc:
                raise MatrixFormatError(
                    f"bad scalar token {token!r}: {exc}", lineno, column + exc.offset
                ) from None
        rows_seen += 1
    if rows_seen != m:
        raise MatrixFormatError(f"expected {m} data rows, found {rows_seen}", last_line + 1)
    return Matrix(m, n, entries)


def _tokens_with_columns(body: str) -> list[tuple[int, str]]:
    tokens = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < len(body) and not body[pos].isspace():
            pos += 1
        tokens.append((start + 1, body[start:pos]))
    return tokens


def parse_matrix_file(source) -> Matrix:
    """Parse a matrix from a path or a readable text stream."""
    if hasattr(source, "read"):
        return parse_matrix_text(source.read())
    with io.open(os.fspath(source), "r", encoding="utf-8") as handle:
        return parse_matrix_text(handle.read())


# -- formatting -----------------------------------------------------------------


def _decimal_fraction(q: Fraction, digits: int) -> str:
    scaled = round(q * 10**digits)  # round half to even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def format_scalar(s: Scalar, decimal_digits: int | None = None) -> str:
    """One scalar token: reduced rational by default, fixed decimals on request."""
    if decimal_digits is None:
        return str(s)
    if not s:
        return "0"
    if not s.im:
        return _decimal_fraction(s.re, decimal_digits)
    if not s.re:
        return _decimal_fraction(s.im, decimal_digits) + "i"
    sign = "+" if s.im > 0 else "-"
    return f"{_decimal_fraction(s.re, decimal_digits)}{sign}{_decimal_fraction(abs(s.im), decimal_digits)}i"


def format_matrix(a: Matrix, decimal_digits: int | None = None) -> str:
    """Matrix-file text: the 'm n' header plus one line of tokens per row."""
    lines = [f"{a.rows} {a.cols}"]
    for i in range(a.rows):
        lines.append(" ".join(format_scalar(e, decimal_digits) for e in a.row(i)))
    return "\n".join(lines)


def matrix_tokens(a: Matrix, decimal_digits: int | None = None) -> list[list[str]]:
    return [
        [format_scalar(e, decimal_digits) for e in a.row(i)] for i in range(a.rows)
    ]


def format_output(value, fmt: OutputFormat = OutputFormat()) -> str:
    """Render a Matrix, Scalar, int, or sequence of Scalars under ``fmt``."""
    if fmt.json_layout:
        return json.dumps(_json_value(value))
    if isinstance(value, Matrix):
        return format_matrix(value, fmt.decimal_digits)
    if isinstance(value, Scalar):
        return format_scalar(value, fmt.decimal_digits)
    if isinstance(value, int):
        return str(value)
    return " ".join(format_scalar(s, fmt.decimal_digits) for s in value)


def _json_value(value):
    if isinstance(value, Matrix):
        return {"rows": value.rows, "cols": value.cols, "entries": matrix_tokens(value)}
    if isinstance(value, Scalar):
        return {"value": str(value)}
    if isinstance(value, int):
        return {"value": str(value)}
    return {"values": [str(s) for s in value]}
