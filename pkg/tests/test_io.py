import io
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adjinv import (
    Matrix,
    MatrixFormatError,
    OutputFormat,
    Scalar,
    format_matrix,
    format_output,
    format_scalar,
    parse_matrix_file,
    parse_matrix_text,
    rank,
)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=16)
scalars = st.builds(Scalar, rationals, rationals)


def bundled(name: str):
    return resources.files("adjinv").joinpath("data").joinpath(name)


def test_bundled_example_files(example1, example2):
    with resources.as_file(bundled("example1.mat")) as path:
        loaded = parse_matrix_file(path)
    assert loaded == example1
    assert rank(loaded) == 3
    with bundled("example2.mat").open("r") as handle:
        assert parse_matrix_file(handle) == example2


def test_parse_single_entry():
    assert parse_matrix_text("1 1\n5") == Matrix(1, 1, [5])


def test_parse_comments_and_blank_lines():
    text = "# heading\n\n2 2 # dims\n1 2\n\n# middle\n3 4.5\n"
    m = parse_matrix_text(text)
    assert m == Matrix.from_rows([[1, 2], [3, Fraction(9, 2)]])


def test_ragged_row_error_line_number():
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix_text("2 2\n1 2\n3")
    assert err.value.line == 3
    assert "expected 2 entries" in str(err.value)


def test_missing_rows_error():
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix_text("3 2\n1 2\n3 4\n")
    assert "expected 3 data rows" in str(err.value)


def test_extra_rows_error():
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix_text("1 2\n1 2\n3 4\n")
    assert err.value.line == 3


def test_bad_token_diagnostic_has_line_and_column():
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix_text("2 2\n1 2\n3 4x\n")
    assert err.value.line == 3
    assert err.value.column == 4  # the 'x' inside the second token
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix_text("2 2\n1 1e5\n3 4\n")
    assert err.value.line == 2


def test_header_errors():
    for text, fragment in [
        ("", "empty input"),
        ("2\n1 2\n", "header"),
        ("a b\n", "header"),
        ("0 2\n", "positive"),
    ]:
        with pytest.raises(MatrixFormatError) as err:
            parse_matrix_text(text)
        assert fragment in str(err.value)


def test_parse_from_stream(example1):
    stream = io.StringIO(format_matrix(example1))
    assert parse_matrix_file(stream) == example1


@settings(max_examples=30)
@given(
    st.integers(1, 3).flatmap(
        lambda m: st.integers(1, 3).flatmap(
            lambda n: st.lists(scalars, min_size=m * n, max_size=m * n).map(
                lambda entries: Matrix(m, n, entries)
            )
        )
    )
)
def test_round_trip_rational_output(matrix):
    assert parse_matrix_text(format_matrix(matrix)) == matrix


def test_decimal_formatting():
    assert format_scalar(Scalar(Fraction(12193, 17010)), 6) == "0.716814"
    assert format_scalar(Scalar(Fraction(3, 2))) == "3/2"
    assert format_scalar(Scalar(0), 6) == "0"
    assert format_scalar(Scalar(0)) == "0"
    assert format_scalar(Scalar(Fraction(-1, 3)), 3) == "-0.333"
    assert format_scalar(Scalar(2), 2) == "2.00"
    assert format_scalar(Scalar(Fraction(1, 2), Fraction(-1, 4)), 2) == "0.50-0.25i"


def test_decimal_rounds_half_to_even():
    assert format_scalar(Scalar(Fraction(1, 8)), 2) == "0.12"  # 0.125 -> even
    assert format_scalar(Scalar(Fraction(3, 8)), 2) == "0.38"  # 0.375 -> even
    assert format_scalar(Scalar(Fraction(-1, 8)), 2) == "-0.12"


def test_format_output_modes(example2):
    plain = format_output(example2)
    assert plain.splitlines()[0] == "4 4"
    as_json = format_output(example2, OutputFormat(json_layout=True))
    assert '"rows": 4' in as_json
    assert format_output(Scalar(Fraction(5, 9))) == "5/9"
    assert format_output(7) == "7"
    assert format_output((Scalar(1), Scalar(Fraction(1, 2)))) == "1 1/2"


def test_complex_tokens_round_trip():
    m = Matrix.from_rows([["2+3i", "-1/3i"], ["1.5-2/3i", 0]])
    assert parse_matrix_text(format_matrix(m)) == m
