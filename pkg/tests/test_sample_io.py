#!/usr/bin/env python3
"""
Unit tests for CSV reading and writing of signals.
"""
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from cblue.blue_errors import CsvFormatError, SampleError
from cblue.example_table import EXAMPLE_VALUES
from cblue.model_samples import SampleSet
from cblue.sample_io import read_samples_csv, write_samples_csv


def test_reads_reference_signal(example_csv: Path) -> None:
    """Test the reference file reads back in file order."""
    samples = read_samples_csv(example_csv)
    assert samples.count == 11
    assert list(samples.abscissas) == [float(i) for i in range(1, 12)]
    assert tuple(samples.values) == EXAMPLE_VALUES


def test_comments_and_blank_lines_ignored(write_csv: Callable[..., Path]) -> None:
    """Test comment and blank lines anywhere are skipped."""
    path = write_csv("# header comment\n\nx,v\n1.0,2.5\n\n# middle\n2.0, 3.5\n")
    samples = read_samples_csv(path)
    assert list(samples.abscissas) == [1.0, 2.0]
    assert list(samples.values) == [2.5, 3.5]


def test_malformed_value_reports_line(write_csv: Callable[..., Path]) -> None:
    """Test a non-numeric field is reported with its physical line number."""
    path = write_csv("# c\nx,v\n1,2\n2,abc\n")
    with pytest.raises(CsvFormatError, match=r":4: malformed v value 'abc'"):
        read_samples_csv(path)


def test_missing_field_reports_line(write_csv: Callable[..., Path]) -> None:
    """Test an empty field is malformed."""
    path = write_csv("x,v\n1,2\n\n3,\n")
    with pytest.raises(CsvFormatError, match=r":4: malformed v value"):
        read_samples_csv(path)


def test_non_finite_value_rejected(write_csv: Callable[..., Path]) -> None:
    """Test nan and inf fields are rejected."""
    path = write_csv("x,v\nnan,2\n")
    with pytest.raises(CsvFormatError, match=r":2: non-finite x value"):
        read_samples_csv(path)


def test_wrong_header_rejected(write_csv: Callable[..., Path]) -> None:
    """Test the header must be x,v."""
    path = write_csv("# c\nt,y\n1,2\n")
    with pytest.raises(CsvFormatError, match=r":2: header must be x,v"):
        read_samples_csv(path)


def test_empty_file_rejected(write_csv: Callable[..., Path]) -> None:
    """Test a file with only comments has no header."""
    with pytest.raises(CsvFormatError, match="no header"):
        read_samples_csv(write_csv("# nothing here\n"))


def test_header_without_records_rejected(write_csv: Callable[..., Path]) -> None:
    """Test a header alone is an empty signal."""
    with pytest.raises(SampleError):
        read_samples_csv(write_csv("x,v\n"))


def test_missing_file_rejected(tmp_path: Path) -> None:
    """Test an absent file raises a CSV error naming the path."""
    missing = tmp_path / "absent.csv"
    with pytest.raises(CsvFormatError, match="cannot read file"):
        read_samples_csv(missing)


def test_write_then_read_is_bit_identical(tmp_path: Path) -> None:
    """Test written floats read back exactly."""
    rng = np.random.default_rng(3)
    samples = SampleSet(rng.normal(size=25) * 1e3, np.append(rng.normal(size=24), [1.0 / 3.0]))
    path = tmp_path / "roundtrip.csv"
    write_samples_csv(samples, path)
    again = read_samples_csv(path)
    assert np.array_equal(again.abscissas, samples.abscissas)
    assert np.array_equal(again.values, samples.values)
    assert path.read_text(encoding="utf-8").startswith("x,v\n")


def test_extra_field_in_every_row_rejected(write_csv: Callable[..., Path]) -> None:
    """Test rows wider than the header are not shifted into x and v."""
    path = write_csv("x,v\n1,2,3\n4,5,6\n")
    with pytest.raises(CsvFormatError, match=r":2: expected 2 fields, got 3") as excinfo:
        read_samples_csv(path)
    assert excinfo.value.line == 2


def test_field_count_error_carries_line(write_csv: Callable[..., Path]) -> None:
    """Test a short or wide record sets the error's line attribute."""
    path = write_csv("# c\nx,v\n1,2\n\n3,4,5\n")
    with pytest.raises(CsvFormatError) as excinfo:
        read_samples_csv(path)
    assert excinfo.value.line == 5

    path = write_csv("x,v\n1,2\n3\n", name="short.csv")
    with pytest.raises(CsvFormatError, match="expected 2 fields, got 1") as excinfo:
        read_samples_csv(path)
    assert excinfo.value.line == 3


def test_inline_comment_does_not_count_as_field(write_csv: Callable[..., Path]) -> None:
    """Test a trailing comment after a record is ignored."""
    samples = read_samples_csv(write_csv("x,v\n1,2 # first, noisy\n3,4\n"))
    assert list(samples.values) == [2.0, 4.0]
