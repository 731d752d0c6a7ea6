#!/usr/bin/env python3
"""CSV ingestion and emission of sampled signals.

File format: UTF-8 text, header `x,v`, one record per line with a decimal
point, lines starting with `#` and blank lines ignored.

Example:
    # depth profile
    x,v
    1,4.12
    2,1.38

pandas handles the CSV structure; each field is converted with float(),
which is correctly rounded, so values written by write_samples_csv (shortest
round-trip repr) read back bit-identical.
"""

from __future__ import annotations

import io
import logging
import math
from pathlib import Path

import pandas as pd

from cblue.blue_errors import CsvFormatError
from cblue.model_samples import SampleSet

logger = logging.getLogger(__name__)

# Required header columns, in order.
CSV_COLUMNS: tuple[str, str] = ("x", "v")

# Lines starting with this character are comments.
COMMENT_CHAR: str = "#"


def _record_line_numbers(text: str) -> list[int]:
    """Return the 1-based physical line numbers of header and data records."""
    return [
        number
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith(COMMENT_CHAR)
    ]


def _check_field_counts(path: str, text: str, lines: list[int]) -> None:
    """Reject records whose field count differs from the header width."""
    physical = text.splitlines()
    for line in lines:
        fields = physical[line - 1].split(COMMENT_CHAR, 1)[0].split(",")
        if len(fields) != len(CSV_COLUMNS):
            raise CsvFormatError(
                path, f"expected {len(CSV_COLUMNS)} fields, got {len(fields)}", line=line
            )


def _parse_field(path: str, line: int, name: str, text: str) -> float:
    """Convert one CSV field to a finite float, reporting its line on failure."""
    try:
        value = float(text)
    except ValueError as e:
        raise CsvFormatError(path, f"malformed {name} value {text!r}", line=line) from e
    if not math.isfinite(value):
        raise CsvFormatError(path, f"non-finite {name} value {text!r}", line=line)
    return value


def read_samples_csv(path: str | Path) -> SampleSet:
    """
    Read a signal from a CSV file.

    Args:
        path: File to read.

    Returns:
        The sample set, records in file order.

    Raises:
        CsvFormatError: If the file is missing, unreadable, has a wrong
            header, a record with the wrong number of fields or a malformed
            value (with its line number).
        SampleError: If the file holds no records.
    """
    name = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CsvFormatError(name, f"cannot read file: {e}") from e

    lines = _record_line_numbers(text)
    if not lines:
        raise CsvFormatError(name, "file has no header row")
    _check_field_counts(name, text, lines)
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            index_col=False,
            comment=COMMENT_CHAR,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            skipinitialspace=True,
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise CsvFormatError(name, f"malformed CSV: {e}") from e

    header, records = frame.iloc[0], frame.iloc[1:]
    columns = tuple(str(column).strip() for column in header)
    if columns != CSV_COLUMNS:
        raise CsvFormatError(
            name, f"header must be {','.join(CSV_COLUMNS)}, got {','.join(columns)}", line=lines[0]
        )

    abscissas: list[float] = []
    values: list[float] = []
    for row, (x_text, v_text) in enumerate(records.itertuples(index=False, name=None)):
        line = lines[row + 1]
        abscissas.append(_parse_field(name, line, "x", str(x_text)))
        values.append(_parse_field(name, line, "v", str(v_text)))
    logger.debug("Read %d records from %s", len(abscissas), name)
    return SampleSet.from_sequences(abscissas, values)


def write_samples_csv(samples: SampleSet, path: str | Path) -> None:
    """
    Write a signal as CSV with header `x,v`.

    Floats are written in shortest round-trip form.

    Args:
        samples: The signal to write.
        path: Destination file.
    """
    frame = pd.DataFrame({CSV_COLUMNS[0]: samples.abscissas, CSV_COLUMNS[1]: samples.values})
    frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    logger.debug("Wrote %d records to %s", samples.count, path)
