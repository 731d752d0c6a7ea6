#!/usr/bin/env python3
"""Pytest fixtures for cblue tests.

Provides the embedded reference signal and CSV files on disk.
"""

from collections.abc import Callable
from pathlib import Path

import pytest

from cblue.example_table import EXAMPLE_ABSCISSAS, EXAMPLE_VALUES, example_samples
from cblue.model_samples import SampleSet


@pytest.fixture
def example() -> SampleSet:
    """The embedded 11-point reference signal."""
    return example_samples()


@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[..., Path]:
    """Return a helper that writes CSV text to a temporary file."""

    def _write(text: str, name: str = "signal.csv") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def example_csv(write_csv: Callable[..., Path]) -> Path:
    """The reference signal as a CSV file with a comment line."""
    rows = "\n".join(f"{x},{v}" for x, v in zip(EXAMPLE_ABSCISSAS, EXAMPLE_VALUES))
    return write_csv(f"# reference signal\nx,v\n{rows}\n", name="example.csv")
