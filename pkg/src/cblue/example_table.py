#!/usr/bin/env python3
"""Embedded 11-point reference signal and its published estimates.

The `example` command reruns the constant-mean estimate on this table and
checks the three published figures at two-decimal rounding.
"""

from cblue.model_samples import SampleSet

EXAMPLE_ABSCISSAS: tuple[float, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)

EXAMPLE_VALUES: tuple[float, ...] = (
    4.12, 1.38, 5.71, 1.25, 2.24, 0.81, 1.67, 7.42, 7.91, 1.63, 2.05,
)

# Published figures, as rendered with two decimals.
EXPECTED_MEAN: str = "3.29"
EXPECTED_STANDARD_ERROR: str = "0.74"
EXPECTED_IMAGINARY_ERROR: str = "0.26"

# Decimal places the published figures are compared at.
EXPECTED_DIGITS: int = 2


def example_samples() -> SampleSet:
    """Return the embedded reference signal."""
    return SampleSet.from_sequences(EXAMPLE_ABSCISSAS, EXAMPLE_VALUES)
