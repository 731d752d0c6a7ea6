#!/usr/bin/env python3
"""Zero-variance evaluation points of the linear trend.

For a degree-1 trend with unit noise variance the minimized variance at x_j
is the quadratic

    (x_j^2 - 2 m_n x_j + m_sn) / (n sigma_n^2)

whose discriminant is -4 sigma_n^2 <= 0. Its roots m_n +/- i sigma_n are the
complex points where the continued estimation variance vanishes.
"""

from __future__ import annotations

from cblue.blue_errors import DegenerateAbscissaError
from cblue.model_samples import MomentSummary


def _require_spread(mom: MomentSummary) -> None:
    """Raise DegenerateAbscissaError when sigma_n is zero."""
    if mom.sigma_n <= 0.0:
        raise DegenerateAbscissaError(
            "abscissas have zero spread (sigma_n = 0); the linear trend is not identifiable"
        )


def normalized_variance_quadratic(mom: MomentSummary, n: int, x_j: complex) -> complex:
    """
    Evaluate the unit-variance linear-trend variance quadratic at x_j.

    The numerator is evaluated in the centred form (x_j - m_n)^2 + sigma_n^2,
    the same polynomial as x_j^2 - 2 m_n x_j + m_sn, so the roots cancel
    exactly instead of through m_sn - m_n^2.

    Args:
        mom: Abscissa moments.
        n: Number of samples.
        x_j: Real or complex evaluation point.

    Returns:
        The normalized variance (complex).

    Raises:
        DegenerateAbscissaError: If sigma_n is zero.
    """
    _require_spread(mom)
    offset = complex(x_j) - mom.m_n
    variance = mom.sigma_n * mom.sigma_n
    return (offset * offset + variance) / (n * variance)


def zero_variance_points(mom: MomentSummary) -> tuple[complex, complex]:
    """
    Return the conjugate roots m_n + i sigma_n and m_n - i sigma_n.

    Args:
        mom: Abscissa moments.

    Returns:
        Both roots, positive-imaginary branch first.

    Raises:
        DegenerateAbscissaError: If sigma_n is zero.
    """
    _require_spread(mom)
    return complex(mom.m_n, mom.sigma_n), complex(mom.m_n, -mom.sigma_n)
