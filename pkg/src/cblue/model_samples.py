#!/usr/bin/env python3
"""Sampled signal data model and abscissa moments.

A SampleSet holds the observed signal: ordered abscissas x_i and values
v_i of equal length n >= 1. The moment summary condenses the abscissas
into the three numbers every linear-trend formula consumes:

- m_n: mean abscissa
- m_sn: mean squared abscissa
- sigma_n: population standard deviation sqrt(m_sn - m_n^2)
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cblue.blue_constants import ROUNDOFF_TOLERANCE
from cblue.blue_errors import NumericalError, PreconditionError, SampleError

logger = logging.getLogger(__name__)


def _as_signal_array(name: str, data: Sequence[float] | NDArray[np.float64]) -> NDArray[np.float64]:
    """Convert data to a read-only 1-D float64 array.

    Args:
        name: Field name used in error messages.
        data: Sequence of real numbers.

    Returns:
        A read-only copy of the data.

    Raises:
        SampleError: If the data is not one-dimensional or not finite.
    """
    try:
        array = np.array(data, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise SampleError(f"{name} must be real numbers: {e}") from e
    if array.ndim != 1:
        raise SampleError(f"{name} must be one-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise SampleError(f"{name} contain non-finite entries")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SampleSet:
    """
    Observed signal values at real abscissas.

    Attributes:
        abscissas: Coordinates x_i, read-only float64 array.
        values: Signal values v_i, read-only float64 array of the same length.
    """

    abscissas: NDArray[np.float64]
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Validate lengths and finiteness, freezing both arrays."""
        abscissas = _as_signal_array("abscissas", self.abscissas)
        values = _as_signal_array("values", self.values)
        if len(abscissas) != len(values):
            raise SampleError(
                f"abscissas and values differ in length: {len(abscissas)} != {len(values)}"
            )
        if len(abscissas) == 0:
            raise SampleError("sample set is empty")
        object.__setattr__(self, "abscissas", abscissas)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_sequences(cls, abscissas: Sequence[float], values: Sequence[float]) -> SampleSet:
        """Build a SampleSet from plain sequences."""
        return cls(np.asarray(abscissas, dtype=np.float64), np.asarray(values, dtype=np.float64))

    @property
    def count(self) -> int:
        """Number of samples n."""
        return len(self.abscissas)


@dataclass(frozen=True)
class MomentSummary:
    """
    Abscissa moments used by the linear-trend formulas.

    Attributes:
        m_n: Mean abscissa.
        m_sn: Mean squared abscissa.
        sigma_n: Population standard deviation of the abscissas (divisor n).
    """

    m_n: float
    m_sn: float
    sigma_n: float

    def __post_init__(self) -> None:
        """Check sigma_n >= 0 and sigma_n^2 = m_sn - m_n^2 up to round-off."""
        if not all(math.isfinite(v) for v in (self.m_n, self.m_sn, self.sigma_n)):
            raise PreconditionError(f"moments must be finite, got {self!r}")
        if self.sigma_n < 0.0:
            raise PreconditionError(f"sigma_n must be >= 0, got {self.sigma_n!r}")
        mismatch = abs(self.sigma_n * self.sigma_n - (self.m_sn - self.m_n * self.m_n))
        if mismatch > ROUNDOFF_TOLERANCE * max(1.0, abs(self.m_sn)):
            raise PreconditionError(
                f"sigma_n^2 differs from m_sn - m_n^2 by {mismatch:.3e} "
                f"(m_n={self.m_n!r}, m_sn={self.m_sn!r}, sigma_n={self.sigma_n!r})"
            )


def distinct_count(samples: SampleSet) -> int:
    """Return the number of distinct abscissas."""
    return len(np.unique(samples.abscissas))


def moments(samples: SampleSet) -> MomentSummary:
    """
    Compute the abscissa moments m_n, m_sn and sigma_n.

    sigma_n uses the population convention sqrt(m_sn - m_n^2). A set with a
    single distinct abscissa has sigma_n = 0 exactly; a negative difference
    within round-off is clamped to zero.

    Args:
        samples: The observed signal.

    Returns:
        The moment summary.

    Raises:
        NumericalError: If m_sn - m_n^2 is negative beyond round-off.
    """
    x = samples.abscissas
    m_n = float(np.sum(x) / samples.count)
    m_sn = float(np.sum(x * x) / samples.count)
    if np.all(x == x[0]):
        return MomentSummary(m_n=m_n, m_sn=m_sn, sigma_n=0.0)

    spread = m_sn - m_n * m_n
    if spread < 0.0:
        if -spread >= ROUNDOFF_TOLERANCE * max(1.0, m_sn):
            raise NumericalError(f"abscissa variance is negative: {spread!r}")
        logger.warning("Clamping round-off abscissa variance %r to zero", spread)
        spread = 0.0
    return MomentSummary(m_n=m_n, m_sn=m_sn, sigma_n=math.sqrt(spread))
