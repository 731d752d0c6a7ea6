#!/usr/bin/env python3
"""Complex-valued estimator of an unknown constant mean.

Evaluating the linear-trend estimator at a zero-variance point
x_j = m_n +/- i sigma_n gives

    beta_hat^1 + m_n beta_hat^2 +/- i sigma_n beta_hat^2 = mean(v) +/- i sigma_n beta_hat^2

the arithmetic mean of the signal charged by an imaginary error. The real
standard error reported alongside is the population formula
sqrt((mean(v^2) - mean(v)^2) / n).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from cblue.blue_errors import DegenerateAbscissaError
from cblue.blue_fit import ols_fit
from cblue.blue_zero import zero_variance_points
from cblue.model_samples import SampleSet, moments
from cblue.model_trend import TrendBasis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VanHeckeEstimate:
    """
    Complex mean estimate mean +/- i sigma_n slope.

    Attributes:
        mean: Arithmetic mean of the values (real part of the estimate).
        imaginary_error: |sigma_n * slope|.
        signed_imaginary: sigma_n * slope.
        standard_error: Population standard error of the mean.
        offset: Fitted offset beta_hat^1.
        slope: Fitted slope beta_hat^2.
        n: Number of samples.
        zero_variance_points: (m_n + i sigma_n, m_n - i sigma_n).
    """

    mean: float
    imaginary_error: float
    signed_imaginary: float
    standard_error: float
    offset: float
    slope: float
    n: int
    zero_variance_points: tuple[complex, complex]

    def branches(self) -> tuple[complex, complex]:
        """Return mean + i signed_imaginary and its conjugate, in that order."""
        return complex(self.mean, self.signed_imaginary), complex(self.mean, -self.signed_imaginary)


def van_hecke_estimate(samples: SampleSet) -> VanHeckeEstimate:
    """
    Estimate the constant mean with its real and imaginary errors.

    Args:
        samples: The observed signal, with at least two distinct abscissas.

    Returns:
        The complex mean estimate.

    Raises:
        DegenerateAbscissaError: If the abscissas have zero spread.
    """
    mom = moments(samples)
    if mom.sigma_n == 0.0:
        raise DegenerateAbscissaError(
            "constant-mean estimate needs at least two distinct abscissas"
        )
    points = zero_variance_points(mom)
    fit = ols_fit(samples, TrendBasis(1))

    n = samples.count
    values = samples.values
    mean = float(np.sum(values) / n)
    mean_square = float(np.sum(values * values) / n)
    spread = max(mean_square - mean * mean, 0.0)
    signed_imaginary = mom.sigma_n * fit.slope

    logger.debug(
        "Constant-mean estimate over %d samples: %r +/- i %r", n, mean, signed_imaginary
    )
    return VanHeckeEstimate(
        mean=mean,
        imaginary_error=abs(signed_imaginary),
        signed_imaginary=signed_imaginary,
        standard_error=math.sqrt(spread / n),
        offset=fit.offset,
        slope=fit.slope,
        n=n,
        zero_variance_points=points,
    )
