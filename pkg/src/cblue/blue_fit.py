#!/usr/bin/env python3
"""Ordinary least-squares fit of the polynomial trend.

For white noise the ordinary least-squares estimator
beta_hat = (F^T F)^{-1} F^T v is also the best linear unbiased estimator of
the regression parameters. Coefficients are ordered offset first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cblue.blue_errors import DegenerateAbscissaError
from cblue.blue_gram import factor_gram
from cblue.model_samples import SampleSet, moments
from cblue.model_trend import TrendBasis, build_design

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BlueFit:
    """
    Estimated regression coefficients.

    Attributes:
        coefficients: beta_hat, one entry per basis function, offset first.
        basis: The trend basis the coefficients belong to.
    """

    coefficients: NDArray[np.float64]
    basis: TrendBasis

    @property
    def offset(self) -> float:
        """Estimated offset beta_hat^1."""
        return float(self.coefficients[0])

    @property
    def slope(self) -> float:
        """Estimated slope beta_hat^2 (0.0 for a constant basis)."""
        if self.basis.degree < 1:
            return 0.0
        return float(self.coefficients[1])

    def trend_at(self, x_j: complex | float) -> complex:
        """Evaluate the fitted trend f(x_j)^T beta_hat."""
        return complex(self.basis.evaluate(x_j) @ self.coefficients)


def ols_fit(samples: SampleSet, basis: TrendBasis) -> BlueFit:
    """
    Fit the trend by ordinary least squares.

    Solves the normal equations through a Cholesky factor of F^T F.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.

    Returns:
        The fitted coefficients.

    Raises:
        SingularSystemError: If the design is rank deficient.
    """
    design = build_design(samples, basis)
    gram = factor_gram(design)
    coefficients = np.asarray(gram.solve(design.entries.T @ samples.values), dtype=np.float64)
    coefficients.setflags(write=False)
    logger.debug("OLS fit with %s: %s", basis.describe(), coefficients)
    return BlueFit(coefficients=coefficients, basis=basis)


def linear_closed_form(samples: SampleSet) -> BlueFit:
    """
    Fit a linear trend through the closed-form moment formulas.

    offset = (m_sn * mean(v) - m_n * mean(x v)) / sigma_n^2
    slope  = (mean(x v) - m_n * mean(v)) / sigma_n^2

    Args:
        samples: The observed signal.

    Returns:
        Offset and slope for the degree-1 basis.

    Raises:
        DegenerateAbscissaError: If all abscissas coincide.
    """
    mom = moments(samples)
    if mom.sigma_n == 0.0:
        raise DegenerateAbscissaError("linear trend needs at least two distinct abscissas")
    n = samples.count
    mean_v = float(np.sum(samples.values) / n)
    mean_xv = float(np.sum(samples.abscissas * samples.values) / n)
    variance = mom.sigma_n**2
    offset = (mom.m_sn * mean_v - mom.m_n * mean_xv) / variance
    slope = (mean_xv - mom.m_n * mean_v) / variance
    coefficients = np.array([offset, slope])
    coefficients.setflags(write=False)
    return BlueFit(coefficients=coefficients, basis=TrendBasis(1))
