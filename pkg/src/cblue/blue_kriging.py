#!/usr/bin/env python3
"""Kriging weights, prediction and minimized variance under white noise.

The weights minimize the estimation variance subject to the unbiasedness
system F^T omega = f(x_j). With identity correlation the Lagrange system
solves in closed form:

    mu    = -(F^T F)^{-1} f(x_j)
    omega = -F mu = F (F^T F)^{-1} f(x_j)

Evaluation points may be complex. Every quadratic form is bilinear (plain
transpose, no conjugation); this continuation of the real formulas is what
lets the variance vanish off the real axis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cblue.blue_constants import CONSTRAINT_TOLERANCE
from cblue.blue_errors import NumericalError, PreconditionError
from cblue.blue_gram import factor_gram
from cblue.model_samples import SampleSet
from cblue.model_trend import DesignMatrix, TrendBasis, build_design

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoiseModel:
    """
    White-noise model: variance sigma2 with identity correlation.

    Attributes:
        sigma2: Noise variance, nonnegative.
    """

    sigma2: float = 1.0

    def __post_init__(self) -> None:
        """Reject negative or non-finite variances."""
        if not np.isfinite(self.sigma2) or self.sigma2 < 0.0:
            raise PreconditionError(f"noise variance must be finite and >= 0, got {self.sigma2!r}")


@dataclass(frozen=True, eq=False)
class KrigingSolution:
    """
    Solution of the Lagrange system at one evaluation point.

    Attributes:
        weights: omega, one complex weight per sample.
        multipliers: mu, one complex multiplier per basis function.
        x_j: The evaluation point.
        design: Design matrix the solution was computed for.
    """

    weights: NDArray[np.complex128]
    multipliers: NDArray[np.complex128]
    x_j: complex
    design: DesignMatrix

    def unbiasedness_residual(self) -> NDArray[np.complex128]:
        """Return F^T omega - f(x_j), zero for an unbiased estimator."""
        target = self.design.basis.evaluate(self.x_j)
        return self.design.entries.T @ self.weights - target

    def multiplier_residual(self) -> NDArray[np.complex128]:
        """Return omega + F mu, zero when weights and multipliers agree."""
        return self.weights + self.design.entries @ self.multipliers


def _check_constraints(solution: KrigingSolution) -> None:
    """Raise NumericalError if the solution violates its own constraints."""
    target = solution.design.basis.evaluate(solution.x_j)
    scale = max(1.0, float(np.max(np.abs(target))))
    bias = float(np.max(np.abs(solution.unbiasedness_residual())))
    if bias > CONSTRAINT_TOLERANCE * scale:
        raise NumericalError(f"kriging weights violate unbiasedness by {bias:.3e}")
    link = float(np.max(np.abs(solution.multiplier_residual())))
    if link > CONSTRAINT_TOLERANCE * max(1.0, float(np.max(np.abs(solution.weights)))):
        raise NumericalError(f"kriging weights and multipliers disagree by {link:.3e}")


def kriging_weights(samples: SampleSet, basis: TrendBasis, x_j: complex) -> KrigingSolution:
    """
    Solve for the kriging weights and Lagrange multipliers at x_j.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.
        x_j: Real or complex evaluation point.

    Returns:
        Weights, multipliers and the design they satisfy.

    Raises:
        SingularSystemError: If the Gram matrix is singular.
        NumericalError: If the solved weights fail the constraint checks.
    """
    point = complex(x_j)
    design = build_design(samples, basis)
    gram = factor_gram(design)
    target = basis.evaluate(point)
    solved = gram.solve(target)
    multipliers = -solved
    weights = design.entries @ solved
    solution = KrigingSolution(
        weights=weights, multipliers=multipliers, x_j=point, design=design
    )
    _check_constraints(solution)
    logger.debug("Kriging weights at %s with %s", point, basis.describe())
    return solution


def predict(samples: SampleSet, basis: TrendBasis, x_j: complex) -> complex:
    """
    Kriging estimate sum_l omega_l v_l at x_j.

    Equals the fitted trend f(x_j)^T beta_hat.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.
        x_j: Real or complex evaluation point.

    Returns:
        The (possibly complex) estimate.

    Raises:
        SingularSystemError: If the Gram matrix is singular.
    """
    solution = kriging_weights(samples, basis, x_j)
    return complex(solution.weights @ samples.values)


def minimized_variance(
    samples: SampleSet, basis: TrendBasis, x_j: complex, noise: NoiseModel
) -> complex:
    """
    Minimized estimation variance sigma^2 f(x_j)^T (F^T F)^{-1} f(x_j).

    Uses the bilinear form, so the result is complex for complex x_j and
    vanishes at the zero-variance points of a linear trend.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.
        x_j: Real or complex evaluation point.
        noise: White-noise variance.

    Returns:
        The estimation variance.

    Raises:
        SingularSystemError: If the Gram matrix is singular.
    """
    point = complex(x_j)
    gram = factor_gram(build_design(samples, basis))
    target = basis.evaluate(point)
    return complex(noise.sigma2 * (target @ gram.solve(target)))


def prediction_mse(
    samples: SampleSet, basis: TrendBasis, x_j: complex, noise: NoiseModel
) -> complex:
    """
    Mean squared error of predicting the field value V_j.

    For white noise this is sigma^2 + sigma^2 omega^T omega; at a
    zero-variance point it reduces to sigma^2.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.
        x_j: Real or complex evaluation point, off the sample abscissas.
        noise: White-noise variance.

    Returns:
        The prediction mean squared error.
    """
    return noise.sigma2 + minimized_variance(samples, basis, x_j, noise)
