#!/usr/bin/env python3
"""Monte Carlo model, configuration and report types.

This module provides the dataclasses shared by the simulation harness:
the generating white-noise model, the replicate configuration and the
reports produced by the variance and coefficient checks.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Any

from cblue.blue_errors import PreconditionError
from cblue.model_trend import TrendBasis

# Noise distribution used for every simulated field; recorded in reports.
NOISE_DISTRIBUTION: str = "standard-normal"

# Seeds are 64-bit unsigned integers.
MAX_SEED: int = 2**64 - 1


@dataclass(frozen=True)
class WhiteNoiseModel:
    """
    Generating process V_i = f(x_i)^T beta + sigma z_i.

    Attributes:
        true_beta: Trend coefficients, offset first.
        sigma: Noise standard deviation, strictly positive.
    """

    true_beta: tuple[float, ...]
    sigma: float

    def __post_init__(self) -> None:
        """Validate sigma and coerce true_beta to a tuple of floats."""
        if not math.isfinite(self.sigma) or self.sigma <= 0.0:
            raise PreconditionError(f"sigma must be finite and > 0, got {self.sigma!r}")
        beta = tuple(float(b) for b in self.true_beta)
        if not beta or not all(math.isfinite(b) for b in beta):
            raise PreconditionError(f"true_beta must be nonempty and finite, got {self.true_beta!r}")
        object.__setattr__(self, "true_beta", beta)

    def check_basis(self, basis: TrendBasis) -> None:
        """Raise PreconditionError unless true_beta matches the basis size."""
        if len(self.true_beta) != basis.size:
            raise PreconditionError(
                f"true_beta has {len(self.true_beta)} entries but the "
                f"{basis.describe()} needs {basis.size}"
            )


@dataclass(frozen=True)
class SimulationConfig:
    """
    Replicate count and seed of a Monte Carlo run.

    Attributes:
        replicates: Number of independent replicates, at least 1.
        seed: 64-bit unsigned seed; replicate r draws from the substream
            keyed by (seed, r).
    """

    replicates: int
    seed: int

    def __post_init__(self) -> None:
        """Validate the replicate count and seed range."""
        if self.replicates < 1:
            raise PreconditionError(f"replicates must be >= 1, got {self.replicates}")
        if not 0 <= self.seed <= MAX_SEED:
            raise PreconditionError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class EmpiricalVarianceReport:
    """
    Empirical against theoretical prediction mean squared error at x_j.

    Attributes:
        x_j: Real evaluation point, off the sample abscissas.
        empirical_mse: Mean of (V_j - sum omega_i V_i)^2 over replicates.
        theoretical_mse: sigma^2 (1 + f(x_j)^T (F^T F)^{-1} f(x_j)).
        relative_error: |empirical - theoretical| / theoretical.
        replicates: Number of replicates.
        seed: Seed of the run.
        noise_distribution: Distribution of the simulated noise.
    """

    x_j: float
    empirical_mse: float
    theoretical_mse: float
    relative_error: float
    replicates: int
    seed: int
    noise_distribution: str = NOISE_DISTRIBUTION


@dataclass(frozen=True)
class CoefficientReport:
    """
    Monte Carlo mean of the OLS coefficients.

    Attributes:
        true_beta: Coefficients of the generating model.
        mean_beta: Replicate mean of beta_hat.
        standard_errors: Monte Carlo standard error of each mean.
        replicates: Number of replicates.
        seed: Seed of the run.
        noise_distribution: Distribution of the simulated noise.
    """

    true_beta: tuple[float, ...]
    mean_beta: tuple[float, ...]
    standard_errors: tuple[float, ...]
    replicates: int
    seed: int
    noise_distribution: str = NOISE_DISTRIBUTION

    def max_deviation(self) -> float:
        """Largest |mean - true| / standard_error over the coefficients."""
        return max(
            abs(mean - true) / se if se > 0.0 else abs(mean - true)
            for mean, true, se in zip(self.mean_beta, self.true_beta, self.standard_errors)
        )


def report_to_dict(report: EmpiricalVarianceReport | CoefficientReport) -> dict[str, Any]:
    """Flatten a report into JSON-serializable key-value pairs."""
    flat: dict[str, Any] = {}
    for key, value in dataclasses.asdict(report).items():
        flat[key] = list(value) if isinstance(value, tuple) else value
    return flat
