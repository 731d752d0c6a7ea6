#!/usr/bin/env python3
"""Monte Carlo checks of the prediction variance and OLS unbiasedness.

Replicates are processed in fixed blocks of REPLICATE_BLOCK_SIZE. Each block
is a pure function of (seed, block bounds), and block results are combined
in block order with an exactly rounded sum, so the serial functions and
their asyncio counterparts return identical reports.
"""

from __future__ import annotations

import asyncio
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cblue.blue_constants import REPLICATE_BLOCK_SIZE
from cblue.blue_errors import PreconditionError
from cblue.blue_gram import GramFactor, factor_gram
from cblue.blue_kriging import NoiseModel, kriging_weights, minimized_variance
from cblue.mc_simulate import replicate_normals, trend_values
from cblue.mc_state import (
    CoefficientReport,
    EmpiricalVarianceReport,
    SimulationConfig,
    WhiteNoiseModel,
)
from cblue.model_samples import SampleSet
from cblue.model_trend import TrendBasis, build_design

logger = logging.getLogger(__name__)

Block = tuple[int, int]


def _blocks(replicates: int) -> list[Block]:
    """Split replicate indices into consecutive fixed-size blocks."""
    return [
        (start, min(start + REPLICATE_BLOCK_SIZE, replicates))
        for start in range(0, replicates, REPLICATE_BLOCK_SIZE)
    ]


def _placeholder_samples(abscissas: NDArray[np.float64]) -> SampleSet:
    """Sample set whose values are irrelevant (weights depend on x only)."""
    return SampleSet(abscissas, np.zeros_like(abscissas))


@dataclass(frozen=True, eq=False)
class _MsePlan:
    """Everything a replicate block needs to compute squared errors."""

    weights: NDArray[np.float64]
    trend: NDArray[np.float64]
    trend_j: float
    sigma: float
    seed: int

    def squared_errors(self, block: Block) -> NDArray[np.float64]:
        """Return (V_j - omega^T V)^2 for each replicate in the block."""
        start, stop = block
        n = len(self.trend)
        draws = replicate_normals(self.seed, start, stop, n + 1)
        fields = self.trend + self.sigma * draws[:, :n]
        targets = self.trend_j + self.sigma * draws[:, n]
        residuals = targets - fields @ self.weights
        return residuals * residuals


def _plan_mse(
    abscissas: Sequence[float] | NDArray[np.float64],
    basis: TrendBasis,
    model: WhiteNoiseModel,
    x_j: float,
    config: SimulationConfig,
) -> tuple[_MsePlan, float]:
    """Validate inputs and return the replicate plan and theoretical MSE."""
    model.check_basis(basis)
    points = np.asarray(abscissas, dtype=np.float64)
    if isinstance(x_j, complex) or not math.isfinite(x_j):
        raise PreconditionError(f"x_j must be a finite real number, got {x_j!r}")
    if np.any(points == x_j):
        raise PreconditionError(
            f"x_j = {x_j!r} coincides with a sample abscissa; the white-noise "
            "decomposition needs an off-sample point"
        )
    samples = _placeholder_samples(points)
    solution = kriging_weights(samples, basis, x_j)
    normalized = minimized_variance(samples, basis, x_j, NoiseModel(1.0)).real
    theoretical = model.sigma**2 * (1.0 + normalized)
    plan = _MsePlan(
        weights=solution.weights.real.copy(),
        trend=trend_values(points, basis, model.true_beta),
        trend_j=float(trend_values([x_j], basis, model.true_beta)[0]),
        sigma=model.sigma,
        seed=config.seed,
    )
    return plan, theoretical


def _mse_report(
    x_j: float, config: SimulationConfig, theoretical: float, parts: list[NDArray[np.float64]]
) -> EmpiricalVarianceReport:
    """Combine block results, in block order, into a report."""
    empirical = math.fsum(float(v) for part in parts for v in part) / config.replicates
    relative = abs(empirical - theoretical) / theoretical
    logger.debug(
        "Empirical MSE %r vs theoretical %r at x_j=%r over %d replicates",
        empirical, theoretical, x_j, config.replicates,
    )
    return EmpiricalVarianceReport(
        x_j=float(x_j),
        empirical_mse=empirical,
        theoretical_mse=theoretical,
        relative_error=relative,
        replicates=config.replicates,
        seed=config.seed,
    )


def empirical_mse(
    abscissas: Sequence[float] | NDArray[np.float64],
    basis: TrendBasis,
    model: WhiteNoiseModel,
    x_j: float,
    config: SimulationConfig,
) -> EmpiricalVarianceReport:
    """
    Compare the simulated prediction MSE at x_j with sigma^2 (1 + q(x_j)).

    Each replicate draws a field at the abscissas plus an independent value
    V_j at x_j and records (V_j - sum omega_i V_i)^2 with the kriging weights.

    Args:
        abscissas: Sample locations.
        basis: Trend basis matching model.true_beta.
        model: Generating white-noise model.
        x_j: Real evaluation point, off the sample abscissas.
        config: Replicate count and seed.

    Returns:
        The empirical variance report.

    Raises:
        PreconditionError: If x_j coincides with an abscissa or true_beta
            does not match the basis.
        SingularSystemError: If the design is rank deficient.
    """
    plan, theoretical = _plan_mse(abscissas, basis, model, x_j, config)
    parts = [plan.squared_errors(block) for block in _blocks(config.replicates)]
    return _mse_report(x_j, config, theoretical, parts)


async def _gather_blocks(
    work: Callable[[Block], NDArray[np.float64]], blocks: list[Block], workers: int
) -> list[NDArray[np.float64]]:
    """Run work over blocks in worker threads, returning results in block order."""
    if workers < 1:
        raise PreconditionError(f"workers must be >= 1, got {workers}")
    limit = asyncio.Semaphore(workers)

    async def run_block(block: Block) -> NDArray[np.float64]:
        async with limit:
            return await asyncio.to_thread(work, block)

    return list(await asyncio.gather(*(run_block(block) for block in blocks)))


async def run_empirical_mse(
    abscissas: Sequence[float] | NDArray[np.float64],
    basis: TrendBasis,
    model: WhiteNoiseModel,
    x_j: float,
    config: SimulationConfig,
    workers: int = 4,
) -> EmpiricalVarianceReport:
    """
    Concurrent form of empirical_mse.

    Replicate blocks run in up to `workers` threads; the report is identical
    to the serial one.

    Args:
        abscissas: Sample locations.
        basis: Trend basis matching model.true_beta.
        model: Generating white-noise model.
        x_j: Real evaluation point, off the sample abscissas.
        config: Replicate count and seed.
        workers: Maximum number of blocks evaluated at once.

    Returns:
        The empirical variance report.
    """
    plan, theoretical = _plan_mse(abscissas, basis, model, x_j, config)
    parts = await _gather_blocks(plan.squared_errors, _blocks(config.replicates), workers)
    return _mse_report(x_j, config, theoretical, parts)


@dataclass(frozen=True, eq=False)
class _CoefficientPlan:
    """Everything a replicate block needs to refit the coefficients."""

    gram: GramFactor
    trend: NDArray[np.float64]
    sigma: float
    seed: int

    def coefficients(self, block: Block) -> NDArray[np.float64]:
        """Return beta_hat for each replicate in the block, one row each."""
        start, stop = block
        draws = replicate_normals(self.seed, start, stop, len(self.trend))
        fields = self.trend + self.sigma * draws
        moments = self.gram.design.entries.T @ fields.T
        return np.asarray(self.gram.solve(moments), dtype=np.float64).T


def empirical_coefficients(
    abscissas: Sequence[float] | NDArray[np.float64],
    basis: TrendBasis,
    model: WhiteNoiseModel,
    config: SimulationConfig,
) -> CoefficientReport:
    """
    Average the OLS coefficients over simulated fields.

    Args:
        abscissas: Sample locations.
        basis: Trend basis matching model.true_beta.
        model: Generating white-noise model.
        config: Replicate count and seed.

    Returns:
        Replicate means of beta_hat with their Monte Carlo standard errors.

    Raises:
        PreconditionError: If true_beta does not match the basis.
        SingularSystemError: If the design is rank deficient.
    """
    model.check_basis(basis)
    points = np.asarray(abscissas, dtype=np.float64)
    plan = _CoefficientPlan(
        gram=factor_gram(build_design(_placeholder_samples(points), basis)),
        trend=trend_values(points, basis, model.true_beta),
        sigma=model.sigma,
        seed=config.seed,
    )
    estimates = np.vstack([plan.coefficients(block) for block in _blocks(config.replicates)])
    means = tuple(math.fsum(column) / config.replicates for column in estimates.T)
    if config.replicates > 1:
        errors = tuple(
            float(np.std(column, ddof=1)) / math.sqrt(config.replicates) for column in estimates.T
        )
    else:
        errors = tuple(0.0 for _ in means)
    return CoefficientReport(
        true_beta=model.true_beta,
        mean_beta=means,
        standard_errors=errors,
        replicates=config.replicates,
        seed=config.seed,
    )
