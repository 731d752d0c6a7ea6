#!/usr/bin/env python3
"""Simulation of white-noise fields with polynomial trend.

Draws come from numpy's PCG64 generator seeded through SeedSequence. A
whole field drawn by simulate_field uses the seed directly; Monte Carlo
replicate r uses the substream SeedSequence(seed, spawn_key=(r,)), so a
replicate's draws depend only on (seed, r) and never on evaluation order.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from cblue.mc_state import WhiteNoiseModel
from cblue.model_samples import SampleSet
from cblue.model_trend import TrendBasis

logger = logging.getLogger(__name__)


def replicate_generator(seed: int, index: int) -> np.random.Generator:
    """Return the generator of replicate `index` under `seed`."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def replicate_normals(seed: int, start: int, stop: int, width: int) -> NDArray[np.float64]:
    """
    Draw `width` standard normals for each replicate in [start, stop).

    Args:
        seed: Run seed.
        start: First replicate index.
        stop: One past the last replicate index.
        width: Draws per replicate.

    Returns:
        (stop - start) x width array, row r - start holding replicate r.
    """
    draws = np.empty((stop - start, width))
    for row, index in enumerate(range(start, stop)):
        draws[row] = replicate_generator(seed, index).standard_normal(width)
    return draws


def trend_values(
    abscissas: Sequence[float] | NDArray[np.float64], basis: TrendBasis, beta: Sequence[float]
) -> NDArray[np.float64]:
    """Evaluate f(x_i)^T beta at every abscissa."""
    points = np.asarray(abscissas, dtype=np.float64)
    return np.vander(points, basis.size, increasing=True) @ np.asarray(beta, dtype=np.float64)


def simulate_field(
    abscissas: Sequence[float] | NDArray[np.float64],
    basis: TrendBasis,
    model: WhiteNoiseModel,
    seed: int,
) -> SampleSet:
    """
    Draw one realization v_i = f(x_i)^T beta + sigma z_i.

    Args:
        abscissas: Sample locations.
        basis: Trend basis matching model.true_beta.
        model: Generating white-noise model.
        seed: Generator seed; equal seeds give bit-identical fields.

    Returns:
        The simulated sample set.

    Raises:
        PreconditionError: If true_beta does not match the basis.
    """
    model.check_basis(basis)
    trend = trend_values(abscissas, basis, model.true_beta)
    noise = np.random.default_rng(seed).standard_normal(len(trend))
    logger.debug("Simulated %d samples with seed %d", len(trend), seed)
    return SampleSet(np.asarray(abscissas, dtype=np.float64), trend + model.sigma * noise)
