#!/usr/bin/env python3
"""Brute-force minimizer of omega^T omega under the unbiasedness system.

An independent check of the closed-form kriging weights that never touches
the Lagrange formulas. The constraint set F^T omega = f(x_j) is written as
p + Z t, with p a particular solution and Z an orthonormal basis of the
null space of F^T; the unconstrained quadratic |p + Z t|^2 is then minimized
through its own normal equations (Z^T Z) t = -Z^T p.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from cblue.blue_constants import ORACLE_MAX_SAMPLES
from cblue.blue_errors import PreconditionError, SingularSystemError
from cblue.model_samples import SampleSet
from cblue.model_trend import DesignMatrix, TrendBasis, build_design

logger = logging.getLogger(__name__)


def _particular_solution(
    points: NDArray[np.float64], design: DesignMatrix, target: NDArray[np.float64]
) -> NDArray[np.float64]:
    """
    Solve F^T p = target using only N(k) rows of F.

    The rows are the first occurrences of distinct abscissas; their square
    Vandermonde block is nonsingular, and p is zero elsewhere.
    """
    _, first = np.unique(points, return_index=True)
    rows = np.sort(first)[: design.basis.size]
    try:
        block = np.linalg.solve(design.entries[rows].T, target)
    except np.linalg.LinAlgError as e:
        raise SingularSystemError(
            f"unbiasedness system of the {design.basis.describe()} is infeasible: {e}"
        ) from e
    particular = np.zeros(design.shape[0])
    particular[rows] = block
    return particular


def oracle_min_weights(
    abscissas: Sequence[float] | NDArray[np.float64], basis: TrendBasis, x_j: float
) -> NDArray[np.float64]:
    """
    Minimize omega^T omega subject to F^T omega = f(x_j) by null-space search.

    Args:
        abscissas: Sample locations, at most ORACLE_MAX_SAMPLES of them.
        basis: The polynomial trend basis.
        x_j: Real evaluation point.

    Returns:
        The minimum-norm unbiased weight vector.

    Raises:
        PreconditionError: If there are too many samples or x_j is not real.
        SingularSystemError: If the constraints are rank deficient.
    """
    points = np.asarray(abscissas, dtype=np.float64)
    if len(points) > ORACLE_MAX_SAMPLES:
        raise PreconditionError(
            f"oracle handles at most {ORACLE_MAX_SAMPLES} samples, got {len(points)}"
        )
    if isinstance(x_j, complex):
        raise PreconditionError(f"oracle needs a real evaluation point, got {x_j!r}")

    design = build_design(SampleSet(points, np.zeros_like(points)), basis)
    target = np.asarray(basis.evaluate(float(x_j)), dtype=np.float64)
    particular = _particular_solution(points, design, target)

    directions = scipy.linalg.null_space(design.entries.T)
    expected = design.shape[0] - basis.size
    if directions.shape[1] != expected:
        raise SingularSystemError(
            f"null space of the {basis.describe()} constraints has dimension "
            f"{directions.shape[1]}, expected {expected}"
        )
    if expected == 0:
        return particular

    hessian = directions.T @ directions
    gradient = directions.T @ particular
    step = np.linalg.solve(hessian, -gradient)
    logger.debug("Oracle searched %d null-space directions", expected)
    return particular + directions @ step
