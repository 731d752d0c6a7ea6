#!/usr/bin/env python3
"""Cholesky factorization of the Gram matrix F^T F.

All estimation formulas need (F^T F)^{-1} applied to a vector. The inverse
is never formed: the real Gram matrix is factored once and right-hand sides
are solved against the factor. Complex right-hand sides are solved as two
real systems, so real inputs always produce exactly real outputs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from cblue.blue_constants import PIVOT_TOLERANCE
from cblue.blue_errors import SingularSystemError
from cblue.model_trend import DesignMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GramFactor:
    """
    Cholesky factor of a design's Gram matrix.

    Attributes:
        design: The factored design matrix.
        factor: Upper-triangular Cholesky factor as returned by cho_factor.
    """

    design: DesignMatrix
    factor: NDArray[np.float64]

    def solve(self, rhs: NDArray[np.float64] | NDArray[np.complex128]) -> NDArray[np.float64] | NDArray[np.complex128]:
        """
        Solve (F^T F) y = rhs.

        Args:
            rhs: Real or complex vector (or matrix of columns).

        Returns:
            The solution with the dtype of rhs.
        """
        if np.iscomplexobj(rhs):
            real = scipy.linalg.cho_solve((self.factor, False), np.ascontiguousarray(rhs.real))
            imag = scipy.linalg.cho_solve((self.factor, False), np.ascontiguousarray(rhs.imag))
            return real + 1j * imag
        return scipy.linalg.cho_solve((self.factor, False), rhs)


def factor_gram(design: DesignMatrix) -> GramFactor:
    """
    Factor F^T F, rejecting singular or numerically singular systems.

    A system is singular when the Cholesky factorization fails or the
    smallest pivot falls below PIVOT_TOLERANCE times the largest.

    Args:
        design: The design matrix to factor.

    Returns:
        The Gram factor.

    Raises:
        SingularSystemError: If the Gram matrix is singular.
    """
    basis_name = design.basis.describe()
    try:
        factor, _ = scipy.linalg.cho_factor(design.gram(), lower=False)
    except np.linalg.LinAlgError as e:
        raise SingularSystemError(f"Gram matrix of the {basis_name} is singular: {e}") from e

    pivots = np.diag(factor) ** 2
    if pivots.min() < PIVOT_TOLERANCE * pivots.max():
        raise SingularSystemError(
            f"Gram matrix of the {basis_name} is numerically singular "
            f"(pivot ratio {pivots.min() / pivots.max():.3e})"
        )
    logger.debug("Factored Gram matrix of the %s", basis_name)
    return GramFactor(design=design, factor=factor)
