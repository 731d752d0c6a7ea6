#!/usr/bin/env python3
"""Polynomial trend bases and design matrices.

The trend (mean function) is f(x)^T beta with monomial basis functions
f_k(x) = x^k for k = 0..d. Degree 0 is the constant mean, degree 1 the
linear mean with offset and slope.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cblue.blue_errors import PreconditionError, SingularSystemError
from cblue.model_samples import SampleSet, distinct_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrendBasis:
    """
    Monomial trend basis of a given degree.

    Attributes:
        degree: Polynomial degree d >= 0; the basis has d + 1 functions.
    """

    degree: int

    def __post_init__(self) -> None:
        """Reject negative or non-integer degrees."""
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 0:
            raise PreconditionError(f"degree must be a nonnegative integer, got {self.degree!r}")

    @property
    def size(self) -> int:
        """Number of regression parameters N(k) = d + 1."""
        return self.degree + 1

    def describe(self) -> str:
        """Human-readable basis name used in error messages."""
        return f"degree-{self.degree} polynomial basis"

    def evaluate(self, x: complex | float) -> NDArray[np.complex128] | NDArray[np.float64]:
        """
        Evaluate f(x) = (1, x, ..., x^d).

        Real arguments give a float64 vector, complex arguments a complex128
        vector. Powers are built by the same recurrence as build_design so
        f(x_i) reproduces row i of the design matrix.

        Args:
            x: Evaluation point.

        Returns:
            Vector of the d + 1 basis function values.
        """
        point = np.atleast_1d(np.asarray(x))
        if not np.iscomplexobj(point):
            point = point.astype(np.float64)
        return np.vander(point, self.size, increasing=True)[0]


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """
    Trend basis evaluated at every abscissa.

    Attributes:
        entries: n x N(k) real matrix with entry (i, k) = x_i^k.
        basis: The basis that produced the matrix.
    """

    entries: NDArray[np.float64]
    basis: TrendBasis

    @property
    def shape(self) -> tuple[int, int]:
        """Matrix shape (n, N(k))."""
        rows, cols = self.entries.shape
        return rows, cols

    def gram(self) -> NDArray[np.float64]:
        """Return the Gram matrix F^T F."""
        return self.entries.T @ self.entries


def build_design(samples: SampleSet, basis: TrendBasis) -> DesignMatrix:
    """
    Build the design matrix of a basis over the sample abscissas.

    Args:
        samples: The observed signal.
        basis: The polynomial trend basis.

    Returns:
        The n x (d + 1) design matrix.

    Raises:
        SingularSystemError: If the degree is not below the number of
            distinct abscissas, which makes the design rank deficient.
    """
    distinct = distinct_count(samples)
    if basis.degree >= distinct:
        raise SingularSystemError(
            f"{basis.describe()} needs at least {basis.size} distinct abscissas, got {distinct}"
        )
    entries = np.vander(samples.abscissas, basis.size, increasing=True)
    entries.setflags(write=False)
    logger.debug("Built %dx%d design for %s", entries.shape[0], entries.shape[1], basis.describe())
    return DesignMatrix(entries=entries, basis=basis)
