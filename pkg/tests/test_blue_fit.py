#!/usr/bin/env python3
"""
Unit tests for the ordinary least-squares fit.
"""
import numpy as np
import pytest

from cblue.blue_errors import DegenerateAbscissaError, SingularSystemError
from cblue.blue_fit import linear_closed_form, ols_fit
from cblue.model_samples import SampleSet
from cblue.model_trend import TrendBasis


def test_constant_fit_is_arithmetic_mean(example: SampleSet) -> None:
    """Test the degree-0 coefficient is the mean 3.29."""
    fit = ols_fit(example, TrendBasis(0))
    assert fit.offset == pytest.approx(3.29, rel=1e-12)
    assert fit.slope == 0.0


def test_linear_fit_of_reference_signal(example: SampleSet) -> None:
    """Test the degree-1 fit gives offset 2.798 and slope 0.082."""
    fit = ols_fit(example, TrendBasis(1))
    assert fit.offset == pytest.approx(2.798, rel=1e-10)
    assert fit.slope == pytest.approx(0.082, rel=1e-10)


def test_single_sample_constant_fit() -> None:
    """Test one sample fits its own value."""
    fit = ols_fit(SampleSet.from_sequences([5.0], [7.0]), TrendBasis(0))
    assert fit.offset == pytest.approx(7.0, rel=1e-15)


def test_exact_polynomial_is_recovered() -> None:
    """Test noiseless quadratic data returns its coefficients."""
    x = np.linspace(-2.0, 3.0, 9)
    samples = SampleSet(x, 1.5 - 0.5 * x + 0.25 * x**2)
    fit = ols_fit(samples, TrendBasis(2))
    np.testing.assert_allclose(fit.coefficients, [1.5, -0.5, 0.25], rtol=1e-10, atol=1e-12)


def test_closed_form_agrees_with_ols(example: SampleSet) -> None:
    """Test the moment closed forms match the factorized solve."""
    closed = linear_closed_form(example)
    fitted = ols_fit(example, TrendBasis(1))
    np.testing.assert_allclose(closed.coefficients, fitted.coefficients, rtol=1e-10)


def test_trend_at_evaluates_fit(example: SampleSet) -> None:
    """Test the fitted line at m_n = 6 is the mean."""
    fit = ols_fit(example, TrendBasis(1))
    assert fit.trend_at(6.0) == pytest.approx(3.29, rel=1e-12)


def test_rank_deficient_fit_names_basis() -> None:
    """Test equal abscissas with degree 1 raise a singular-system error."""
    samples = SampleSet.from_sequences([3.0, 3.0, 3.0], [1.0, 2.0, 3.0])
    with pytest.raises(SingularSystemError, match="degree-1 polynomial basis"):
        ols_fit(samples, TrendBasis(1))


def test_numerically_singular_gram_is_rejected() -> None:
    """Test a Gram matrix with a negligible pivot is rejected."""
    samples = SampleSet.from_sequences([1e8, 1e8 + 1e-7, 1e8 + 2e-7], [0.0, 1.0, 2.0])
    with pytest.raises(SingularSystemError, match="singular"):
        ols_fit(samples, TrendBasis(2))


def test_closed_form_rejects_zero_spread() -> None:
    """Test the closed forms need two distinct abscissas."""
    with pytest.raises(DegenerateAbscissaError):
        linear_closed_form(SampleSet.from_sequences([2.0, 2.0], [1.0, 3.0]))
