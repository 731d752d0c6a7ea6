#!/usr/bin/env python3
"""
Unit tests for SampleSet validation and abscissa moments.
"""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cblue.blue_errors import PreconditionError, SampleError
from cblue.model_samples import MomentSummary, SampleSet, distinct_count, moments


def test_sample_set_counts_samples() -> None:
    """Test count reports the number of samples."""
    samples = SampleSet.from_sequences([1, 2, 3], [4.0, 5.0, 6.0])
    assert samples.count == 3


def test_sample_set_arrays_are_read_only() -> None:
    """Test stored arrays cannot be modified in place."""
    samples = SampleSet.from_sequences([1, 2], [3, 4])
    with pytest.raises(ValueError):
        samples.values[0] = 10.0


def test_sample_set_rejects_length_mismatch() -> None:
    """Test abscissas and values must have equal length."""
    with pytest.raises(SampleError, match="differ in length"):
        SampleSet.from_sequences([1, 2, 3], [1, 2])


def test_sample_set_rejects_empty() -> None:
    """Test an empty sample set is rejected."""
    with pytest.raises(SampleError, match="empty"):
        SampleSet.from_sequences([], [])


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_sample_set_rejects_non_finite(bad: float) -> None:
    """Test non-finite entries are rejected."""
    with pytest.raises(SampleError, match="non-finite"):
        SampleSet.from_sequences([1, 2], [0.0, bad])


def test_distinct_count_ignores_repeats() -> None:
    """Test repeated abscissas count once."""
    samples = SampleSet.from_sequences([1, 1, 2, 3, 3], [0, 0, 0, 0, 0])
    assert distinct_count(samples) == 3


def test_moments_of_reference_abscissas(example: SampleSet) -> None:
    """Test moments of 1..11 are m_n = 6, m_sn = 46, sigma_n = sqrt(10)."""
    mom = moments(example)
    assert mom.m_n == 6.0
    assert mom.m_sn == 46.0
    assert mom.sigma_n == pytest.approx(math.sqrt(10.0), rel=1e-15)


@pytest.mark.parametrize("c", [0.1, -3.7, 1e6])
def test_moments_zero_spread(c: float) -> None:
    """Test identical abscissas give sigma_n exactly zero."""
    mom = moments(SampleSet.from_sequences([c, c, c], [1, 2, 3]))
    assert mom.m_n == pytest.approx(c, rel=1e-15)
    assert mom.sigma_n == 0.0


def test_moments_symmetric_abscissas() -> None:
    """Test x = [-1, 0, 1] gives m_n = 0, m_sn = 2/3."""
    mom = moments(SampleSet.from_sequences([-1, 0, 1], [0, 0, 0]))
    assert mom.m_n == 0.0
    assert mom.m_sn == pytest.approx(2.0 / 3.0, rel=1e-15)
    assert mom.sigma_n == pytest.approx(math.sqrt(2.0 / 3.0), rel=1e-15)


@given(
    st.lists(
        st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=30,
    )
)
def test_moments_satisfy_cauchy_schwarz(abscissas: list[float]) -> None:
    """Test m_sn >= m_n^2 up to round-off and sigma_n^2 matches their difference."""
    mom = moments(SampleSet.from_sequences(abscissas, [0.0] * len(abscissas)))
    spread = mom.m_sn - mom.m_n**2
    assert spread >= -1e-12 * max(1.0, mom.m_sn)
    assert mom.sigma_n >= 0.0
    if np.unique(abscissas).size > 1:
        assert mom.sigma_n**2 == pytest.approx(max(spread, 0.0), rel=1e-12, abs=1e-12 * max(1.0, mom.m_sn))


def test_moment_summary_rejects_inconsistent_spread() -> None:
    """Test sigma_n^2 must equal m_sn - m_n^2."""
    with pytest.raises(PreconditionError, match="differs from m_sn - m_n"):
        MomentSummary(m_n=0.0, m_sn=5.0, sigma_n=1.0)


def test_moment_summary_rejects_negative_sigma() -> None:
    """Test sigma_n must be nonnegative."""
    with pytest.raises(PreconditionError, match="sigma_n must be >= 0"):
        MomentSummary(m_n=0.0, m_sn=1.0, sigma_n=-1.0)


def test_moment_summary_rejects_non_finite() -> None:
    """Test moments must be finite."""
    with pytest.raises(PreconditionError, match="finite"):
        MomentSummary(m_n=float("nan"), m_sn=1.0, sigma_n=1.0)


def test_moment_summary_accepts_round_off() -> None:
    """Test a mismatch within the relative round-off tolerance is accepted."""
    m_sn = 46.0 * (1.0 + 1e-14)
    mom = MomentSummary(m_n=6.0, m_sn=m_sn, sigma_n=math.sqrt(10.0))
    assert mom.sigma_n == math.sqrt(10.0)


def test_moment_summary_accepts_large_abscissas() -> None:
    """Test the tolerance scales with m_sn."""
    mom = moments(SampleSet.from_sequences([1e8, 1e8 + 1.0, 1e8 + 2.0], [0.0, 0.0, 0.0]))
    assert mom.sigma_n >= 0.0
