#!/usr/bin/env python3
"""Sampled-signal data model.

This module re-exports the core model from submodules for convenient
imports. The actual implementations are in:
- model_samples: SampleSet, MomentSummary, moments, distinct_count
- model_trend: TrendBasis, DesignMatrix, build_design
"""

from cblue.model_samples import MomentSummary, SampleSet, distinct_count, moments
from cblue.model_trend import DesignMatrix, TrendBasis, build_design

__all__ = [
    "DesignMatrix",
    "MomentSummary",
    "SampleSet",
    "TrendBasis",
    "build_design",
    "distinct_count",
    "moments",
]
