#!/usr/bin/env python3
"""Best linear unbiased estimation engine.

This module re-exports the estimation operations from submodules for
convenient imports. The actual implementations are in:
- blue_fit: BlueFit, ols_fit, linear_closed_form
- blue_kriging: NoiseModel, KrigingSolution, kriging_weights, predict,
  minimized_variance, prediction_mse
- blue_zero: normalized_variance_quadratic, zero_variance_points
- blue_van_hecke: VanHeckeEstimate, van_hecke_estimate
"""

from cblue.blue_fit import BlueFit, linear_closed_form, ols_fit
from cblue.blue_kriging import (
    KrigingSolution,
    NoiseModel,
    kriging_weights,
    minimized_variance,
    predict,
    prediction_mse,
)
from cblue.blue_van_hecke import VanHeckeEstimate, van_hecke_estimate
from cblue.blue_zero import normalized_variance_quadratic, zero_variance_points

__all__ = [
    "BlueFit",
    "KrigingSolution",
    "NoiseModel",
    "VanHeckeEstimate",
    "kriging_weights",
    "linear_closed_form",
    "minimized_variance",
    "normalized_variance_quadratic",
    "ols_fit",
    "predict",
    "prediction_mse",
    "van_hecke_estimate",
    "zero_variance_points",
]
