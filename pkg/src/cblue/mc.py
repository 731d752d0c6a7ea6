#!/usr/bin/env python3
"""Monte Carlo validation harness.

This module re-exports the validation components from submodules for
convenient imports. The actual implementations are in:
- mc_state: WhiteNoiseModel, SimulationConfig, report types, report_to_dict
- mc_simulate: simulate_field and seeded replicate substreams
- mc_variance: empirical_mse, run_empirical_mse, empirical_coefficients
- mc_oracle: oracle_min_weights
"""

from cblue.mc_oracle import oracle_min_weights
from cblue.mc_simulate import replicate_generator, simulate_field
from cblue.mc_state import (
    CoefficientReport,
    EmpiricalVarianceReport,
    SimulationConfig,
    WhiteNoiseModel,
    report_to_dict,
)
from cblue.mc_variance import empirical_coefficients, empirical_mse, run_empirical_mse

__all__ = [
    "CoefficientReport",
    "EmpiricalVarianceReport",
    "SimulationConfig",
    "WhiteNoiseModel",
    "empirical_coefficients",
    "empirical_mse",
    "oracle_min_weights",
    "replicate_generator",
    "report_to_dict",
    "run_empirical_mse",
    "simulate_field",
]
