#!/usr/bin/env python3
"""Seeded random instances shared by the property tests."""
import numpy as np

from cblue.model_samples import SampleSet


def random_samples(rng: np.random.Generator, degree: int, max_n: int = 20) -> SampleSet:
    """Draw a sample set with distinct grid abscissas in [-2, 2]."""
    n = int(rng.integers(degree + 2, max_n + 1))
    grid = rng.choice(np.arange(-40, 41), size=n, replace=False) / 20.0
    return SampleSet(grid, rng.standard_normal(n))


def random_point(rng: np.random.Generator) -> complex:
    """Draw a complex evaluation point with both parts in [-1.5, 1.5]."""
    return complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
