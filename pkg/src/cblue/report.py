#!/usr/bin/env python3
"""Report assembly and rendering for the command-line interface.

Rendering to text rounds to a requested number of digits; JSON output
always carries full precision, with complex numbers as {"re": .., "im": ..}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from cblue.blue_kriging import KrigingSolution
from cblue.blue_van_hecke import VanHeckeEstimate
from cblue.mc_state import EmpiricalVarianceReport, report_to_dict


def complex_to_dict(value: complex) -> dict[str, float]:
    """Encode a complex number as {"re": .., "im": ..}."""
    return {"re": float(value.real), "im": float(value.imag)}


def format_complex(value: complex, digits: int) -> str:
    """Render a complex number as `a + bi` with fixed decimals."""
    sign = "-" if value.imag < 0 else "+"
    return f"{value.real:.{digits}f} {sign} {abs(value.imag):.{digits}f}i"


def dumps(payload: dict[str, Any]) -> str:
    """Serialize a report payload deterministically."""
    return json.dumps(payload, indent=2)


@dataclass(frozen=True)
class EstimateReport:
    """
    Constant-mean estimate as reported by the `estimate` command.

    Attributes:
        mean: Arithmetic mean (real part of the estimate).
        imaginary_error: Magnitude of the imaginary error.
        standard_error: Population standard error of the mean.
        zero_variance_points: Both complex evaluation points, +i branch first.
        slope: Fitted slope.
        offset: Fitted offset.
        n: Number of samples.
    """

    mean: float
    imaginary_error: float
    standard_error: float
    zero_variance_points: tuple[complex, complex]
    slope: float
    offset: float
    n: int

    @classmethod
    def from_estimate(cls, estimate: VanHeckeEstimate) -> EstimateReport:
        """Build the report from an engine estimate."""
        return cls(
            mean=estimate.mean,
            imaginary_error=estimate.imaginary_error,
            standard_error=estimate.standard_error,
            zero_variance_points=estimate.zero_variance_points,
            slope=estimate.slope,
            offset=estimate.offset,
            n=estimate.n,
        )

    def rounded(self, digits: int) -> dict[str, str]:
        """Return the three headline figures rendered with `digits` decimals."""
        return {
            "mean": f"{self.mean:.{digits}f}",
            "standard_error": f"{self.standard_error:.{digits}f}",
            "imaginary_error": f"{self.imaginary_error:.{digits}f}",
        }

    def to_json_dict(self) -> dict[str, Any]:
        """Full-precision JSON payload."""
        return {
            "n": self.n,
            "mean": self.mean,
            "standard_error": self.standard_error,
            "imaginary_error": self.imaginary_error,
            "slope": self.slope,
            "offset": self.offset,
            "zero_variance_points": [complex_to_dict(p) for p in self.zero_variance_points],
        }

    def render_text(self, digits: int) -> str:
        """Human-readable report rounded to `digits` decimals."""
        figures = self.rounded(digits)
        plus, minus = self.zero_variance_points
        lines = [
            f"samples               {self.n}",
            f"mean                  {figures['mean']}",
            f"standard error        +/- {figures['standard_error']}",
            f"imaginary error       +/- {figures['imaginary_error']}",
            f"estimate              {figures['mean']} +/- {figures['imaginary_error']}i",
            f"offset                {self.offset:.{digits}f}",
            f"slope                 {self.slope:.{digits}f}",
            f"zero-variance points  {format_complex(plus, digits)}, {format_complex(minus, digits)}",
        ]
        return "\n".join(lines)


def weights_to_json_dict(solution: KrigingSolution) -> dict[str, Any]:
    """Full-precision JSON payload for a kriging solution."""
    return {
        "x_j": complex_to_dict(solution.x_j),
        "weights": [complex_to_dict(complex(w)) for w in solution.weights],
        "multipliers": [complex_to_dict(complex(m)) for m in solution.multipliers],
        "residuals": constraint_residuals(solution),
    }


def constraint_residuals(solution: KrigingSolution) -> dict[str, float]:
    """Largest constraint violations of a kriging solution."""
    return {
        "sum_weights_minus_one": float(abs(np.sum(solution.weights) - 1.0)),
        "unbiasedness": float(np.max(np.abs(solution.unbiasedness_residual()))),
        "multiplier_link": float(np.max(np.abs(solution.multiplier_residual()))),
    }


def render_weights(solution: KrigingSolution, digits: int) -> str:
    """Weight and multiplier table with constraint residuals."""
    lines = [f"x_j = {format_complex(solution.x_j, digits)}", "", f"{'i':>4}  {'re':>16}  {'im':>16}"]
    for index, weight in enumerate(solution.weights, start=1):
        lines.append(f"{index:>4}  {weight.real:>16.{digits}f}  {weight.imag:>16.{digits}f}")
    lines += ["", f"{'k':>4}  {'mu re':>16}  {'mu im':>16}"]
    for index, multiplier in enumerate(solution.multipliers, start=1):
        lines.append(f"{index:>4}  {multiplier.real:>16.{digits}f}  {multiplier.imag:>16.{digits}f}")
    lines.append("")
    for name, value in constraint_residuals(solution).items():
        lines.append(f"residual {name:<22} {value:.3e}")
    return "\n".join(lines)


def _format_general(value: complex, significant: int) -> str:
    """Render a complex number as `a + bi` with `significant` significant digits."""
    sign = "-" if value.imag < 0 else "+"
    return f"{value.real:.{significant}g} {sign} {abs(value.imag):.{significant}g}i"


def render_variance(x_j: complex, variance: complex, significant: int) -> str:
    """Complex variance rendered with `significant` significant digits."""
    return f"x_j       {_format_general(x_j, significant)}\nvariance  {_format_general(variance, significant)}"


def render_simulation(report: EmpiricalVarianceReport) -> str:
    """Key-value rendering of an empirical variance report."""
    return "\n".join(f"{key:<20}{value}" for key, value in report_to_dict(report).items())
