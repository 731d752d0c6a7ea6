"""CLI handling for cblue.

This module provides the command-line interface for cblue, handling
argument parsing via click, logging configuration, and dispatching to the
estimation engine and the Monte Carlo harness.

Usage:
    cblue [--verbose] estimate CSV [--digits N] [--json]
    cblue [--verbose] weights CSV --at RE[,IM] [--degree D] [--digits N] [--json]
    cblue [--verbose] variance CSV --at RE[,IM] [--sigma2 S] [--degree D] [--significant N] [--json]
    cblue [--verbose] simulate (--n N | --csv CSV) --beta B0[,B1...] --at X [--sigma S]
                               [--reps R] [--seed S] [--workers W] [--json]
    cblue [--verbose] example [--json]

Exit codes: 0 success, 1 usage or input error, 2 numerical error,
3 self-test mismatch.
"""

import logging
import sys

import click

from cblue.blue_constants import DEFAULT_DIGITS, DEFAULT_REPLICATES, DEFAULT_SEED, EXIT_SELF_TEST
from cblue.main_errors import exit_on_error
from cblue.main_logging import configure_logging
from cblue.main_options import (
    EVALUATION_POINT,
    FLOAT_LIST,
    ZERO_PLUS,
    ExitCodeGroup,
    MutuallyExclusiveOption,
)

logger = logging.getLogger(__name__)

# Digits for weight tables and variances, which are rarely near two decimals.
DETAIL_DIGITS: int = 6

_csv_argument = click.argument("csv_path", metavar="CSV", type=click.Path(dir_okay=False))
_json_option = click.option("--json", "as_json", is_flag=True, help="Emit full-precision JSON")


def _resolve_point(samples, at) -> complex:
    """Return the evaluation point, expanding the zero+/zero- keywords."""
    if isinstance(at, complex):
        return at
    from cblue.blue_zero import zero_variance_points
    from cblue.model_samples import moments

    plus, minus = zero_variance_points(moments(samples))
    return plus if at == ZERO_PLUS else minus


@click.group(cls=ExitCodeGroup)
@click.option(
    "--verbose",
    is_flag=True,
    help="Enable DEBUG-level logging",
)
def main(verbose: bool) -> None:
    """Best linear unbiased estimation of signals with polynomial trend over white noise."""
    configure_logging(verbose)


@main.command("estimate")
@_csv_argument
@click.option("--digits", type=click.IntRange(0, 17), default=DEFAULT_DIGITS, show_default=True,
              help="Decimal places in the text report")
@_json_option
def cmd_estimate(csv_path: str, digits: int, as_json: bool) -> None:
    """Estimate the constant mean with its real and imaginary errors."""
    from cblue.blue_van_hecke import van_hecke_estimate
    from cblue.report import EstimateReport, dumps
    from cblue.sample_io import read_samples_csv

    with exit_on_error():
        samples = read_samples_csv(csv_path)
        report = EstimateReport.from_estimate(van_hecke_estimate(samples))
    click.echo(dumps(report.to_json_dict()) if as_json else report.render_text(digits))


@main.command("weights")
@_csv_argument
@click.option("--at", "at", type=EVALUATION_POINT, required=True,
              help="Evaluation point RE[,IM], or zero+ / zero-")
@click.option("--degree", type=click.IntRange(min=0), default=1, show_default=True,
              help="Polynomial trend degree")
@click.option("--digits", type=click.IntRange(0, 17), default=DETAIL_DIGITS, show_default=True,
              help="Decimal places in the weight table")
@_json_option
def cmd_weights(csv_path: str, at, degree: int, digits: int, as_json: bool) -> None:
    """Print kriging weights, Lagrange multipliers and constraint residuals."""
    from cblue.blue_kriging import kriging_weights
    from cblue.model_trend import TrendBasis
    from cblue.report import dumps, render_weights, weights_to_json_dict
    from cblue.sample_io import read_samples_csv

    with exit_on_error():
        samples = read_samples_csv(csv_path)
        solution = kriging_weights(samples, TrendBasis(degree), _resolve_point(samples, at))
    click.echo(dumps(weights_to_json_dict(solution)) if as_json else render_weights(solution, digits))


@main.command("variance")
@_csv_argument
@click.option("--at", "at", type=EVALUATION_POINT, required=True,
              help="Evaluation point RE[,IM], or zero+ / zero-")
@click.option("--sigma2", type=click.FloatRange(min=0.0), default=1.0, show_default=True,
              help="Noise variance")
@click.option("--degree", type=click.IntRange(min=0), default=1, show_default=True,
              help="Polynomial trend degree")
@click.option("--significant", type=click.IntRange(1, 17), default=DETAIL_DIGITS, show_default=True,
              help="Significant digits in the text report")
@_json_option
def cmd_variance(csv_path: str, at, sigma2: float, degree: int, significant: int, as_json: bool) -> None:
    """Print the minimized estimation variance at a real or complex point."""
    from cblue.blue_kriging import NoiseModel, minimized_variance
    from cblue.model_trend import TrendBasis
    from cblue.report import complex_to_dict, dumps, render_variance
    from cblue.sample_io import read_samples_csv

    with exit_on_error():
        samples = read_samples_csv(csv_path)
        point = _resolve_point(samples, at)
        variance = minimized_variance(samples, TrendBasis(degree), point, NoiseModel(sigma2))
    if as_json:
        click.echo(dumps({"x_j": complex_to_dict(point), "sigma2": sigma2,
                          "variance": complex_to_dict(variance)}))
    else:
        click.echo(render_variance(point, variance, significant))


@main.command("simulate")
@click.option("--n", "n", type=click.IntRange(min=1), cls=MutuallyExclusiveOption,
              not_required_if=["csv"], help="Use abscissas 1..N")
@click.option("--csv", "csv", type=click.Path(dir_okay=False), cls=MutuallyExclusiveOption,
              not_required_if=["n"], help="Take abscissas from a CSV file")
@click.option("--beta", type=FLOAT_LIST, required=True,
              help="True trend coefficients, offset first; degree is their count minus one")
@click.option("--sigma", type=float, default=1.0, show_default=True, help="Noise standard deviation")
@click.option("--at", "at", type=float, required=True, help="Real off-sample evaluation point")
@click.option("--reps", type=click.IntRange(min=1), default=DEFAULT_REPLICATES, show_default=True,
              help="Monte Carlo replicates")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=DEFAULT_SEED, show_default=True,
              help="Generator seed")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Concurrent replicate blocks")
@_json_option
def cmd_simulate(n: int | None, csv: str | None, beta: tuple[float, ...], sigma: float, at: float,
                 reps: int, seed: int, workers: int, as_json: bool) -> None:
    """Compare the simulated prediction MSE with its theoretical value."""
    import asyncio

    from cblue.mc_state import SimulationConfig, WhiteNoiseModel, report_to_dict
    from cblue.mc_variance import empirical_mse, run_empirical_mse
    from cblue.model_trend import TrendBasis
    from cblue.report import dumps, render_simulation
    from cblue.sample_io import read_samples_csv

    if n is None and csv is None:
        raise click.UsageError("Either --n or --csv must be specified")

    with exit_on_error():
        abscissas = [float(i) for i in range(1, n + 1)] if n is not None else \
            list(read_samples_csv(csv).abscissas)
        basis = TrendBasis(len(beta) - 1)
        model = WhiteNoiseModel(true_beta=beta, sigma=sigma)
        config = SimulationConfig(replicates=reps, seed=seed)
        logger.debug("Simulating %d replicates with %d workers", reps, workers)
        if workers > 1:
            report = asyncio.run(run_empirical_mse(abscissas, basis, model, at, config, workers))
        else:
            report = empirical_mse(abscissas, basis, model, at, config)
    click.echo(dumps(report_to_dict(report)) if as_json else render_simulation(report))


@main.command("example")
@_json_option
def cmd_example(as_json: bool) -> None:
    """Rerun the embedded 11-point example and check its published figures."""
    from cblue.blue_van_hecke import van_hecke_estimate
    from cblue.example_table import (
        EXPECTED_DIGITS,
        EXPECTED_IMAGINARY_ERROR,
        EXPECTED_MEAN,
        EXPECTED_STANDARD_ERROR,
        example_samples,
    )
    from cblue.report import EstimateReport, dumps

    with exit_on_error():
        report = EstimateReport.from_estimate(van_hecke_estimate(example_samples()))
    click.echo(dumps(report.to_json_dict()) if as_json else report.render_text(EXPECTED_DIGITS))

    expected = {
        "mean": EXPECTED_MEAN,
        "standard_error": EXPECTED_STANDARD_ERROR,
        "imaginary_error": EXPECTED_IMAGINARY_ERROR,
    }
    actual = report.rounded(EXPECTED_DIGITS)
    mismatches = [key for key in expected if actual[key] != expected[key]]
    if mismatches:
        for key in mismatches:
            click.echo(f"Error: {key} is {actual[key]}, expected {expected[key]}", err=True)
        sys.exit(EXIT_SELF_TEST)
