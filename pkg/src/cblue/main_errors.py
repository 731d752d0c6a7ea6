"""Mapping of package errors to CLI exit codes."""
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager

import click

from cblue.blue_constants import EXIT_NUMERICAL, EXIT_USAGE
from cblue.blue_errors import NumericalError, PreconditionError, SampleError

logger = logging.getLogger(__name__)


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Print package errors to stderr and exit with the matching code.

    Input errors (bad samples, unreadable CSV, violated preconditions) exit
    with code 1; singular or degenerate systems exit with code 2.
    """
    try:
        yield
    except (SampleError, PreconditionError) as e:
        logger.debug("Input error", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except NumericalError as e:
        logger.debug("Numerical error", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_NUMERICAL)
