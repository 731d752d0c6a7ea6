#!/usr/bin/env python3
"""Exception hierarchy for cblue.

Every error raised deliberately by the package derives from BlueError so
the command-line layer can map failures to exit codes:

- SampleError and PreconditionError: bad input, exit code 1
- NumericalError and its subclasses: singular or degenerate systems, exit code 2
"""


class BlueError(Exception):
    """Base class for all cblue errors."""

    pass


class SampleError(BlueError):
    """
    Exception raised for an invalid sample set.

    Raised when abscissas and values differ in length, the set is empty,
    or an entry is not a finite real number.
    """

    pass


class CsvFormatError(SampleError):
    """
    Exception raised when a signal CSV file cannot be parsed.

    Attributes:
        path: The file being read.
        line: 1-based physical line number of the offending record, or None
            when the problem is not tied to a single line.
    """

    def __init__(self, path: str, message: str, line: int | None = None) -> None:
        """Store location details and build the message."""
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")


class PreconditionError(BlueError):
    """Exception raised when an operation precondition does not hold."""

    pass


class NumericalError(BlueError):
    """
    Exception raised for numerical failures.

    Used directly for internal inconsistencies such as a negative abscissa
    variance well beyond round-off.
    """

    pass


class SingularSystemError(NumericalError):
    """
    Exception raised for a rank-deficient design or singular Gram matrix.

    The message names the basis that could not be fitted.
    """

    pass


class DegenerateAbscissaError(SingularSystemError):
    """Exception raised when the abscissa spread sigma_n is zero."""

    pass
