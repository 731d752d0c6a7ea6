"""Click helpers: exit-code mapping, mutual exclusion and value types."""
import sys

import click

from cblue.blue_constants import EXIT_OK, EXIT_USAGE

# Keywords accepted by --at in place of RE[,IM]: the zero-variance points.
ZERO_PLUS: str = "zero+"
ZERO_MINUS: str = "zero-"


class ExitCodeGroup(click.Group):
    """Click group that reports usage errors with exit code 1 instead of 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        """Run the group, remapping click's usage-error exit code."""
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode, **extra)
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(code if isinstance(code, int) else EXIT_OK)


def _check_mutual_exclusion(name: str, not_required_if: list[str], opts: dict) -> None:
    """Raise UsageError if mutually exclusive options are both present.

    Args:
        name: Name of the current option.
        not_required_if: List of option names that are mutually exclusive.
        opts: Dictionary of parsed options.

    Raises:
        click.UsageError: If both options are present.
    """
    for other in not_required_if:
        if other in opts:
            msg = f"Options --{name} and --{other} are mutually exclusive"
            raise click.UsageError(msg)


class MutuallyExclusiveOption(click.Option):
    """Click option that enforces mutual exclusivity with another option."""

    def __init__(self, *args, **kwargs):
        """Initialize with not_required_if parameter for mutual exclusion."""
        self.not_required_if = kwargs.pop("not_required_if", [])
        super().__init__(*args, **kwargs)

    def handle_parse_result(self, ctx, opts, args):
        """Check mutual exclusion before the value is stored."""
        if self.name in opts:
            _check_mutual_exclusion(self.name, self.not_required_if, opts)
        return super().handle_parse_result(ctx, opts, args)


class EvaluationPointType(click.ParamType):
    """Evaluation point given as RE[,IM] or as zero+ / zero-."""

    name = "RE[,IM]"

    def convert(self, value, param, ctx):
        """Return a complex number, or the zero+/zero- keyword unchanged."""
        if isinstance(value, complex) or value in (ZERO_PLUS, ZERO_MINUS):
            return value
        parts = str(value).split(",")
        if len(parts) > 2:
            self.fail(f"{value!r} is not RE or RE,IM", param, ctx)
        try:
            numbers = [float(part) for part in parts]
        except ValueError:
            self.fail(f"{value!r} is not RE or RE,IM", param, ctx)
        return complex(numbers[0], numbers[1] if len(numbers) == 2 else 0.0)


class FloatListType(click.ParamType):
    """Comma-separated list of floats, e.g. 1,0.5."""

    name = "X[,X...]"

    def convert(self, value, param, ctx):
        """Return a tuple of floats."""
        if isinstance(value, tuple):
            return value
        try:
            return tuple(float(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)


EVALUATION_POINT = EvaluationPointType()
FLOAT_LIST = FloatListType()
