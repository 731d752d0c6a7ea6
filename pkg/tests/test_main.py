"""Tests for CLI argument handling in main.py."""
import logging
from pathlib import Path

from click.testing import CliRunner
from pytest_mock import MockerFixture

from cblue.main import main
from cblue.main_logging import configure_logging


class TestCLIArguments:
    """Tests for command-line argument validation."""

    def test_help_exits_with_code_0(self):
        """Test that --help exits cleanly with code 0."""
        runner = CliRunner()
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        for command in ("estimate", "weights", "variance", "simulate", "example"):
            assert command in result.output

    def test_unknown_command_exits_with_code_1(self):
        """Test that an unknown subcommand is a usage error."""
        runner = CliRunner()
        result = runner.invoke(main, ["integrate"])
        assert result.exit_code == 1
        assert "No such command" in result.output

    def test_missing_at_exits_with_code_1(self, example_csv: Path):
        """Test that weights without --at gives a usage error."""
        runner = CliRunner()
        result = runner.invoke(main, ["weights", str(example_csv)])
        assert result.exit_code == 1
        assert "--at" in result.output

    def test_malformed_at_exits_with_code_1(self, example_csv: Path):
        """Test that --at with three parts gives a usage error."""
        runner = CliRunner()
        result = runner.invoke(main, ["variance", str(example_csv), "--at", "1,2,3"])
        assert result.exit_code == 1
        assert "RE or RE,IM" in result.output

    def test_negative_degree_exits_with_code_1(self, example_csv: Path):
        """Test that a negative degree is rejected by option parsing."""
        runner = CliRunner()
        result = runner.invoke(main, ["weights", str(example_csv), "--at", "0", "--degree", "-1"])
        assert result.exit_code == 1

    def test_both_sources_exits_with_code_1(self, example_csv: Path):
        """Test that --n and --csv together are mutually exclusive."""
        runner = CliRunner()
        result = runner.invoke(
            main,
            ["simulate", "--n", "11", "--csv", str(example_csv), "--beta", "0", "--at", "0.5"],
        )
        assert result.exit_code == 1
        assert "mutually exclusive" in result.output

    def test_no_source_exits_with_code_1(self):
        """Test that simulate needs --n or --csv."""
        runner = CliRunner()
        result = runner.invoke(main, ["simulate", "--beta", "0", "--at", "0.5"])
        assert result.exit_code == 1
        assert "must be specified" in result.output

    def test_malformed_beta_exits_with_code_1(self):
        """Test that a non-numeric --beta gives a usage error."""
        runner = CliRunner()
        result = runner.invoke(main, ["simulate", "--n", "5", "--beta", "1,x", "--at", "0.5"])
        assert result.exit_code == 1
        assert "comma-separated" in result.output


class TestLogging:
    """Tests for --verbose handling."""

    def test_verbose_sets_debug_level(self, mocker: MockerFixture):
        """Test that verbose configures DEBUG logging."""
        basic_config = mocker.patch("cblue.main_logging.logging.basicConfig")
        configure_logging(True)
        assert basic_config.call_args.kwargs["level"] == logging.DEBUG

    def test_quiet_sets_warning_level(self, mocker: MockerFixture):
        """Test that the default configures WARNING logging."""
        basic_config = mocker.patch("cblue.main_logging.logging.basicConfig")
        configure_logging(False)
        assert basic_config.call_args.kwargs["level"] == logging.WARNING

    def test_verbose_flag_reaches_logging(self, mocker: MockerFixture):
        """Test that the group passes --verbose to configure_logging."""
        configure = mocker.patch("cblue.main.configure_logging")
        runner = CliRunner()
        result = runner.invoke(main, ["--verbose", "example"])
        assert result.exit_code == 0
        configure.assert_called_once_with(True)
