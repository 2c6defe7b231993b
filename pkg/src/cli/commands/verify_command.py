import argparse
import logging
from typing import TextIO

from src.cli.cli_constants import CliConstants
from src.cli.commands.command import Command
from src.verify.runner import run_suite
from src.verify.verify_enums.suite_type import SuiteType
from src.verify.verify_enums.tolerance_profile import ToleranceProfile

logger = logging.getLogger(__name__)


class VerifyCommand(Command):
    """
    Run a verification suite and emit its JSON report; the exit status is 0 only when every check passed.
    """

    @property
    def name(self) -> str:
        return "verify"

    @property
    def description(self) -> str:
        return "run a verification suite and print its JSON report"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("suite", choices=[suite.value for suite in SuiteType])

    def run(self, args: argparse.Namespace, stdout: TextIO) -> int:
        report = run_suite(SuiteType(args.suite), seed=args.seed, n_samples=args.n_samples,
                           profile=ToleranceProfile[args.profile], worker_count=args.workers,
                           record_timing=not args.no_timing)
        text = report.write(args.out)
        if args.out is None:
            stdout.write(text)
        for failure in report.failures():
            logger.warning("failed: %s", failure)
        return CliConstants.EXIT_OK if report.passed else CliConstants.EXIT_VERIFICATION_FAILED
