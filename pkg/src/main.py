import argparse
import logging
import sys
from typing import List, Optional, TextIO

from src.cli.cli_constants import CliConstants
from src.cli.commands.eval_command import EvalCommand
from src.cli.commands.simulate_command import SimulateCommand
from src.cli.commands.verify_command import VerifyCommand
from src.exceptions import FractionalError, IoError, SeedError
from src.montecarlo.montecarlo_constants import MonteCarloConstants
from src.verify.verify_constants import VerifyConstants
from src.verify.verify_enums.tolerance_profile import ToleranceProfile

logger = logging.getLogger(__name__)

COMMANDS = (EvalCommand(), SimulateCommand(), VerifyCommand())


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # with suppress the flags carry no defaults, so values given before the subcommand survive
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--seed", type=int, default=default(None),
                        help=f"64-bit seed; default {MonteCarloConstants.DEFAULT_SEED} for simulate, "
                             f"{VerifyConstants.DEFAULT_SEED} for verify")
    parser.add_argument("--workers", type=int, default=default(MonteCarloConstants.DEFAULT_WORKERS),
                        help="worker streams; part of the reproducibility key together with the seed")
    parser.add_argument("--out", default=default(None), help="output path, standard output when omitted")
    parser.add_argument("--profile", choices=[profile.name for profile in ToleranceProfile],
                        default=default(ToleranceProfile.strict.name), help="tolerance profile of verify")
    parser.add_argument("--n-samples", type=int, dest="n_samples", default=default(None),
                        help="samples per statistical check")
    parser.add_argument("--log-level", default=default(CliConstants.DEFAULT_LOG_LEVEL),
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--no-timing", action="store_true", dest="no_timing", default=default(False),
                        help="report wall_time_s as 0 so that reports are byte-identical across runs")


def build_parser() -> argparse.ArgumentParser:
    """
    Parser with the subcommands eval, simulate and verify; the global flags go before or after the subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(prog="fracwright",
                                     description="Wright-function laws of fractional transport: evaluation, "
                                                 "simulation and verification. Defaults: t = 1, exponents 0.5.")
    _add_global_flags(parser, suppress=False)
    subparsers = parser.add_subparsers(dest="command_name", required=True)
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def _resolve_seed(args: argparse.Namespace) -> None:
    if args.seed is None:
        args.seed = VerifyConstants.DEFAULT_SEED if args.command_name == "verify" else MonteCarloConstants.DEFAULT_SEED
    if not 0 <= args.seed <= MonteCarloConstants.MAX_SEED:
        raise SeedError(f"seed must be a 64-bit unsigned integer: {args.seed}")
    if args.workers < 1:
        raise SeedError(f"worker count must be a positive integer: {args.workers}")


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run the command line and return its exit status: 0 success, 1 verification failure, 2 usage, 3 I/O.
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return CliConstants.EXIT_OK if exit_request.code in (0, None) else CliConstants.EXIT_USAGE
    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        _resolve_seed(args)
        return args.command.run(args, stdout)
    except IoError as error:
        logger.error("%s", error)
        return CliConstants.EXIT_IO
    except FractionalError as error:
        logger.error("%s: %s", type(error).__name__, error)
        return CliConstants.EXIT_USAGE


def main_function():
    sys.exit(main())


if __name__ == "__main__":
    main_function()
