import argparse
import logging
import sys
from typing import TextIO

from src.cli.cli_constants import CliConstants
from src.cli.cli_enums.simulated_process import SimulatedProcess
from src.cli.cli_utils import format_float, open_output, parse_direction
from src.cli.commands.command import Command
from src.exceptions import DomainError, UsageError
from src.laws.frac_params import FracParams
from src.montecarlo.batch_config import BatchConfig
from src.montecarlo.sample_batch import SampleBatch
from src.montecarlo.sampling import (sample_advdiff, sample_frac_poisson_transport, sample_inverse_subordinator,
                                     sample_isotropic_stable, sample_ratio, sample_stable_subordinator,
                                     sample_subordinated_brownian)

logger = logging.getLogger(__name__)


class SimulateCommand(Command):
    """
    Draw a reproducible batch of one process and write it as CSV, followed by a summary line.
    """

    @property
    def name(self) -> str:
        return "simulate"

    @property
    def description(self) -> str:
        return "sample a process at time t"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("process", choices=[process.value for process in SimulatedProcess])
        parser.add_argument("-n", "--n", type=int, default=CliConstants.DEFAULT_SAMPLES, dest="n",
                            help="number of samples, default 100000")
        parser.add_argument("--alpha", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--beta", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--theta", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--t", type=float, default=CliConstants.DEFAULT_TIME, help="time, default 1")
        parser.add_argument("--dim", type=int, default=1, help="dimension of the isotropic stable process")
        parser.add_argument("--a", help="direction as comma-separated components")
        parser.add_argument("--rate", type=float, default=1.0, help="Poisson rate, default 1")
        parser.add_argument("--tau", type=float, default=1.0, help="Poisson jump size, default 1")

    def run(self, args: argparse.Namespace, stdout: TextIO) -> int:
        process = SimulatedProcess(args.process)
        try:
            config = BatchConfig(args.n, args.seed, args.workers)
            batch = draw_batch(process, args, config)
        except DomainError as error:
            raise UsageError(f"invalid parameters for {process.value}: {error}") from error
        with open_output(args.out, stdout) as stream:
            batch.write_csv(stream)
        # the summary shares standard output only when the samples went to a file
        summary_stream = stdout if args.out is not None else sys.stderr
        summary_stream.write(summary_line(batch) + "\n")
        return CliConstants.EXIT_OK


def draw_batch(process: SimulatedProcess, args: argparse.Namespace, config: BatchConfig) -> SampleBatch:
    logger.info("sampling %s at t=%s with %s", process.value, args.t, config)
    if process is SimulatedProcess.subordinator:
        return sample_stable_subordinator(args.alpha, args.t, config)
    if process is SimulatedProcess.inverse:
        return sample_inverse_subordinator(args.beta, args.t, config)
    if process is SimulatedProcess.stable:
        return sample_isotropic_stable(args.theta, args.t, args.dim, config)
    if process is SimulatedProcess.ratio:
        return sample_ratio(args.beta, args.t, config)
    if process is SimulatedProcess.advdiff:
        params = FracParams(args.alpha, args.beta, args.theta)
        return sample_advdiff(params, parse_direction(args.a, require_non_negative=False), args.t, config)
    if process is SimulatedProcess.brownian:
        return sample_subordinated_brownian(args.beta, args.t, parse_direction(args.a, require_non_negative=False),
                                            config)
    params = FracParams(args.alpha, args.beta, args.theta, rate=args.rate, tau=args.tau)
    direction = None if args.a is None else parse_direction(args.a, require_non_negative=False)
    return sample_frac_poisson_transport(params, direction, args.t, config)


def summary_line(batch: SampleBatch) -> str:
    parts = [f"mean_{k}={format_float(mean)} std_{k}={format_float(std)}"
             for k, (mean, std) in enumerate(batch.summary())]
    return f"{batch.process_tag.value} t={format_float(batch.t)} n={batch.n_samples} " + " ".join(parts)
