import argparse
import csv
import logging
import math
from typing import Callable, TextIO, Union

import numpy as np

from src.cli.cli_constants import CliConstants
from src.cli.cli_enums.eval_function import EvalFunction
from src.cli.cli_enums.grid_variable import GridVariable
from src.cli.cli_utils import format_float, open_output, parse_direction
from src.cli.commands.command import Command
from src.cli.grid_request import GridRequest
from src.exceptions import DomainError, FractionalError, UsageError
from src.laws.characteristic_functions import charfn_advdiff
from src.laws.densities import density_h, density_l, density_lamperti, density_U
from src.laws.eval_point import EvalPoint
from src.laws.frac_params import FracParams, check_exponent, check_time
from src.laws.frac_poisson import pmf_frac_poisson
from src.laws.solutions import density_p_multivariate, solution_g, solution_Un, solution_v
from src.special_functions.function_specs import MLSpec, WrightSpec
from src.special_functions.mittag_leffler import mittag_leffler
from src.special_functions.wright import wright

logger = logging.getLogger(__name__)

Value = Union[float, complex]
Evaluator = Callable[[float], Value]

_SPACE_TIME = {EvalFunction.l, EvalFunction.h, EvalFunction.U, EvalFunction.lamperti, EvalFunction.v,
               EvalFunction.p, EvalFunction.Un, EvalFunction.g}
_DIRECTED = {EvalFunction.v, EvalFunction.p, EvalFunction.Un, EvalFunction.g, EvalFunction.charfn}


class EvalCommand(Command):
    """
    Tabulate a special function, law or solution over a grid as ``grid_value,result[,result_imag]`` CSV.
    """

    @property
    def name(self) -> str:
        return "eval"

    @property
    def description(self) -> str:
        return "evaluate a function, density or solution on a grid"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("function", choices=[function.value for function in EvalFunction])
        parser.add_argument("--grid", required=True, help="variable:start:stop:points, variable in x, t, xi, z")
        parser.add_argument("--alpha", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--beta", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--theta", type=float, default=CliConstants.DEFAULT_EXPONENT, help="default 0.5")
        parser.add_argument("--mu", type=float, default=0.0, help="Wright parameter mu, default 0")
        parser.add_argument("--rho", type=float, default=1.0, help="Wright parameter rho, default 1")
        parser.add_argument("--gamma", type=float, default=1.0, help="second Mittag-Leffler parameter, default 1")
        parser.add_argument("--nu", type=float, help="boundary exponent of v")
        parser.add_argument("--t", type=float, default=CliConstants.DEFAULT_TIME, help="time, default 1")
        parser.add_argument("--x", type=float, default=0.0, help="projected coordinate when the grid runs over t")
        parser.add_argument("--xi", type=float, default=0.0, help="frequency along a when the grid runs over t")
        parser.add_argument("--a", help="direction as comma-separated components")
        parser.add_argument("--k", type=int, help="event count of fracpoisson-pmf")
        parser.add_argument("--rate", type=float, default=1.0, help="Poisson rate, default 1")

    def run(self, args: argparse.Namespace, stdout: TextIO) -> int:
        function = EvalFunction(args.function)
        fixed = {"t": args.t, "x": args.x, "xi": args.xi}
        grid = GridRequest.parse(args.grid, fixed)
        fixed.pop(grid.variable.value, None)
        try:
            evaluator = build_evaluator(function, grid.variable, args)
        except DomainError as error:
            raise UsageError(f"invalid parameters for {function.value}: {error}") from error
        with open_output(args.out, stdout) as stream:
            write_table(function, grid, evaluator, stream)
        return CliConstants.EXIT_OK


def _require(variable: GridVariable, function: EvalFunction, *allowed: GridVariable) -> None:
    if variable not in allowed:
        raise UsageError(f"{function.value} cannot be tabulated over {variable.value}; "
                         f"use one of {[option.value for option in allowed]}")


def build_evaluator(function: EvalFunction, variable: GridVariable, args: argparse.Namespace) -> Evaluator:
    """
    Map a grid value to the function value, validating the parameters up front.
    """
    if function is EvalFunction.wright:
        _require(variable, function, GridVariable.z, GridVariable.x)
        spec = WrightSpec(args.mu, args.rho)
        return lambda value: wright(spec, value)
    if function is EvalFunction.ml:
        _require(variable, function, GridVariable.z, GridVariable.x)
        spec = MLSpec(args.beta, args.gamma)
        return lambda value: mittag_leffler(spec, value)
    if function is EvalFunction.charfn:
        _require(variable, function, GridVariable.xi, GridVariable.t)
        params = FracParams(args.alpha, args.beta, args.theta)
        direction = parse_direction(args.a, require_non_negative=False)
        if variable is GridVariable.xi:
            t = check_time(args.t)
            return lambda value: charfn_advdiff(params, direction, direction.point_at(value), t)
        xi = direction.point_at(args.xi)
        return lambda value: charfn_advdiff(params, direction, xi, value)
    if function is EvalFunction.fracpoisson_pmf:
        _require(variable, function, GridVariable.t, GridVariable.x)
        beta = check_exponent("beta", args.beta)
        if variable is GridVariable.t:
            if args.k is None:
                raise UsageError("fracpoisson-pmf over t needs --k")
            return lambda value: pmf_frac_poisson(beta, args.rate, args.k, value)
        return lambda value: pmf_frac_poisson(beta, args.rate, _event_count(value), args.t)
    _require(variable, function, GridVariable.x, GridVariable.t)
    return _space_time_evaluator(function, variable, args)


def _event_count(value: float) -> int:
    if value != math.floor(value):
        raise DomainError(f"event count must be an integer: {value}")
    return int(value)


def _space_time_evaluator(function: EvalFunction, variable: GridVariable, args: argparse.Namespace) -> Evaluator:
    direction = None
    if function in _DIRECTED:
        direction = parse_direction(args.a, require_non_negative=function is not EvalFunction.g)
    if function is EvalFunction.v and args.nu is None:
        raise UsageError("v needs the boundary exponent --nu")
    if function in (EvalFunction.h, EvalFunction.U):
        check_exponent("alpha", args.alpha, allow_one=False)
    check_exponent("beta", args.beta, allow_one=False)

    def point(value: float) -> EvalPoint:
        projection, t = (value, args.t) if variable is GridVariable.x else (args.x, value)
        if direction is None:
            return EvalPoint(projection, t).require_half_line()
        return EvalPoint.along(direction, projection, t)

    if function is EvalFunction.l:
        return lambda value: density_l(args.beta, point(value).projection, point(value).t)
    if function is EvalFunction.h:
        return lambda value: density_h(args.alpha, point(value).projection, point(value).t)
    if function is EvalFunction.U:
        return lambda value: density_U(args.alpha, args.beta, point(value).projection, point(value).t)
    if function is EvalFunction.lamperti:
        return lambda value: density_lamperti(args.beta, point(value).projection, point(value).t)
    if function is EvalFunction.v:
        return lambda value: solution_v(args.beta, args.nu, direction, point(value).vector(), point(value).t)
    if function is EvalFunction.p:
        return lambda value: density_p_multivariate(args.beta, direction, point(value).vector(), point(value).t)
    if function is EvalFunction.Un:
        return lambda value: solution_Un(args.beta, direction.dim, direction, point(value).vector(), point(value).t)
    return lambda value: solution_g(args.beta, direction, point(value).vector(), point(value).t)


def write_table(function: EvalFunction, grid: GridRequest, evaluator: Evaluator, stream: TextIO) -> int:
    """
    Evaluate every grid value and write the CSV rows; failing points become nan with a warning.

    :return: Number of points that failed.
    """
    writer = csv.writer(stream, lineterminator="\n")
    header = ["grid_value", "result"] + (["result_imag"] if function.is_complex else [])
    writer.writerow(header)
    failures = 0
    for value in grid.values():
        try:
            result = complex(evaluator(float(value))) if function.is_complex else float(evaluator(float(value)))
        except (FractionalError, ArithmeticError, ValueError) as error:
            logger.warning("%s at %s=%r: %s: %s", function.value, grid.variable.value, value,
                           type(error).__name__, error)
            failures += 1
            result = complex(np.nan, np.nan) if function.is_complex else np.nan
        if function.is_complex:
            writer.writerow([format_float(value), format_float(result.real), format_float(result.imag)])
        else:
            writer.writerow([format_float(value), format_float(result)])
    return failures
