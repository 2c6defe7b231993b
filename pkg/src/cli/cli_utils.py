import contextlib
import sys
from typing import Iterator, Optional, TextIO

from src.cli.cli_constants import CliConstants
from src.exceptions import DomainError, IoError, UsageError
from src.laws.direction import Direction


def parse_direction(text: Optional[str], require_non_negative: bool = True) -> Direction:
    """
    Direction from comma-separated components, renormalised when within 1e-6 of unit norm.
    """
    if text is None:
        raise UsageError("this function needs a direction --a")
    try:
        components = [float(component) for component in text.split(",")]
    except ValueError:
        raise UsageError(f"direction must be comma-separated numbers: {text!r}") from None
    try:
        return Direction.from_components(components, CliConstants.DIRECTION_RENORMALIZE_TOLERANCE,
                                         require_non_negative=require_non_negative)
    except DomainError as error:
        raise UsageError(str(error)) from error


def format_float(value: float) -> str:
    """
    Shortest representation that parses back to the same float.
    """
    return repr(float(value))


@contextlib.contextmanager
def open_output(path: Optional[str], stdout: Optional[TextIO] = None) -> Iterator[TextIO]:
    """
    Yield ``path`` opened for writing, or standard output when no path is given.

    :raises IoError: when the file cannot be opened.
    """
    if path is None:
        yield stdout or sys.stdout
        return
    try:
        handle = open(path, "w", newline="")
    except OSError as error:
        raise IoError(f"cannot open {path} for writing: {error}") from error
    with handle:
        yield handle
