import threading
from typing import Union

import mpmath

_thread_state = threading.local()


def mp_context(dps: int) -> mpmath.MPContext:
    """
    Return this thread's private mpmath context, set to ``dps`` decimal digits.

    The global ``mpmath.mp`` context is shared by every thread, so concurrent
    escalations would race on its precision; each thread gets its own context instead.

    :param dps: Working precision in decimal digits.
    :return: An mpmath context with the requested precision.
    """
    context = getattr(_thread_state, "context", None)
    if context is None:
        context = mpmath.MPContext()
        _thread_state.context = context
    context.dps = dps
    return context


class KahanAccumulator:
    """
    Compensated running sum of real or complex terms.
    """

    def __init__(self, start: Union[float, complex] = 0.0):
        self.total = start
        self.compensation = 0.0 * start

    def add(self, term: Union[float, complex]) -> None:
        corrected = term - self.compensation
        updated = self.total + corrected
        self.compensation = (updated - self.total) - corrected
        self.total = updated

    @property
    def value(self) -> Union[float, complex]:
        return self.total
