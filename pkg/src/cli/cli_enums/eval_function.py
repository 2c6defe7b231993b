from enum import Enum


class EvalFunction(Enum):
    """
    Functions the ``eval`` command tabulates; the value is the command-line name.
    """
    wright = "wright"
    ml = "ml"
    l = "l"
    h = "h"
    U = "U"
    lamperti = "lamperti"
    v = "v"
    p = "p"
    Un = "Un"
    g = "g"
    charfn = "charfn"
    fracpoisson_pmf = "fracpoisson-pmf"

    @property
    def is_complex(self) -> bool:
        return self is EvalFunction.charfn
