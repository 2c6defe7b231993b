from enum import Enum


class CheckKind(Enum):
    """
    - error: passes when metric <= threshold.
    - p_value: passes when metric >= threshold.
    """
    error = "error"
    p_value = "p_value"
