"""Resource ceilings shared by every module.

Each ceiling can be overridden through an environment variable, read at call
time so tests and the command line can adjust them without reloading.
"""

import os

DEFAULTS = {
    "max_n": 30,
    "max_table_n": 14,
    "max_oracle_words": 3_000_000,
    "max_tableaux": 1_000_000,
}

ENV_VARS = {
    "max_n": "HOOKCHARS_MAX_N",
    "max_table_n": "HOOKCHARS_MAX_TABLE_N",
    "max_oracle_words": "HOOKCHARS_MAX_ORACLE_WORDS",
    "max_tableaux": "HOOKCHARS_MAX_TABLEAUX",
}


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured ceiling."""


def ceiling(name: str) -> int:
    raw = os.environ.get(ENV_VARS[name])
    if raw is None:
        return DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VARS[name]} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_VARS[name]} must be non-negative")
    return value


def check(name: str, value: int, what: str) -> None:
    limit = ceiling(name)
    if value > limit:
        raise ResourceLimitError(f"{what} = {value} exceeds {name} ceiling {limit}")
