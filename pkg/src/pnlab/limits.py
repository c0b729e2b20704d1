"""Guard rails for exhaustive enumeration.

Word enumeration walks spaces that grow like 2^n, palindrome enumeration
like 2^(n/2), so both are capped.  The default word cap of 24 keeps every
run at desk scale; the environment variable PNLAB_MAX_N raises or lowers
it (the palindrome cap follows it with fixed headroom).
"""

import os

DEFAULT_MAX_N = 24
PALINDROME_HEADROOM = 10
ENV_VAR = "PNLAB_MAX_N"


class LimitExceededError(Exception):
    """Requested length is above the configured enumeration cap."""


def max_word_length() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def max_palindrome_length() -> int:
    return max_word_length() + PALINDROME_HEADROOM


def check_length(n: int, limit: int | None = None, kind: str = "enumeration") -> int:
    cap = max_word_length() if limit is None else limit
    if n > cap:
        raise LimitExceededError(f"{kind} at length {n} exceeds the limit of {cap}")
    return n
