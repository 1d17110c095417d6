import os
from itertools import chain, combinations


def powerset(iterable):
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def is_debug_mode():
    return os.environ.get("DEBUG_MODE", "0") == "1"


def set_debug_flag(enabled):
    os.environ["DEBUG_MODE"] = "1" if enabled else "0"
