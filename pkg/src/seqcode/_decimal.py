"""Decimal-string conversion for naturals of unbounded size.

CPython caps int<->str conversion length by default; sequence codes
legitimately run to thousands of digits, so these helpers raise the cap
just enough before converting.  Decimal strings are the only wire format
for naturals here: no precision is ever lost.
"""

import sys


def _ensure_capacity(digits: int) -> None:
    if hasattr(sys, "get_int_max_str_digits"):
        cap = sys.get_int_max_str_digits()
        if 0 < cap < digits:
            sys.set_int_max_str_digits(digits)


def decimal_str(n: int) -> str:
    """str(n), working for any number of digits."""
    _ensure_capacity(n.bit_length() // 3 + 3)
    return str(n)


def parse_decimal(text: str) -> int:
    """int(text), working for any number of digits."""
    _ensure_capacity(len(text) + 1)
    return int(text)
