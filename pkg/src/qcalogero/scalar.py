"""Scalar backends: exact rationals (``fractions.Fraction``) and binary64.

A computation runs entirely in one mode. Exact-mode values are ``Fraction``
instances; float-mode values are Python floats (float64 in arrays). Plain
``int`` literals are accepted in either mode and converted on entry.
"""

import enum
import math
import numbers
import re
from fractions import Fraction

import numpy as np

from .errors import DomainError, ModeError, ScalarParseError

__all__ = [
    "Mode",
    "mode_of",
    "coerce",
    "to_array",
    "parse_scalar",
    "format_scalar",
    "basic_number",
    "as_qparam",
    "zero",
    "one",
]


class Mode(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


_LITERAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/[+-]?\d+)?")


def mode_of(value):
    """Return the mode a single scalar belongs to, or None for a plain int."""
    if isinstance(value, bool):
        raise ModeError(f"boolean {value!r} is not a scalar")
    if isinstance(value, Fraction):
        return Mode.EXACT
    if isinstance(value, (int, np.integer)):
        return None
    if isinstance(value, (float, np.floating)):
        return Mode.FLOAT
    if isinstance(value, numbers.Rational):
        return Mode.EXACT
    raise ModeError(f"unsupported scalar type {type(value).__name__}")


def coerce(value, mode):
    """Convert ``value`` into ``mode``; cross-mode input raises ModeError."""
    mode = Mode(mode)
    found = mode_of(value)
    if found is not None and found is not mode:
        raise ModeError(f"{found.value} value {value!r} used in a {mode.value}-mode computation")
    if mode is Mode.EXACT:
        return Fraction(value)
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"non-finite scalar {value!r}")
    return value


def to_array(values, mode):
    mode = Mode(mode)
    items = [coerce(v, mode) for v in values]
    if mode is Mode.EXACT:
        out = np.empty(len(items), dtype=object)
        out[:] = items
        return out
    return np.array(items, dtype=np.float64)


def zero(mode):
    return Fraction(0) if Mode(mode) is Mode.EXACT else 0.0


def one(mode):
    return Fraction(1) if Mode(mode) is Mode.EXACT else 1.0


def parse_scalar(text, mode=Mode.EXACT):
    """Parse an integer, fraction ``"p/q"`` or decimal literal.

    Exact mode keeps finite decimals exact (``"1.25"`` -> ``5/4``); float
    mode rounds to the nearest binary64.
    """
    mode = Mode(mode)
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a string literal, got {type(text).__name__}")
    s = text.strip()
    if not _LITERAL.fullmatch(s):
        raise ScalarParseError(f"malformed scalar literal {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    # Fraction parses decimals exactly, so float(Fraction) is correctly rounded.
    value = Fraction(num) / Fraction(den) if den else Fraction(num)
    if mode is Mode.EXACT:
        return value
    return float(value)


def format_scalar(value):
    """Serialize a scalar: ``"p/q"`` in lowest terms, ``"p"`` for integers,
    shortest round-trip repr for floats."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_qparam(q, mode):
    """Validate the deformation parameter and bring it into ``mode``."""
    if isinstance(q, str):
        q = parse_scalar(q, mode)
    q = coerce(q, mode)
    if q == 0:
        raise DomainError("q must be nonzero")
    return q


def basic_number(m, q):
    """Heine basic number [m]_q = 1 + q + ... + q^(m-1).

    The sum form is total in q, so [m]_1 = m without a special case.
    """
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
        raise DomainError(f"basic number index must be a nonnegative integer, got {m!r}")
    mode = mode_of(q) or Mode.EXACT
    q = coerce(q, mode)
    total = zero(mode)
    power = one(mode)
    for _ in range(int(m)):
        total += power
        power *= q
    return total
