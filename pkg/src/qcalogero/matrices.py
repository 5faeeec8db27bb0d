"""Small helpers for the dense matrices passed between modules.

Matrices are plain numpy arrays: object dtype holding Fractions in exact
mode, float64 in float mode. Public constructors hand them out read-only.
"""

from fractions import Fraction

import numpy as np

from .errors import CalogeroError, ModeError
from .scalar import Mode, one, to_array, zero

__all__ = ["freeze", "matrix_mode", "identity", "diagonal", "max_abs", "require_square"]


def freeze(a):
    a = np.asarray(a)
    a.flags.writeable = False
    return a


def matrix_mode(a):
    a = np.asarray(a)
    if a.dtype == object:
        if not all(isinstance(v, (Fraction, int)) for v in a.flat):
            raise ModeError("object array holds non-rational entries")
        return Mode.EXACT
    if a.dtype == np.float64:
        return Mode.FLOAT
    raise ModeError(f"unsupported matrix dtype {a.dtype}")


def identity(n, mode):
    out = np.full((n, n), zero(mode), dtype=object if Mode(mode) is Mode.EXACT else np.float64)
    np.fill_diagonal(out, one(mode))
    return freeze(out)


def diagonal(values, mode):
    values = to_array(values, mode)
    n = len(values)
    out = np.full((n, n), zero(mode), dtype=object if Mode(mode) is Mode.EXACT else np.float64)
    for i, v in enumerate(values):
        out[i, i] = v
    return freeze(out)


def max_abs(a):
    """Largest absolute entry; exact zero for an empty or all-zero exact array."""
    a = np.asarray(a)
    if a.size == 0:
        return Fraction(0) if a.dtype == object else 0.0
    return max(abs(v) for v in a.flat) if a.dtype == object else float(np.max(np.abs(a)))


def require_square(a, n=None):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise CalogeroError(f"expected a square matrix, got shape {a.shape}")
    if n is not None and a.shape[0] != n:
        raise CalogeroError(f"matrix is {a.shape[0]}x{a.shape[0]} but {n} nodes were given")
    return a
