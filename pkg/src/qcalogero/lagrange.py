"""Lagrange interpolation on a node set.

Index convention: rows and columns are 0-based here, so row ``j`` of the
coefficient matrix holds the ascending-degree coefficients of the cardinal
polynomial attached to node ``j``::

    delta_j(t) = sum_k C[j, k] * t**k,    V[j, k] = x_j**k

The cardinal property delta_j(x_i) = [i == j] reads ``V @ C.T == I``, i.e.
the inverse of the Vandermonde matrix is ``C.T``.
"""

import numpy as np

from . import _kernels
from .errors import CalogeroError
from .matrices import freeze
from .polynomial import Polynomial
from .scalar import coerce, to_array

__all__ = [
    "vandermonde",
    "lagrange_coefficients",
    "vandermonde_inverse",
    "basis_polynomial",
    "delta_eval",
    "sample",
    "interpolate",
    "inner_product",
]


def vandermonde(ns):
    """``V[j, k] = x_j**k``."""
    return freeze(_kernels.vandermonde(ns.array()))


def lagrange_coefficients(ns):
    """Coefficient matrix of the cardinal polynomials.

    Each row is built by multiplying out the linear factors of the product
    form and dividing by prod_{k != j}(x_j - x_k); no matrix inversion is
    involved, so exact mode gives the exact inverse-transpose of V.
    """
    return freeze(_kernels.lagrange_coeffs(ns.array()))


def vandermonde_inverse(ns):
    """``V^-1``, returned as the transpose of :func:`lagrange_coefficients`."""
    return freeze(np.ascontiguousarray(_kernels.lagrange_coeffs(ns.array()).T))


def basis_polynomial(ns, j):
    _check_index(ns, j)
    return Polynomial(tuple(lagrange_coefficients(ns)[j]))


def _check_index(ns, j):
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 0 <= j < ns.n:
        raise CalogeroError(f"basis index {j!r} out of range for {ns.n} nodes")


def delta_eval(ns, j, x):
    """Evaluate the cardinal polynomial of node ``j`` at ``x`` (product form)."""
    _check_index(ns, j)
    x = coerce(x, ns.mode)
    xj = ns.nodes[j]
    out = coerce(1, ns.mode)
    for k, xk in enumerate(ns.nodes):
        if k != j:
            out *= (x - xk) / (xj - xk)
    return out


def sample(ns, f):
    """Values of the callable ``f`` at the nodes, as an array in the node mode."""
    return freeze(to_array([f(x) for x in ns.nodes], ns.mode))


def _values(ns, values, what="values"):
    if len(values) != ns.n:
        raise CalogeroError(f"{what} has length {len(values)}, expected {ns.n}")
    return to_array(values, ns.mode)


def interpolate(ns, values, x):
    """The interpolant sum_j values[j] * delta_j(x)."""
    values = _values(ns, values)
    x = coerce(x, ns.mode)
    total = coerce(0, ns.mode)
    for j, fj in enumerate(values):
        total += fj * delta_eval(ns, j, x)
    return total


def inner_product(ns, f_values, g_values):
    """Discrete pairing sum_j f_j g_j over node samples."""
    f = _values(ns, f_values, "f_values")
    g = _values(ns, g_values, "g_values")
    total = coerce(0, ns.mode)
    for a, b in zip(f, g):
        total += a * b
    return total
