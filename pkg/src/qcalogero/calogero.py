"""Classical Calogero matrices for multiplication by x and for d/dx.

``D[j, k]`` is the derivative of the cardinal polynomial of node ``k``
evaluated at node ``j``. Two independent constructions are provided:

* :func:`d_matrix_bzb` -- ``B Z B^-1``, valid for any node set (reference);
* :func:`d_matrix_vandermonde` -- ``X^-1 V N V^-1``, needs nonzero nodes.
"""

import numpy as np

from . import _kernels
from .lagrange import lagrange_coefficients
from .matrices import diagonal, freeze
from .scalar import to_array

__all__ = [
    "x_matrix",
    "b_matrix",
    "b_weights",
    "z_matrix",
    "n_matrix",
    "d_matrix_bzb",
    "d_matrix_vandermonde",
    "d_matrix_direct",
    "euler_matrix",
]


def x_matrix(ns):
    """diag(x_j): multiplication by x on node samples."""
    return diagonal(ns.nodes, ns.mode)


def b_weights(ns):
    """b_j = prod_{k != j} (x_j - x_k); the empty product for n = 1 is 1."""
    return freeze(_kernels.node_weights(ns.array()))


def b_matrix(ns):
    return diagonal(list(b_weights(ns)), ns.mode)


def z_matrix(ns):
    """1/(x_j - x_k) off the diagonal; row sums of those on the diagonal."""
    return freeze(_kernels.z_matrix(ns.array()))


def n_matrix(n, mode):
    """diag(0, 1, ..., n-1)."""
    return diagonal(range(n), mode)


def d_matrix_bzb(ns):
    """Differentiation matrix ``B Z B^-1``.

    B is diagonal, so the similarity is applied as row/column scaling by the
    b_j and their reciprocals rather than by matrix products.
    """
    return freeze(_kernels.bzb_matrix(ns.array()))


def d_matrix_vandermonde(ns):
    """Differentiation matrix ``X^-1 V N V^-1``; rejects a node at 0."""
    ns.require_nonzero("the Vandermonde form X^-1 V N V^-1")
    weights = to_array(range(ns.n), ns.mode)
    return freeze(_kernels.vandermonde_form(ns.array(), weights))


def d_matrix_direct(ns):
    """Differentiate each cardinal polynomial's coefficient row and evaluate
    it at every node. Slow; an oracle for the other two constructions."""
    C = lagrange_coefficients(ns)
    x = ns.array()
    n = ns.n
    out = np.empty((n, n), dtype=x.dtype)
    for k in range(n):
        deriv = [m * C[k, m] for m in range(1, n)]
        for j in range(n):
            acc = x[j] * 0
            for c in reversed(deriv):
                acc = acc * x[j] + c
            out[j, k] = acc
    return freeze(out)


def euler_matrix(ns):
    """``X D`` (built from the BZB^-1 form)."""
    x = ns.array()
    return freeze(x[:, None] * _kernels.bzb_matrix(x))
