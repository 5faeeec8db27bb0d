"""Jackson q-derivative and its Calogero matrix.

The q-differentiation matrix is built from the Vandermonde form
``X^-1 V [N]_q V^-1`` with ``[N]_q = diag([0]_q, ..., [n-1]_q)``. The direct
route (apply the Jackson quotient to each cardinal polynomial and read it off
at the nodes) is kept as an independent oracle, see :func:`verify_qd_oracle`.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CalogeroError, DomainError
from .lagrange import delta_eval
from .matrices import diagonal, freeze, max_abs
from .polynomial import Polynomial
from .scalar import Mode, as_qparam, basic_number, coerce, mode_of, parse_scalar, to_array

__all__ = [
    "jackson_apply",
    "nq_matrix",
    "q_d_matrix",
    "q_d_matrix_direct",
    "q_d_matrix_closures",
    "q_euler_matrix",
    "verify_qd_oracle",
    "OracleReport",
    "builtin_function",
]


def jackson_apply(f, x, q):
    """(f(q x) - f(x)) / (x (q - 1)) for a pure scalar function ``f``.

    The raw quotient is undefined at x = 0 and at q = 1; both raise
    :class:`DomainError`. Use the classical derivative for q = 1.
    """
    mode = mode_of(x) or mode_of(q) or Mode.EXACT
    x = coerce(x, mode)
    q = as_qparam(q, mode)
    if x == 0:
        raise DomainError("the Jackson quotient is undefined at x = 0")
    if q == 1:
        raise DomainError("the Jackson quotient is undefined at q = 1; use the classical derivative")
    return (f(q * x) - f(x)) / (x * (q - 1))


def nq_matrix(n, q, mode=None):
    """diag([0]_q, [1]_q, ..., [n-1]_q)."""
    if n < 1:
        raise CalogeroError(f"matrix size must be positive, got {n}")
    mode = Mode(mode) if mode is not None else (mode_of(q) or Mode.EXACT)
    q = as_qparam(q, mode)
    return diagonal([basic_number(m, q) for m in range(n)], mode)


def _basic_numbers(ns, q):
    q = as_qparam(q, ns.mode)
    return to_array([basic_number(m, q) for m in range(ns.n)], ns.mode)


def q_d_matrix(ns, q):
    """q-differentiation matrix ``X^-1 V [N]_q V^-1``.

    Defined for every nonzero q including q = 1, where it coincides with the
    classical Vandermonde-form differentiation matrix. Nodes must be nonzero.
    """
    ns.require_nonzero("the q-differentiation matrix")
    return freeze(_kernels.vandermonde_form(ns.array(), _basic_numbers(ns, q)))


def q_euler_matrix(ns, q):
    """``X`` times the q-differentiation matrix, i.e. ``V [N]_q V^-1``.

    Its eigenvalues are [0]_q, ..., [n-1]_q whatever the nodes are, because
    ``(X Dq) V = V [N]_q``.
    """
    ns.require_nonzero("the q-Euler matrix")
    x = ns.array()
    return freeze(x[:, None] * _kernels.vandermonde_form(x, _basic_numbers(ns, q)))


def q_d_matrix_direct(ns, q):
    """Entry (j, k) is the Jackson quotient of the cardinal polynomial of node
    k, evaluated at node j; needs q != 1 and nonzero nodes."""
    ns.require_nonzero("the Jackson quotient")
    q = as_qparam(q, ns.mode)
    if q == 1:
        raise DomainError("the Jackson quotient is undefined at q = 1; use the classical derivative")
    return freeze(_kernels.jackson_table(ns.array(), q))


def q_d_matrix_closures(ns, q):
    """Same as :func:`q_d_matrix_direct`, one scalar Jackson quotient at a
    time on ``delta_eval`` closures. Slow, but shares no array code."""
    ns.require_nonzero("the Jackson quotient")
    q = as_qparam(q, ns.mode)
    rows = []
    for xj in ns.nodes:
        row = []
        for k in range(ns.n):
            row.append(jackson_apply(lambda t, k=k: delta_eval(ns, k, t), xj, q))
        rows.append(row)
    return freeze(np.array(rows, dtype=object if ns.mode is Mode.EXACT else np.float64))


@dataclass(frozen=True)
class OracleReport:
    """Discrepancy between the Vandermonde-form matrix and the Jackson oracle.

    ``max_abs`` is exact (a Fraction) in exact mode. ``max_rel`` divides it by
    the largest entry of the oracle matrix.
    """

    n: int
    q: object
    mode: Mode
    max_abs: object
    max_rel: float

    @property
    def exact_zero(self):
        return self.max_abs == 0


def verify_qd_oracle(ns, q):
    q = as_qparam(q, ns.mode)
    built = q_d_matrix(ns, q)
    oracle = q_d_matrix_direct(ns, q)
    diff = max_abs(built - oracle)
    scale = max_abs(oracle)
    rel = float(diff / scale) if scale != 0 else float(diff)
    return OracleReport(ns.n, q, ns.mode, diff, rel)


def builtin_function(name, mode=Mode.EXACT):
    """Look up a sampled function by name.

    ``"monomial:m"`` is x**m; ``"poly:c0,c1,..."`` is c0 + c1 x + ... with
    coefficients in scalar literal syntax. The result is a callable
    :class:`Polynomial`, exact in exact mode.
    """
    mode = Mode(mode)
    kind, sep, arg = name.partition(":")
    if not sep or not arg:
        raise CalogeroError(f"function name {name!r} must look like 'monomial:m' or 'poly:c0,c1,...'")
    if kind == "monomial":
        if not arg.isdigit():
            raise CalogeroError(f"monomial degree must be a nonnegative integer, got {arg!r}")
        return Polynomial.monomial(int(arg), coerce(1, mode))
    if kind == "poly":
        return Polynomial(tuple(parse_scalar(c, mode) for c in arg.split(",")))
    raise CalogeroError(f"unknown function family {kind!r}")
