"""Structural identity checks run by ``qcalogero verify``.

Each check compares two independently computed objects. In exact mode a
check passes only with a residual of exactly zero. In float mode the residual
is the max-norm of the difference divided by a scale natural to the check
(for example the largest entry of the matrix times the largest sample), and
must stay below :data:`FLOAT_TOL`.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .calogero import (
    b_matrix,
    d_matrix_bzb,
    d_matrix_direct,
    d_matrix_vandermonde,
    n_matrix,
    x_matrix,
    z_matrix,
)
from .lagrange import (
    delta_eval,
    inner_product,
    interpolate,
    lagrange_coefficients,
    vandermonde,
)
from .matrices import identity, max_abs
from .operator_expr import realize
from .polynomial import Polynomial
from .qmatrix import nq_matrix, q_d_matrix, verify_qd_oracle
from .scalar import Mode, as_qparam, basic_number, coerce, format_scalar, to_array

__all__ = ["CheckResult", "run_checks", "FLOAT_TOL", "PASS", "FAIL", "SKIPPED"]

FLOAT_TOL = 1e-8

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    residual: object = None
    detail: str = ""

    @property
    def ok(self):
        return self.status != FAIL

    def line(self):
        res = "" if self.residual is None else f"  residual {format_scalar(self.residual)}"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{self.status:<7}  {self.name}{res}{extra}"


def _residual(mode, lhs, rhs, scale=1.0):
    diff = max_abs(np.asarray(lhs) - np.asarray(rhs))
    if mode is Mode.EXACT:
        return diff
    scale = float(scale)
    return float(diff) / (scale if scale > 0 else 1.0)


def _verdict(mode, name, residual, detail=""):
    ok = residual == 0 if mode is Mode.EXACT else residual < FLOAT_TOL
    return CheckResult(name, PASS if ok else FAIL, residual, detail)


def _powers(ns, m):
    return to_array([x**m for x in ns.nodes], ns.mode)


def _random_polynomial(rng, degree, mode):
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1)]
    return Polynomial(coeffs).to_mode(mode)


def _random_points(rng, ns, count):
    # rational points inside the node hull (interpolation, not extrapolation)
    lo, hi = Fraction(min(ns.nodes)), Fraction(max(ns.nodes))
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    points = [lo + (hi - lo) * Fraction(rng.randint(0, 997), 997) for _ in range(count)]
    return points if ns.mode is Mode.EXACT else [float(t) for t in points]


def _interpolation_checks(ns, rng):
    mode, n = ns.mode, ns.n
    I = identity(n, mode)
    card = np.array([[delta_eval(ns, j, xk) for j in range(n)] for xk in ns.nodes],
                    dtype=I.dtype)
    yield _verdict(mode, "cardinality", _residual(mode, card, I))

    rows = [card[:, j] for j in range(n)]
    gram = np.array([[inner_product(ns, rows[j], rows[k]) for k in range(n)] for j in range(n)],
                    dtype=I.dtype)
    yield _verdict(mode, "orthogonality", _residual(mode, gram, I))

    x = ns.array()
    xgram = np.array([[inner_product(ns, rows[j], x * rows[k]) for k in range(n)]
                      for j in range(n)], dtype=I.dtype)
    yield _verdict(mode, "multiplication_by_x", _residual(mode, xgram, x_matrix(ns), max_abs(x)))

    V = vandermonde(ns)
    C = lagrange_coefficients(ns)
    scale = n * max_abs(V) * max_abs(C)
    res = max(_residual(mode, V @ C.T, I, scale), _residual(mode, C.T @ V, I, scale))
    yield _verdict(mode, "vandermonde_inverse", res, "V C^T = C^T V = I")

    p = _random_polynomial(rng, n - 1, mode)
    values = [p(xj) for xj in ns.nodes]
    at_nodes = to_array([interpolate(ns, values, xj) for xj in ns.nodes], mode)
    points = _random_points(rng, ns, 20)
    got = to_array([interpolate(ns, values, t) for t in points], mode)
    want = to_array([p(t) for t in points], mode)
    res = max(_residual(mode, at_nodes, to_array(values, mode), max_abs(to_array(values, mode))),
              _residual(mode, got, want, max_abs(want)))
    yield _verdict(mode, "polynomial_reproduction", res, "nodes and 20 random points")


def _classical_checks(ns):
    mode, n = ns.mode, ns.n
    Z = z_matrix(ns)
    off = Z + Z.T
    np.fill_diagonal(off, 0)
    yield _verdict(mode, "z_antisymmetry", _residual(mode, off, np.zeros_like(off), max_abs(Z)))

    B, X = b_matrix(ns), x_matrix(ns)
    yield _verdict(mode, "b_commutes_with_x",
                   _residual(mode, B @ X, X @ B, max_abs(B) * max_abs(X)))

    D = d_matrix_bzb(ns)
    res = 0 if mode is Mode.EXACT else 0.0
    for m in range(n):
        v = _powers(ns, m)
        want = to_array([m * x ** (m - 1) if m else 0 for x in ns.nodes], mode)
        res = max(res, _residual(mode, D @ v, want, max_abs(D) * max_abs(v)))
    yield _verdict(mode, "derivative_exactness", res, "D x^m = m x^(m-1), m < n")

    yield _verdict(mode, "derivative_direct_oracle",
                   _residual(mode, D, d_matrix_direct(ns), max_abs(D)),
                   "BZB^-1 vs differentiated coefficient rows")

    V, N = vandermonde(ns), n_matrix(n, mode)
    yield _verdict(mode, "classical_similarity",
                   _residual(mode, X @ D @ V, V @ N, n * max_abs(X @ D) * max_abs(V)),
                   "(X D) V = V N")

    if not ns.all_nonzero:
        yield CheckResult("dual_construction", SKIPPED, detail="a node is 0; X^-1 V N V^-1 undefined")
        return
    yield _verdict(mode, "dual_construction",
                   _residual(mode, D, d_matrix_vandermonde(ns), max_abs(D)),
                   "BZB^-1 = X^-1 V N V^-1")


_Q_CHECKS = ("qd_oracle", "q_monomial_action", "q_similarity", "q_classical_reduction",
             "q_operator_realization")


def _q_checks(ns, q):
    mode, n = ns.mode, ns.n
    if not ns.all_nonzero:
        for name in _Q_CHECKS:
            yield CheckResult(name, SKIPPED, detail="a node is 0; the q-matrix needs x_j != 0")
        return
    if q is None:
        for name in _Q_CHECKS:
            yield CheckResult(name, SKIPPED, detail="no q given")
        return
    q = as_qparam(q, mode)
    Dq = q_d_matrix(ns, q)

    if q == 1:
        yield CheckResult("qd_oracle", SKIPPED, detail="Jackson quotient undefined at q = 1")
    else:
        report = verify_qd_oracle(ns, q)
        residual = report.max_abs if mode is Mode.EXACT else report.max_rel
        yield _verdict(mode, "qd_oracle", residual, "Vandermonde form vs Jackson quotient")

    res = 0 if mode is Mode.EXACT else 0.0
    for m in range(n):
        v = _powers(ns, m)
        bm = basic_number(m, q)
        want = to_array([bm * x ** (m - 1) if m else 0 for x in ns.nodes], mode)
        res = max(res, _residual(mode, Dq @ v, want, max_abs(Dq) * max_abs(v)))
    yield _verdict(mode, "q_monomial_action", res, "Dq x^m = [m]_q x^(m-1), m < n")

    X, V, Nq = x_matrix(ns), vandermonde(ns), nq_matrix(n, q, mode)
    XDq = X @ Dq
    yield _verdict(mode, "q_similarity",
                   _residual(mode, XDq @ V, V @ Nq, n * max_abs(XDq) * max_abs(V)),
                   "(X Dq) V = V [N]_q")

    D1 = q_d_matrix(ns, coerce(1, mode))
    yield _verdict(mode, "q_classical_reduction",
                   _residual(mode, D1, d_matrix_vandermonde(ns), max_abs(D1)),
                   "Dq at q = 1 equals X^-1 V N V^-1")

    R = realize("D", ns, q, variant="q")
    RxD = realize("x*D", ns, q, variant="q")
    res = max(_residual(mode, R, Dq, max_abs(Dq)),
              _residual(mode, RxD @ V, V @ Nq, n * max_abs(RxD) * max_abs(V)))
    yield _verdict(mode, "q_operator_realization", res, "realize(D), realize(x*D) V = V [N]_q")


def _reference_checks(ns, q):
    """Float mode only: compare against the exact run on the same (binary
    rational) nodes."""
    exact = ns.to_mode(Mode.EXACT)
    D = d_matrix_bzb(ns)
    De = d_matrix_bzb(exact).astype(float)
    yield _verdict(Mode.FLOAT, "float_vs_exact_d", _residual(Mode.FLOAT, D, De, max_abs(De)))
    if q is None or not ns.all_nonzero:
        yield CheckResult("float_vs_exact_qd", SKIPPED,
                          detail="no q given" if q is None else "a node is 0")
        return
    qf = as_qparam(q, Mode.FLOAT)
    Dq = q_d_matrix(ns, qf)
    Dqe = q_d_matrix(exact, Fraction(qf)).astype(float)
    yield _verdict(Mode.FLOAT, "float_vs_exact_qd", _residual(Mode.FLOAT, Dq, Dqe, max_abs(Dqe)))


def run_checks(ns, q=None, seed=0):
    """Run every check on ``ns`` (and ``q`` when given); results in a fixed order."""
    rng = random.Random(seed)
    results = list(_interpolation_checks(ns, rng))
    results += list(_classical_checks(ns))
    results += list(_q_checks(ns, q))
    if ns.mode is Mode.FLOAT:
        results += list(_reference_checks(ns, q))
    return results
