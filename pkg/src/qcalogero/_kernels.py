"""Array kernels behind the lagrange, calogero and qmatrix modules.

Every kernel has a pure-numpy implementation (``*_numpy``) that runs on
float64 arrays and on object arrays of ``Fraction`` alike, so the exact and
float paths share one formula. For float64 input a numba-compiled loop
version is dispatched instead, unless the environment variable
``QCALOGERO_DISABLE_NUMBA`` is set to a true value or numba is missing.

numba is imported lazily on the first float64 call, so exact-only work never
pays for it. ``fastmath`` stays off: the loops must round like numpy does.
"""

import os
from fractions import Fraction

import numpy as np

__all__ = [
    "numba_enabled",
    "lagrange_coeffs",
    "node_weights",
    "z_matrix",
    "bzb_matrix",
    "vandermonde",
    "vandermonde_form",
    "delta_table",
    "jackson_table",
    "NUMPY_KERNELS",
    "jit_kernels",
]

_FLAG = "QCALOGERO_DISABLE_NUMBA"


def _env_disabled():
    return os.environ.get(_FLAG, "").strip().lower() not in ("", "0", "false", "no")


_jit_cache = {}
_numba_ok = None


def numba_enabled():
    """True when float64 kernels run through numba."""
    global _numba_ok
    if _env_disabled():
        return False
    if _numba_ok is None:
        try:
            import numba  # noqa: F401
        except ImportError:
            _numba_ok = False
        else:
            _numba_ok = True
    return _numba_ok


# ---------------------------------------------------------------------------
# helpers for object (exact) arrays


def _is_exact(a):
    return a.dtype == object


def _zeros(shape, like):
    if _is_exact(like):
        return np.full(shape, Fraction(0), dtype=object)
    return np.zeros(shape, dtype=np.float64)


def _one(like):
    return Fraction(1) if _is_exact(like) else 1.0


_to_fraction = np.frompyfunc(Fraction, 1, 1)


def _settle(a):
    """Object arrays can pick up plain ints from empty products and sums;
    turn every entry into a Fraction so the exact mode stays uniform."""
    if _is_exact(a) and a.size:
        return _to_fraction(a).astype(object)
    return a


# ---------------------------------------------------------------------------
# numpy implementations (dtype generic)


def vandermonde_numpy(x):
    n = len(x)
    V = _zeros((n, n), x)
    V[:, 0] = _one(x)
    for k in range(1, n):
        V[:, k] = V[:, k - 1] * x
    return V


def node_weights_numpy(x):
    d = x[:, None] - x[None, :]
    np.fill_diagonal(d, _one(x))
    return _settle(np.prod(d, axis=1))


def lagrange_coeffs_numpy(x):
    # Expand prod_{k != j} (t - x_k) for every row j at once, one factor per
    # sweep, then divide row j by b_j.
    n = len(x)
    C = _zeros((n, n), x)
    C[:, 0] = _one(x)
    for k in range(n):
        rows = np.arange(n) != k
        old = C[rows]
        new = old * (-x[k])
        new[:, 1:] += old[:, :-1]
        C[rows] = new
    return _settle(C / node_weights_numpy(x)[:, None])


def z_matrix_numpy(x):
    n = len(x)
    d = x[:, None] - x[None, :]
    np.fill_diagonal(d, _one(x))
    Z = _one(x) / d
    np.fill_diagonal(Z, _zeros(n, x))
    np.fill_diagonal(Z, Z.sum(axis=1))
    return _settle(Z)


def bzb_matrix_numpy(x):
    b = node_weights_numpy(x)
    return _settle(b[:, None] * z_matrix_numpy(x) / b[None, :])


def delta_table_numpy(x, t):
    """E[i, k] = delta_k(t_i) in product form."""
    n = len(x)
    E = _zeros((len(t), n), x)
    for k in range(n):
        others = np.arange(n) != k
        E[:, k] = np.prod((t[:, None] - x[others]) / (x[k] - x[others]), axis=1)
    return _settle(E)


def vandermonde_form_numpy(x, w):
    """X^-1 V diag(w) V^-1 with V^-1 = C^T from the product expansion."""
    V = vandermonde_numpy(x)
    C = lagrange_coeffs_numpy(x)
    return _settle(((V * w[None, :]) @ C.T) / x[:, None])


def jackson_table_numpy(x, q):
    """J[j, k] = (delta_k(q x_j) - delta_k(x_j)) / (x_j (q - 1))."""
    shifted = delta_table_numpy(x, x * q)
    at_nodes = delta_table_numpy(x, x)
    return _settle((shifted - at_nodes) / (x[:, None] * (q - 1)))


NUMPY_KERNELS = {
    "vandermonde": vandermonde_numpy,
    "node_weights": node_weights_numpy,
    "lagrange_coeffs": lagrange_coeffs_numpy,
    "z_matrix": z_matrix_numpy,
    "bzb_matrix": bzb_matrix_numpy,
    "delta_table": delta_table_numpy,
    "vandermonde_form": vandermonde_form_numpy,
    "jackson_table": jackson_table_numpy,
}


# ---------------------------------------------------------------------------
# loop implementations, compiled with numba.njit on first use


def _vandermonde_loops(x):
    n = x.shape[0]
    V = np.empty((n, n))
    for j in range(n):
        p = 1.0
        for k in range(n):
            V[j, k] = p
            p *= x[j]
    return V


def _node_weights_loops(x):
    n = x.shape[0]
    b = np.ones(n)
    for j in range(n):
        for k in range(n):
            if k != j:
                b[j] *= x[j] - x[k]
    return b


def _lagrange_coeffs_loops(x):
    n = x.shape[0]
    C = np.zeros((n, n))
    for j in range(n):
        c = C[j]
        c[0] = 1.0
        deg = 0
        bj = 1.0
        for k in range(n):
            if k == j:
                continue
            deg += 1
            for i in range(deg, 0, -1):
                c[i] = c[i - 1] - x[k] * c[i]
            c[0] = -x[k] * c[0]
            bj *= x[j] - x[k]
        for i in range(n):
            c[i] /= bj
    return C


def _z_matrix_loops(x):
    n = x.shape[0]
    Z = np.zeros((n, n))
    for j in range(n):
        s = 0.0
        for k in range(n):
            if k != j:
                Z[j, k] = 1.0 / (x[j] - x[k])
                s += Z[j, k]
        Z[j, j] = s
    return Z


def _bzb_matrix_loops(x):
    n = x.shape[0]
    b = _node_weights_loops(x)
    Z = _z_matrix_loops(x)
    for j in range(n):
        for k in range(n):
            Z[j, k] = b[j] * Z[j, k] / b[k]
    return Z


def _delta_table_loops(x, t):
    n = x.shape[0]
    m = t.shape[0]
    E = np.empty((m, n))
    for i in range(m):
        for k in range(n):
            p = 1.0
            for l in range(n):
                if l != k:
                    p *= (t[i] - x[l]) / (x[k] - x[l])
            E[i, k] = p
    return E


def _vandermonde_form_loops(x, w):
    n = x.shape[0]
    V = _vandermonde_loops(x)
    C = _lagrange_coeffs_loops(x)
    M = np.zeros((n, n))
    for j in range(n):
        for k in range(n):
            s = 0.0
            for m in range(n):
                s += V[j, m] * w[m] * C[k, m]
            M[j, k] = s / x[j]
    return M


def _jackson_table_loops(x, q):
    n = x.shape[0]
    shifted = _delta_table_loops(x, x * q)
    at_nodes = _delta_table_loops(x, x)
    J = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            J[j, k] = (shifted[j, k] - at_nodes[j, k]) / (x[j] * (q - 1.0))
    return J


_LOOPS = {
    "vandermonde": _vandermonde_loops,
    "node_weights": _node_weights_loops,
    "lagrange_coeffs": _lagrange_coeffs_loops,
    "z_matrix": _z_matrix_loops,
    "bzb_matrix": _bzb_matrix_loops,
    "delta_table": _delta_table_loops,
    "vandermonde_form": _vandermonde_form_loops,
    "jackson_table": _jackson_table_loops,
}

# helpers a kernel calls must be compiled before the kernel itself
_DEPENDS = {
    "bzb_matrix": ("node_weights", "z_matrix"),
    "vandermonde_form": ("vandermonde", "lagrange_coeffs"),
    "jackson_table": ("delta_table",),
}


def _compile(name):
    if name not in _jit_cache:
        import numba

        for dep in _DEPENDS.get(name, ()):
            _compile(dep)
        fn = numba.njit(cache=True)(_LOOPS[name])
        # let dependent kernels resolve the helper to its compiled twin
        globals()[_LOOPS[name].__name__] = fn
        _jit_cache[name] = fn
    return _jit_cache[name]


def jit_kernels():
    """All compiled kernels by name (forces compilation; needs numba)."""
    return {name: _compile(name) for name in _LOOPS}


def _dispatch(name, x, *rest):
    if x.dtype == np.float64 and numba_enabled():
        return _compile(name)(x, *rest)
    return NUMPY_KERNELS[name](x, *rest)


def vandermonde(x):
    return _dispatch("vandermonde", x)


def node_weights(x):
    return _dispatch("node_weights", x)


def lagrange_coeffs(x):
    return _dispatch("lagrange_coeffs", x)


def z_matrix(x):
    return _dispatch("z_matrix", x)


def bzb_matrix(x):
    return _dispatch("bzb_matrix", x)


def delta_table(x, t):
    if x.dtype == np.float64:
        t = np.asarray(t, dtype=np.float64)
    return _dispatch("delta_table", x, t)


def vandermonde_form(x, w):
    if x.dtype == np.float64:
        w = np.asarray(w, dtype=np.float64)
    return _dispatch("vandermonde_form", x, w)


def jackson_table(x, q):
    if x.dtype == np.float64:
        q = float(q)
    return _dispatch("jackson_table", x, q)
