"""Finite-dimensional Calogero matrices for d/dx and the Jackson q-derivative.

Everything works over exact rationals (``Fraction``) or binary64, chosen per
node set. See the README for the command-line interface.
"""

from .calogero import (
    b_matrix,
    b_weights,
    d_matrix_bzb,
    d_matrix_direct,
    d_matrix_vandermonde,
    euler_matrix,
    n_matrix,
    x_matrix,
    z_matrix,
)
from .checks import CheckResult, run_checks
from .errors import (
    CalogeroError,
    DomainError,
    ModeError,
    NodeError,
    OperatorSyntaxError,
    ScalarParseError,
    ZeroNodeError,
)
from .lagrange import (
    basis_polynomial,
    delta_eval,
    inner_product,
    interpolate,
    lagrange_coefficients,
    sample,
    vandermonde,
    vandermonde_inverse,
)
from .nodes import (
    NodeSet,
    chebyshev,
    equispaced,
    generate_nodes,
    geometric,
    nodeset_from_list,
    random_rational_nodes,
)
from .operator_expr import OperatorExpr, apply_matrix, format_operator, parse_operator, realize
from .polynomial import Polynomial
from .qmatrix import (
    OracleReport,
    builtin_function,
    jackson_apply,
    nq_matrix,
    q_d_matrix,
    q_d_matrix_closures,
    q_d_matrix_direct,
    q_euler_matrix,
    verify_qd_oracle,
)
from .scalar import Mode, as_qparam, basic_number, format_scalar, parse_scalar

__version__ = "0.1.0"
