from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qcalogero import CalogeroError, OperatorSyntaxError, ZeroNodeError
from qcalogero.calogero import d_matrix_bzb, x_matrix
from qcalogero.lagrange import vandermonde
from qcalogero.matrices import identity
from qcalogero.nodes import nodeset_from_list
from qcalogero.operator_expr import (
    OperatorExpr,
    apply_matrix,
    format_operator,
    parse_operator,
    realize,
)
from qcalogero.polynomial import Polynomial
from qcalogero.qmatrix import nq_matrix, q_d_matrix
from qcalogero.scalar import Mode, basic_number

from conftest import node_sets, q_values, small_fractions

F = Fraction

polynomials = st.lists(small_fractions, max_size=4).map(Polynomial)
operators = st.dictionaries(st.integers(0, 3), polynomials, max_size=4).map(OperatorExpr.from_mapping)


def test_parse_examples():
    assert parse_operator("x*D").terms == ((1, Polynomial((0, 1))),)
    e = parse_operator("x^2*D^2 + 3*D + 1")
    assert e.as_dict() == {0: Polynomial((1,)), 1: Polynomial((3,)), 2: Polynomial((0, 0, 1))}
    assert len(e.terms) == 3


def test_normal_ordering_required():
    with pytest.raises(OperatorSyntaxError, match="normal ordered") as err:
        parse_operator("D*x")
    assert err.value.position == 2
    with pytest.raises(OperatorSyntaxError):
        parse_operator("(x + D)*x^2")
    # constants may follow D, and D may follow D
    assert parse_operator("D*3") == parse_operator("3*D")
    assert parse_operator("D*D") == parse_operator("D^2")


def test_like_terms_merge():
    assert parse_operator("x*D + 2*x*D - D*1/2") == parse_operator("(3*x - 1/2)*D")
    assert parse_operator("x - x") == OperatorExpr()
    assert format_operator(OperatorExpr()) == "0"


def test_literals():
    assert parse_operator("1.25*x") == parse_operator("5/4*x")
    assert parse_operator("-x^0") == parse_operator("-1")
    assert parse_operator("D^0") == parse_operator("1")


@pytest.mark.parametrize(
    "text, pos",
    [("x*", 2), ("x + + D", 4), ("2x", 1), ("x^a", 2), ("(x", 2), ("x $ D", 2), ("x^1.5", 2),
     ("1/0*x", 0), ("", 0)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(OperatorSyntaxError) as err:
        parse_operator(text)
    assert err.value.position == pos


@given(operators)
def test_print_parse_roundtrip(expr):
    assert parse_operator(format_operator(expr)) == expr


def test_realize_examples():
    ns = nodeset_from_list([1, 2])
    assert (realize("1", ns) == identity(2, Mode.EXACT)).all()
    assert realize("x*D", ns).tolist() == [[-1, 1], [-2, 2]]
    assert (realize("x*D", ns) == x_matrix(ns) @ d_matrix_bzb(ns)).all()


def test_realize_identity_float():
    ns = nodeset_from_list([0.5, 1.5, 4.0])
    assert (realize("1", ns) == np.eye(3)).all()


@given(node_sets(max_size=6))
def test_realize_d_is_d(ns):
    assert (realize("D", ns) == d_matrix_bzb(ns)).all()


@given(node_sets(max_size=6, nonzero=True), q_values)
def test_realize_qd_is_qd(ns, q):
    assert (realize("D", ns, q, variant="q") == q_d_matrix(ns, q)).all()
    V = vandermonde(ns)
    assert (realize("x*D", ns, q, variant="q") @ V == V @ nq_matrix(ns.n, q)).all()


@given(node_sets(max_size=5, nonzero=True), q_values)
def test_realize_x_d_on_monomials(ns, q):
    M = realize("x*D", ns, q, variant="q")
    for m in range(ns.n):
        v = [x**m for x in ns.nodes]
        assert list(apply_matrix(M, v)) == [basic_number(m, q) * x**m for x in ns.nodes]


@given(node_sets(max_size=5), operators, operators)
def test_realize_is_linear(ns, a, b):
    assert (realize(a + b, ns) == realize(a, ns) + realize(b, ns)).all()


def test_realize_matches_polynomial_matrix_formula():
    ns = nodeset_from_list([F(1, 2), 2, -3])
    D, X = d_matrix_bzb(ns), x_matrix(ns)
    want = X @ X @ D @ D - 3 * D + 2 * identity(3, Mode.EXACT)
    assert (realize("x^2*D^2 - 3*D + 2", ns) == want).all()


def test_high_powers_annihilate_polynomial_samples():
    ns = nodeset_from_list([1, 2, 3])
    M = realize("D^3", ns)
    assert (M == 0).all()


def test_realize_errors():
    ns0 = nodeset_from_list([0, 1])
    with pytest.raises(ZeroNodeError):
        realize("D", ns0, F(2), variant="q")
    with pytest.raises(CalogeroError):
        realize("D", nodeset_from_list([1, 2]), None, variant="q")
    with pytest.raises(CalogeroError):
        realize("D", nodeset_from_list([1, 2]), variant="sideways")


def test_apply_matrix_examples():
    ns = nodeset_from_list([1, 2])
    assert list(apply_matrix(identity(2, Mode.EXACT), [F(3), F(7)])) == [3, 7]
    zero = np.full((2, 2), F(0), dtype=object)
    assert list(apply_matrix(zero, [F(3), F(7)])) == [0, 0]
    assert list(apply_matrix(d_matrix_bzb(ns), [5, 9])) == [4, 4]
    with pytest.raises(CalogeroError):
        apply_matrix(d_matrix_bzb(ns), [1, 2, 3])
