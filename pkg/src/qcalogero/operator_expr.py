"""Linear operators in x and the derivative symbol D, and their matrices.

Grammar (whitespace ignored)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := number | 'x' ['^' int] | 'D' ['^' int] | '(' expression ')'
    number     := integer | decimal | integer '/' integer

Input must already be normal ordered: inside a product nothing depending on
x may follow a factor containing D. ``"D*x"`` is rejected rather than
rewritten, because D x and x D are different operators.

Realizing an expression substitutes X = diag(x_j) for x and a
differentiation matrix for D: the classical one, or the q-deformed one.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .calogero import d_matrix_bzb
from .errors import CalogeroError, OperatorSyntaxError, ScalarParseError
from .matrices import freeze, identity, matrix_mode, require_square
from .polynomial import Polynomial
from .qmatrix import q_d_matrix
from .scalar import Mode, format_scalar, parse_scalar, to_array

__all__ = ["OperatorExpr", "parse_operator", "format_operator", "realize", "apply_matrix"]


@dataclass(frozen=True)
class OperatorExpr:
    """sum over k of coefficient_k(x) * D^k.

    ``terms`` is a tuple of ``(power, Polynomial)`` pairs, sorted by power,
    one per power, zero coefficients dropped. The empty tuple is the zero
    operator.
    """

    terms: tuple = ()

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(sorted((k, p) for k, p in mapping.items() if not p.is_zero())))

    @property
    def order(self):
        return max((k for k, _ in self.terms), default=-1)

    def as_dict(self):
        return dict(self.terms)

    def is_multiplication(self):
        """True when no D appears (a pure polynomial in x)."""
        return all(k == 0 for k, _ in self.terms)

    def is_constant(self):
        return all(p.is_constant() for _, p in self.terms)

    def __add__(self, other):
        out = self.as_dict()
        for k, p in other.terms:
            out[k] = out.get(k, Polynomial()) + p
        return OperatorExpr.from_mapping(out)

    def __neg__(self):
        return OperatorExpr(tuple((k, -p) for k, p in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return format_operator(self)


def _compose(left, right, position):
    # normal-ordered product: only a D-free left factor may meet an
    # x-dependent right factor
    if not left.is_multiplication() and not right.is_constant():
        raise OperatorSyntaxError(
            "an x-dependent factor follows D; write operators normal ordered "
            "(x factors left of D factors) because D*x != x*D",
            position,
        )
    out = {}
    for i, p in left.terms:
        for k, r in right.terms:
            out[i + k] = out.get(i + k, Polynomial()) + p * r
    return OperatorExpr.from_mapping(out)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?)|(?P<sym>[xD])|(?P<op>[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise OperatorSyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, value):
        kind, text, pos = self.take()
        if kind != "op" or text != value:
            raise OperatorSyntaxError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self):
        expr = self.expression()
        kind, text, pos = self.peek()
        if kind != "end":
            raise OperatorSyntaxError(f"unexpected {text!r}", pos)
        return expr

    def expression(self):
        sign = 1
        kind, text, pos = self.peek()
        if kind == "op" and text in "+-":
            self.take()
            sign = -1 if text == "-" else 1
        expr = self.term()
        if sign < 0:
            expr = -expr
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                expr = expr + rhs if text == "+" else expr - rhs
            else:
                return expr

    def term(self):
        expr = self.factor()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text == "*":
                self.take()
                pos = self.peek()[2]
                expr = _compose(expr, self.factor(), pos)
            else:
                return expr

    def exponent(self):
        kind, text, pos = self.peek()
        if not (kind == "op" and text == "^"):
            return 1
        self.take()
        kind, text, pos = self.take()
        if kind != "num" or not text.isdigit():
            raise OperatorSyntaxError("exponent must be a nonnegative integer", pos)
        return int(text)

    def factor(self):
        kind, text, pos = self.take()
        if kind == "num":
            try:
                value = parse_scalar(text)
            except ScalarParseError as exc:
                raise OperatorSyntaxError(str(exc), pos) from None
            return OperatorExpr.from_mapping({0: Polynomial.constant(value)})
        if kind == "sym" and text == "x":
            return OperatorExpr.from_mapping({0: Polynomial.monomial(self.exponent())})
        if kind == "sym" and text == "D":
            return OperatorExpr.from_mapping({self.exponent(): Polynomial.constant(Fraction(1))})
        if kind == "op" and text == "(":
            inner = self.expression()
            self.expect_op(")")
            return inner
        raise OperatorSyntaxError(f"expected a number, x, D or '(', found {text or 'end of input'!r}", pos)


def parse_operator(text):
    """Parse ``text`` into a normalized :class:`OperatorExpr`.

    >>> str(parse_operator("x^2*D^2 + 3*D + 1"))
    '1 + 3*D + x^2*D^2'
    """
    return _Parser(text).parse()


def format_operator(expr):
    """Render ``expr`` in the input grammar; reparsing gives ``expr`` back."""
    pieces = []
    for k, poly in expr.terms:
        for i, c in enumerate(poly.coeffs):
            if c == 0:
                continue
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if k:
                factors.append("D" if k == 1 else f"D^{k}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, format_scalar(mag))
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def realize(expr, ns, q=None, variant="classical"):
    """Matrix of ``expr`` on the node set: sum_k p_k(X) M^k.

    ``variant="classical"`` uses the BZB^-1 differentiation matrix;
    ``variant="q"`` uses the q-differentiation matrix, which needs ``q`` and
    nonzero nodes. Powers of M are formed by repeated multiplication. In the
    classical case M^k with k >= n annihilates every sample vector of a
    polynomial of degree < n.
    """
    if isinstance(expr, str):
        expr = parse_operator(expr)
    if variant in ("q", "q-deformed"):
        if q is None:
            raise CalogeroError("the q-deformed variant needs a value for q")
        ns.require_nonzero("the q-deformed operator")
        M = q_d_matrix(ns, q)
    elif variant == "classical":
        M = d_matrix_bzb(ns)
    else:
        raise CalogeroError(f"unknown variant {variant!r}; use 'classical' or 'q'")

    x = ns.array()
    total = np.array(identity(ns.n, ns.mode)) * 0
    power = np.array(identity(ns.n, ns.mode))
    current = 0
    for k, poly in expr.terms:
        while current < k:
            power = power @ M
            current += 1
        coeff = to_array([poly.to_mode(ns.mode)(xj) for xj in x], ns.mode)
        total = total + coeff[:, None] * power
    return freeze(total)


def apply_matrix(m, samples):
    """Matrix-vector product on node samples, in the matrix's scalar mode."""
    m = require_square(m)
    if len(samples) != m.shape[0]:
        raise CalogeroError(f"{m.shape[0]}x{m.shape[0]} matrix applied to {len(samples)} samples")
    mode = matrix_mode(m)
    v = to_array(samples, mode)
    if mode is Mode.EXACT:
        return freeze(to_array(list(m @ v), mode))
    return freeze(m @ v)
