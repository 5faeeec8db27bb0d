"""Interpolation node sets and node generators."""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ModeError, NodeError, ZeroNodeError
from .scalar import Mode, coerce, mode_of, to_array

__all__ = [
    "NodeSet",
    "nodeset_from_list",
    "generate_nodes",
    "equispaced",
    "chebyshev",
    "geometric",
    "random_rational_nodes",
    "FLOAT_GAP_TOL",
]

# Minimum pairwise gap in float mode, relative to the node span.
FLOAT_GAP_TOL = 1e-12


@dataclass(frozen=True)
class NodeSet:
    """Ordered, pairwise-distinct interpolation nodes in a single scalar mode.

    Build instances with :func:`nodeset_from_list` (or the generators), which
    validate; the constructor itself does not.
    """

    nodes: tuple
    mode: Mode

    @property
    def n(self):
        return len(self.nodes)

    def __len__(self):
        return len(self.nodes)

    @property
    def all_nonzero(self):
        return all(x != 0 for x in self.nodes)

    def array(self):
        """Nodes as a 1-D array: object dtype of Fractions, or float64."""
        return to_array(self.nodes, self.mode)

    def require_nonzero(self, what):
        if not self.all_nonzero:
            j = next(i for i, x in enumerate(self.nodes) if x == 0)
            raise ZeroNodeError(
                f"{what} needs every node nonzero (x_j != 0), but node {j} is 0"
            )

    def to_mode(self, mode):
        """Re-express the nodes in another mode (float -> exact is lossless)."""
        mode = Mode(mode)
        if mode is self.mode:
            return self
        if mode is Mode.EXACT:
            values = [Fraction(x) for x in self.nodes]
        else:
            values = [float(x) for x in self.nodes]
        return nodeset_from_list(values, mode)


def _infer_mode(values):
    modes = {mode_of(v) for v in values} - {None}
    if len(modes) > 1:
        raise ModeError("node list mixes exact and float scalars")
    return modes.pop() if modes else Mode.EXACT


def nodeset_from_list(values, mode=None):
    """Validate ``values`` as a node set, preserving their order.

    Exact mode rejects any repeated value; float mode rejects pairs closer
    than ``FLOAT_GAP_TOL`` times the span of the nodes.
    """
    values = list(values)
    if not values:
        raise NodeError("a node set needs at least one node")
    mode = _infer_mode(values) if mode is None else Mode(mode)
    nodes = tuple(coerce(v, mode) for v in values)

    if mode is Mode.EXACT:
        seen = {}
        for i, x in enumerate(nodes):
            if x in seen:
                raise NodeError(f"duplicate node {x} at positions {seen[x]} and {i}")
            seen[x] = i
    else:
        order = np.argsort(nodes, kind="stable")
        xs = np.asarray(nodes)[order]
        span = xs[-1] - xs[0]
        if len(xs) > 1:
            gaps = np.diff(xs)
            i = int(np.argmin(gaps))
            if gaps[i] == 0 or gaps[i] < FLOAT_GAP_TOL * span:
                raise NodeError(
                    f"nodes at positions {order[i]} and {order[i + 1]} coincide "
                    f"(gap {gaps[i]:.3g} below {FLOAT_GAP_TOL:g} x span)"
                )
    return NodeSet(nodes, mode)


def equispaced(a, b, n, mode=Mode.EXACT):
    mode = Mode(mode)
    a, b = coerce(a, mode), coerce(b, mode)
    _check_count(n)
    if not a < b:
        raise NodeError(f"equispaced nodes need a < b, got a={a}, b={b}")
    if n == 1:
        return nodeset_from_list([(a + b) / 2], mode)
    h = (b - a) / (n - 1)
    return nodeset_from_list([a + j * h for j in range(n)], mode)


def chebyshev(a, b, n, mode=Mode.FLOAT):
    """Chebyshev points of the first kind on [a, b], float mode only."""
    if Mode(mode) is Mode.EXACT:
        raise NodeError("chebyshev nodes are irrational; use float mode")
    a, b = coerce(a, Mode.FLOAT), coerce(b, Mode.FLOAT)
    _check_count(n)
    if not a < b:
        raise NodeError(f"chebyshev nodes need a < b, got a={a}, b={b}")
    mid, half = (a + b) / 2, (b - a) / 2
    values = []
    for j in range(1, n + 1):
        # cos(pi/2) is not exactly 0 in binary64; pin the middle node of odd n
        values.append(mid if 2 * j - 1 == n else mid + half * math.cos((2 * j - 1) * math.pi / (2 * n)))
    return nodeset_from_list(values, Mode.FLOAT)


def geometric(c, r, n, mode=Mode.EXACT):
    """q-lattice ``c, c*r, c*r**2, ...``."""
    mode = Mode(mode)
    c, r = coerce(c, mode), coerce(r, mode)
    _check_count(n)
    if c == 0:
        raise NodeError("geometric nodes need a nonzero start c")
    if r in (0, 1, -1):
        raise NodeError(f"geometric ratio r={r} would make nodes coincide")
    return nodeset_from_list([c * r**j for j in range(n)], mode)


_GENERATORS = {"equispaced": equispaced, "chebyshev": chebyshev, "geometric": geometric}


def generate_nodes(kind, params, n, mode=Mode.EXACT):
    """Dispatch by name: ``equispaced(a, b)``, ``chebyshev(a, b)`` or
    ``geometric(c, r)``."""
    try:
        gen = _GENERATORS[kind]
    except KeyError:
        raise NodeError(f"unknown node kind {kind!r}; expected one of {sorted(_GENERATORS)}")
    if len(params) != 2:
        raise NodeError(f"{kind} takes exactly two parameters, got {len(params)}")
    return gen(params[0], params[1], n, mode)


def _check_count(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise NodeError(f"node count must be a positive integer, got {n!r}")


def random_rational_nodes(n, seed, mode=Mode.EXACT):
    """Seeded random rationals p/q with p in [-50, 50] minus {0}, q in [1, 10].

    Draws are rejection-sampled until n distinct values are collected, so
    every node is nonzero.
    """
    _check_count(n)
    rng = random.Random(seed)
    numerators = [i for i in range(-50, 51) if i != 0]
    picked = []
    seen = set()
    while len(picked) < n:
        p = rng.choice(numerators)
        x = Fraction(p, rng.randint(1, 10))
        if x not in seen:
            seen.add(x)
            picked.append(x)
    ns = nodeset_from_list(picked, Mode.EXACT)
    return ns.to_mode(mode)
