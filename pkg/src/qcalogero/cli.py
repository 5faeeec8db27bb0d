"""Command-line front end.

Exit codes: 0 success, 1 runtime or verification failure (including I/O
errors), 2 usage or validation error.
"""

import argparse
import json
import sys

from .calogero import (
    b_matrix,
    d_matrix_bzb,
    d_matrix_vandermonde,
    n_matrix,
    x_matrix,
    z_matrix,
)
from .checks import FAIL, run_checks
from .errors import CalogeroError
from .io import MatrixDocument, load_nodes, matrix_to_csv, nodes_to_json
from .lagrange import lagrange_coefficients, sample, vandermonde
from .nodes import generate_nodes, random_rational_nodes
from .operator_expr import apply_matrix, format_operator, parse_operator, realize
from .qmatrix import builtin_function, nq_matrix, q_d_matrix
from .scalar import Mode, as_qparam, format_scalar, parse_scalar

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

BUILD_KINDS = ("X", "B", "Z", "D", "D-vandermonde", "qD", "N", "Nq", "V", "C", "operator")


def _mode_arg(value):
    return None if value is None else Mode(value)


def _need_q(args, what):
    if args.q is None:
        raise CalogeroError(f"{what} needs --q (there is no default deformation parameter)")


def _q(args, mode):
    return None if args.q is None else as_qparam(parse_scalar(args.q, mode), mode)


def cmd_nodes(args):
    mode = _mode_arg(args.mode) or Mode.EXACT
    params = [parse_scalar(p, mode) for p in args.params]
    ns = generate_nodes(args.kind, params, args.n, mode)
    sys.stdout.write(nodes_to_json(ns))
    return EXIT_OK


def _build_matrix(kind, ns, args):
    """Return (document kind, matrix, q, extra fields) for a build request."""
    if kind == "X":
        return "X", x_matrix(ns), None, {}
    if kind == "B":
        return "B", b_matrix(ns), None, {}
    if kind == "Z":
        return "Z", z_matrix(ns), None, {}
    if kind == "D":
        return "D", d_matrix_bzb(ns), None, {"construction": "bzb"}
    if kind == "D-vandermonde":
        return "D", d_matrix_vandermonde(ns), None, {"construction": "vandermonde"}
    if kind == "N":
        return "N", n_matrix(ns.n, ns.mode), None, {}
    if kind == "V":
        return "V", vandermonde(ns), None, {}
    if kind == "C":
        return "C", lagrange_coefficients(ns), None, {}
    if kind == "qD":
        _need_q(args, "kind qD")
        q = _q(args, ns.mode)
        return "qD", q_d_matrix(ns, q), q, {}
    if kind == "Nq":
        _need_q(args, "kind Nq")
        q = _q(args, ns.mode)
        return "Nq", nq_matrix(ns.n, q, ns.mode), q, {}
    if kind == "operator":
        if not args.operator:
            raise CalogeroError("kind operator needs --operator")
        expr = parse_operator(args.operator)
        q = _q(args, ns.mode)
        variant = "classical" if q is None else "q"
        M = realize(expr, ns, q, variant=variant)
        return "operator", M, q, {"operator": format_operator(expr), "variant": variant}
    raise CalogeroError(f"unknown kind {kind!r}")


def cmd_build(args):
    ns = load_nodes(args.nodes, _mode_arg(args.mode))
    kind, M, q, extra = _build_matrix(args.kind, ns, args)
    if args.format == "csv":
        text = matrix_to_csv(M)
    else:
        text = MatrixDocument.build(kind, M, ns, q, **extra).to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_apply(args):
    mode = _mode_arg(args.mode)
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            doc = MatrixDocument.from_json(fh.read())
        if mode is not None and mode is not doc.mode:
            raise CalogeroError(f"--mode {mode.value} conflicts with the {doc.mode.value} matrix file")
        ns = load_nodes(args.nodes, doc.mode) if args.nodes else doc.node_set()
        M = doc.matrix
    else:
        if not args.nodes:
            raise CalogeroError("--operator needs --nodes")
        ns = load_nodes(args.nodes, mode)
        q = _q(args, ns.mode)
        M = realize(parse_operator(args.operator), ns, q, variant="classical" if q is None else "q")
    f = builtin_function(args.function, ns.mode)
    samples = sample(ns, f)
    out = apply_matrix(M, samples)
    doc = {
        "function": args.function,
        "nodes": [format_scalar(x) for x in ns.nodes],
        "input": [format_scalar(v) for v in samples],
        "output": [format_scalar(v) for v in out],
        "mode": ns.mode.value,
    }
    sys.stdout.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_verify(args):
    mode = _mode_arg(args.mode)
    if args.random is not None:
        ns = random_rational_nodes(args.random, args.seed, mode or Mode.EXACT)
    else:
        ns = load_nodes(args.nodes, mode)
    q = _q(args, ns.mode)
    results = run_checks(ns, q, seed=args.seed)
    print(f"nodes: n={ns.n} mode={ns.mode.value} q={'-' if q is None else format_scalar(q)}")
    for r in results:
        print(r.line())
    failed = [r for r in results if r.status == FAIL]
    passed = sum(r.status == "PASS" for r in results)
    skipped = len(results) - passed - len(failed)
    print(f"{passed} passed, {len(failed)} failed, {skipped} skipped")
    return EXIT_FAILURE if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcalogero",
        description="Calogero matrices for d/dx and the Jackson q-derivative on arbitrary nodes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument("--mode", choices=[m.value for m in Mode], default=None,
                       help="scalar field (default: from the nodes file, else exact)")

    p = sub.add_parser("nodes", help="generate a node set")
    p.add_argument("kind", choices=["equispaced", "chebyshev", "geometric"])
    p.add_argument("params", nargs=2, metavar="P", help="a b (equispaced, chebyshev) or c r (geometric)")
    p.add_argument("n", type=int)
    add_mode(p)
    p.set_defaults(func=cmd_nodes)

    p = sub.add_parser("build", help="build a matrix on a node set")
    p.add_argument("kind", choices=BUILD_KINDS)
    p.add_argument("--nodes", required=True, help="node file or inline JSON array")
    p.add_argument("--q")
    p.add_argument("--operator", help="operator expression for kind 'operator'")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    add_mode(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("apply", help="apply a matrix or operator to sampled function values")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help="matrix document (JSON)")
    src.add_argument("--operator", help="operator expression, e.g. 'x^2*D^2 + 1'")
    p.add_argument("--function", required=True, help="monomial:m or poly:c0,c1,...")
    p.add_argument("--nodes", help="node file or inline JSON array")
    p.add_argument("--q", help="use the q-derivative with this q")
    add_mode(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="check every structural identity on a node set")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--nodes", help="node file or inline JSON array")
    src.add_argument("--random", type=int, metavar="N", help="N seeded random rational nodes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q")
    add_mode(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CalogeroError as exc:
        print(f"qcalogero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qcalogero: I/O error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
