"""JSON and CSV documents for node sets and matrices.

Scalars are always serialized as strings (``"p/q"``, ``"p"`` or a float
repr) so exact values survive the round trip. A matrix document looks like::

    {"kind": "qD", "n": 3, "q": "2", "mode": "exact",
     "nodes": ["1", "2", "4"], "entries": ["-1", "1", "0", ...]}

with ``entries`` in row-major order. The CSV form is ``n`` lines of ``n``
comma-separated scalar strings with no header.
"""

import csv
import io as _io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import CalogeroError
from .matrices import freeze
from .nodes import nodeset_from_list
from .scalar import Mode, format_scalar, parse_scalar

__all__ = [
    "MATRIX_KINDS",
    "MatrixDocument",
    "nodes_to_json",
    "nodes_from_json",
    "load_nodes",
    "matrix_to_csv",
    "matrix_from_csv",
]

MATRIX_KINDS = ("X", "B", "Z", "D", "qD", "N", "Nq", "V", "C", "operator")


class DocumentError(CalogeroError):
    pass


def _parse_entry(value, mode):
    # accept bare JSON numbers too; they are read through their text form
    if isinstance(value, bool) or not isinstance(value, (str, int, float)):
        raise DocumentError(f"scalar entries must be strings, got {value!r}")
    return parse_scalar(value if isinstance(value, str) else repr(value), mode)


def _entries_array(values, mode):
    dtype = object if mode is Mode.EXACT else np.float64
    out = np.empty(len(values), dtype=dtype)
    for i, v in enumerate(values):
        out[i] = _parse_entry(v, mode)
    return out


@dataclass(frozen=True)
class MatrixDocument:
    kind: str
    matrix: np.ndarray
    nodes: tuple
    mode: Mode
    q: object = None
    extra: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.matrix.shape[0]

    @classmethod
    def build(cls, kind, matrix, ns, q=None, **extra):
        if kind not in MATRIX_KINDS:
            raise DocumentError(f"unknown matrix kind {kind!r}")
        return cls(kind, freeze(np.array(matrix)), ns.nodes, ns.mode, q, extra)

    def node_set(self):
        return nodeset_from_list(self.nodes, self.mode)

    def to_dict(self):
        doc = {
            "kind": self.kind,
            "n": self.n,
            "q": None if self.q is None else format_scalar(self.q),
            "mode": self.mode.value,
            "nodes": [format_scalar(x) for x in self.nodes],
            "entries": [format_scalar(v) for v in self.matrix.flat],
        }
        doc.update(self.extra)
        return doc

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc):
        try:
            kind, n, mode = doc["kind"], doc["n"], Mode(doc["mode"])
            nodes, entries = doc["nodes"], doc["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"malformed matrix document: {exc}") from None
        if kind not in MATRIX_KINDS:
            raise DocumentError(f"unknown matrix kind {kind!r}")
        if not isinstance(n, int) or n < 1 or len(entries) != n * n or len(nodes) != n:
            raise DocumentError(f"matrix document needs n >= 1, n nodes and n*n entries (n={n!r})")
        q = doc.get("q")
        q = None if q is None else _parse_entry(q, mode)
        known = {"kind", "n", "q", "mode", "nodes", "entries"}
        extra = {k: v for k, v in doc.items() if k not in known}
        node_values = tuple(_parse_entry(x, mode) for x in nodes)
        matrix = freeze(_entries_array(entries, mode).reshape(n, n))
        return cls(kind, matrix, node_values, mode, q, extra)

    @classmethod
    def from_json(cls, text):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"matrix document is not valid JSON: {exc}") from None
        return cls.from_dict(doc)


def nodes_to_json(ns):
    doc = {"nodes": [format_scalar(x) for x in ns.nodes], "mode": ns.mode.value}
    return json.dumps(doc) + "\n"


def nodes_from_json(text, mode=None):
    """Parse a node document ``{"nodes": [...], "mode": ...}`` or a bare
    JSON array. An explicit ``mode`` overrides the document's own."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"node document is not valid JSON: {exc}") from None
    if isinstance(doc, dict):
        values = doc.get("nodes")
        mode = mode or doc.get("mode")
    else:
        values = doc
    if not isinstance(values, list):
        raise DocumentError("node document must hold a JSON array of scalar strings")
    mode = Mode(mode or Mode.EXACT)
    return nodeset_from_list([_parse_entry(v, mode) for v in values], mode)


def load_nodes(spec, mode=None):
    """Nodes from an inline JSON array (``"[1,2,4]"``) or from a file path."""
    text = spec if spec.lstrip().startswith("[") else open(spec, encoding="utf-8").read()
    return nodes_from_json(text, mode)


def matrix_to_csv(matrix):
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(matrix):
        writer.writerow([format_scalar(v) for v in row])
    return buf.getvalue()


def matrix_from_csv(text, mode=Mode.EXACT):
    rows = [r for r in csv.reader(_io.StringIO(text)) if r]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DocumentError("CSV matrix must have n rows of n entries")
    flat = [v.strip() for r in rows for v in r]
    return freeze(_entries_array(flat, Mode(mode)).reshape(n, n))
