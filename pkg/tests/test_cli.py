import json
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from qcalogero.calogero import d_matrix_bzb
from qcalogero.cli import main
from qcalogero.io import MatrixDocument, load_nodes, matrix_from_csv, matrix_to_csv, nodes_from_json
from qcalogero.nodes import nodeset_from_list
from qcalogero.qmatrix import q_d_matrix
from qcalogero.scalar import Mode

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def node_file(tmp_path):
    def write(values, mode="exact"):
        p = tmp_path / f"nodes_{len(values)}_{mode}.json"
        p.write_text(json.dumps({"nodes": values, "mode": mode}))
        return str(p)
    return write


def test_nodes_command(capsys):
    code, out, _ = run(capsys, "nodes", "equispaced", "0", "1", "3", "--mode", "exact")
    assert code == 0
    assert json.loads(out) == {"nodes": ["0", "1/2", "1"], "mode": "exact"}
    code, out, _ = run(capsys, "nodes", "geometric", "1", "2", "4")
    assert json.loads(out)["nodes"] == ["1", "2", "4", "8"]
    assert out.endswith("\n")


def test_nodes_command_validation_exit_codes(capsys):
    code, _, err = run(capsys, "nodes", "geometric", "1", "1", "2")
    assert code == 2 and "coincide" in err
    code, _, err = run(capsys, "nodes", "chebyshev", "1", "2", "4", "--mode", "exact")
    assert code == 2
    code, out, _ = run(capsys, "nodes", "chebyshev", "1", "2", "4", "--mode", "float")
    assert code == 0 and json.loads(out)["mode"] == "float"


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_build_qd(capsys, node_file):
    path = node_file(["1", "2", "4"])
    code, out, _ = run(capsys, "build", "qD", "--nodes", path, "--q", "2", "--mode", "exact")
    assert code == 0
    doc = MatrixDocument.from_json(out)
    assert doc.kind == "qD" and doc.q == 2 and doc.mode is Mode.EXACT
    assert (doc.matrix == q_d_matrix(nodeset_from_list([1, 2, 4]), F(2))).all()


def test_build_rejects_zero_node_and_missing_q(capsys, node_file):
    path = node_file(["0", "1", "2"])
    assert run(capsys, "build", "qD", "--nodes", path, "--q", "2")[0] == 2
    assert run(capsys, "build", "D-vandermonde", "--nodes", path)[0] == 2
    code, _, err = run(capsys, "build", "qD", "--nodes", node_file(["1", "2"]))
    assert code == 2 and "--q" in err
    assert run(capsys, "build", "Nq", "--nodes", node_file(["1", "2"]))[0] == 2


def test_build_d_uses_bzb(capsys, node_file):
    code, out, _ = run(capsys, "build", "D", "--nodes", node_file(["0", "1", "2"]))
    doc = json.loads(out)
    assert code == 0 and doc["construction"] == "bzb"
    assert doc["entries"] == ["-3/2", "2", "-1/2", "-1/2", "0", "1/2", "1/2", "-2", "3/2"]


def test_missing_file_is_io_failure(capsys, tmp_path):
    code, _, err = run(capsys, "build", "D", "--nodes", str(tmp_path / "absent.json"))
    assert code == 1 and "I/O" in err


@pytest.mark.parametrize("kind", ["X", "B", "Z", "D", "D-vandermonde", "qD", "N", "Nq", "V", "C"])
def test_roundtrip_json_and_csv(capsys, tmp_path, node_file, kind):
    path = node_file(["1/2", "-3", "7/4", "2"])
    out = tmp_path / f"{kind}.json"
    code, _, _ = run(capsys, "build", kind, "--nodes", path, "--q", "3/2", "--out", str(out))
    assert code == 0
    text = out.read_text()
    doc = MatrixDocument.from_json(text)
    assert doc.to_json() == text  # string-exact round trip
    csv_out = tmp_path / f"{kind}.csv"
    run(capsys, "build", kind, "--nodes", path, "--q", "3/2", "--format", "csv", "--out", str(csv_out))
    assert (matrix_from_csv(csv_out.read_text()) == doc.matrix).all()


def test_float_roundtrip(tmp_path, capsys, node_file):
    path = node_file(["1.0", "1.3", "1.9"], mode="float")
    out = tmp_path / "d.json"
    assert run(capsys, "build", "qD", "--nodes", path, "--q", "1.5", "--out", str(out))[0] == 0
    doc = MatrixDocument.from_json(out.read_text())
    assert doc.mode is Mode.FLOAT and doc.matrix.dtype == np.float64
    assert (doc.matrix == q_d_matrix(nodeset_from_list([1.0, 1.3, 1.9]), 1.5)).all()
    assert (matrix_from_csv(matrix_to_csv(doc.matrix), Mode.FLOAT) == doc.matrix).all()


def test_build_operator(capsys):
    code, out, _ = run(capsys, "build", "operator", "--nodes", "[1,2]", "--operator", "x*D")
    doc = json.loads(out)
    assert code == 0 and doc["variant"] == "classical" and doc["operator"] == "x*D"
    assert doc["entries"] == ["-1", "1", "-2", "2"]
    assert run(capsys, "build", "operator", "--nodes", "[1,2]", "--operator", "D*x")[0] == 2


def test_apply_operator_q(capsys):
    code, out, _ = run(capsys, "apply", "--operator", "D", "--function", "monomial:2",
                       "--nodes", "[1,2,4]", "--q", "2")
    assert code == 0
    assert json.loads(out)["output"] == ["3", "6", "12"]


def test_apply_identity(capsys):
    code, out, _ = run(capsys, "apply", "--operator", "1", "--function", "poly:1,1",
                       "--nodes", "[1,2,4]")
    doc = json.loads(out)
    assert code == 0 and doc["output"] == doc["input"] == ["2", "3", "5"]


def test_apply_matrix_file(capsys, tmp_path, node_file):
    path = node_file(["1", "3", "4"])
    d = tmp_path / "d.json"
    run(capsys, "build", "D", "--nodes", path, "--out", str(d))
    code, out, _ = run(capsys, "apply", "--matrix", str(d), "--function", "monomial:0")
    assert code == 0 and json.loads(out)["output"] == ["0", "0", "0"]
    code, _, _ = run(capsys, "apply", "--matrix", str(d), "--function", "monomial:0",
                     "--nodes", "[1,2]")
    assert code == 2


def test_verify_random_exact(capsys):
    code, out, _ = run(capsys, "verify", "--random", "6", "--seed", "42", "--q", "3/2",
                       "--mode", "exact")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL", "SKIPPED"))]
    assert lines and all(l.startswith("PASS") and "residual 0" in l for l in lines)


def test_verify_float_chebyshev(capsys, tmp_path):
    nodes = tmp_path / "cheb10.json"
    assert main(["nodes", "chebyshev", "1", "2", "10", "--mode", "float"]) == 0
    nodes.write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "verify", "--nodes", str(nodes), "--q", "1.5", "--mode", "float")
    assert code == 0
    for line in out.splitlines():
        if line.startswith("PASS"):
            assert float(line.split("residual ")[1].split()[0]) < 1e-8


def test_verify_zero_node_skips_q_checks(capsys):
    code, out, _ = run(capsys, "verify", "--nodes", "[0,1,2]", "--q", "2")
    assert code == 0
    skipped = [l.split()[1] for l in out.splitlines() if l.startswith("SKIPPED")]
    assert "qd_oracle" in skipped and "dual_construction" in skipped
    assert any(l.startswith("PASS") and "derivative_exactness" in l for l in out.splitlines())


def test_verify_reports_failure(capsys, monkeypatch):
    import qcalogero.cli as cli
    from qcalogero.checks import CheckResult

    monkeypatch.setattr(cli, "run_checks", lambda ns, q, seed: [CheckResult("broken", "FAIL", F(1))])
    code, out, _ = run(capsys, "verify", "--nodes", "[1,2]")
    assert code == 1 and "FAIL" in out


def test_node_documents():
    assert nodes_from_json('["1/2", "3"]').nodes == (F(1, 2), 3)
    assert nodes_from_json('{"nodes": ["1.5"], "mode": "float"}').nodes == (1.5,)
    assert load_nodes("[1, 2.5]").nodes == (1, F(5, 2))
    assert load_nodes("[1, 2]", Mode.FLOAT).mode is Mode.FLOAT


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "qcalogero", "nodes", "geometric", "1", "2", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["nodes"] == ["1", "2", "4"]


def test_matrix_document_validation():
    from qcalogero.errors import CalogeroError

    good = MatrixDocument.build("D", d_matrix_bzb(nodeset_from_list([1, 2])),
                                nodeset_from_list([1, 2])).to_dict()
    for key, value in [("entries", ["1"]), ("kind", "W"), ("mode", "decimal"), ("nodes", ["1"])]:
        bad = dict(good, **{key: value})
        with pytest.raises(CalogeroError):
            MatrixDocument.from_dict(bad)
    with pytest.raises(CalogeroError):
        MatrixDocument.from_json("{not json")
