"""End-to-end command-line checks on golden documents and exit codes."""

import json

import pytest

from gradedet.algebra import preset, twist
from gradedet.cli import main
from gradedet.errors import VerificationFailure
from gradedet.gdet import canonical_sigma
from gradedet.gmatrix import GradedMatrix, identity
from gradedet.serialize import (digest_algebra, digest_matrix,
                                digest_multiplier, format_algebra,
                                format_matrix, format_multiplier,
                                parse_algebra)

Q = preset("quaternions")
J = Q.basis_element("j")
ZERO = Q.group.zero()
JT = J.degree_of()
X = GradedMatrix(Q, [ZERO, JT], [ZERO, JT], [[Q.one(), J], [J, Q.one()]])


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def xfile(tmp_path):
    p = tmp_path / "x.json"
    p.write_text(json.dumps(format_matrix(X)))
    return str(p)


def test_gdet0_golden(capsys, xfile):
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", xfile)
    assert code == 0
    assert doc == {
        "format": 1,
        "root_order": 1,
        "result": [{"b": "1", "c": "2"}],
        "degree": [0, 0],
        "inputs": {"algebra": digest_algebra(Q), "matrix": digest_matrix(X)},
    }


def test_trace_of_identity(capsys, tmp_path):
    dn = preset("dual_numbers", 2)
    odd = [dn.group.element([1, 0]), dn.group.element([0, 1])]
    p = tmp_path / "id.json"
    p.write_text(json.dumps(format_matrix(identity(dn, odd))))
    code, doc = run(capsys, "trace", "--algebra", "preset:dual_numbers:2",
                    "--matrix", str(p))
    assert code == 0
    # Tr(I) = r_even - r_odd = -2
    assert doc["result"] == [{"b": "1", "c": "-2"}]
    assert doc["degree"] == [0, 0]


def test_gdet_with_sigma_file(capsys, xfile, tmp_path):
    sigma = canonical_sigma(Q)
    sp = tmp_path / "sigma.json"
    sp.write_text(json.dumps(format_multiplier(sigma)))
    code, doc = run(capsys, "gdet", "--algebra", "preset:quaternions",
                    "--matrix", xfile, "--sigma", str(sp))
    assert code == 0
    assert doc["result"] == [{"b": "1", "c": "2"}]
    assert doc["inputs"]["sigma"] == digest_multiplier(sigma)


def test_degrees_override(capsys, xfile):
    # with both degrees zero the worked matrix picks up the sigma-dependent
    # value; the canonical multiplier gives 2
    code, doc = run(capsys, "gdet", "--algebra", "preset:quaternions",
                    "--matrix", xfile, "--degrees", "[[0,0],[0,0]]")
    assert code == 0
    assert doc["result"] == [{"b": "1", "c": "2"}]
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", xfile,
                    "--degrees", json.dumps({"col": [[0, 0], [0, 1]]}))
    assert code == 0
    assert doc["result"] == [{"b": "1", "c": "2"}]


def test_degrees_override_errors(capsys, xfile):
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", xfile, "--degrees", "[[0,0]]")
    assert code == 2
    assert doc["error"] == "ParseError"
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", xfile, "--degrees", "{bad json")
    assert code == 2


def test_parse_error_exit_codes(capsys, tmp_path, xfile):
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", str(tmp_path / "absent.json"))
    assert code == 2 and doc["error"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", str(bad))
    assert code == 2
    code, doc = run(capsys, "gdet0", "--algebra", "preset:unknown",
                    "--matrix", xfile)
    assert code == 3 and doc["error"] == "InvalidParams"


def test_precondition_exit_code(capsys, tmp_path):
    dn = preset("dual_numbers", 2)
    odd = dn.group.element([1, 0])
    m = identity(dn, [odd, dn.group.zero()])
    p = tmp_path / "unsorted.json"
    p.write_text(json.dumps(format_matrix(m)))
    code, doc = run(capsys, "gber", "--algebra", "preset:dual_numbers:2",
                    "--matrix", str(p))
    assert code == 3
    assert doc["error"] == "NotParitySorted"
    assert "permute" in doc["message"]


def test_mathematical_exit_code(capsys, tmp_path):
    dn = preset("dual_numbers", 2)
    e1 = dn.basis_element("eps1")
    nu = [dn.group.zero(), e1.degree_of()]
    m = GradedMatrix(dn, nu, nu, [[dn.one(), e1], [e1, dn.zero()]])
    p = tmp_path / "singular.json"
    p.write_text(json.dumps(format_matrix(m)))
    code, doc = run(capsys, "gber", "--algebra", "preset:dual_numbers:2",
                    "--matrix", str(p))
    assert code == 4
    assert doc["error"] == "SingularOddBlock"
    assert VerificationFailure("x").exit_code == 5


def test_twist_round_trip(capsys):
    code, doc = run(capsys, "twist", "--algebra", "preset:quaternions")
    assert code == 0
    back = parse_algebra(doc)
    want = twist(Q, canonical_sigma(Q))
    assert back.labels == want.labels
    assert back.table == want.table
    assert doc["inputs"]["algebra"] == digest_algebra(Q)


def test_solve_sigma(capsys):
    code, doc = run(capsys, "solve-sigma", "--algebra", "preset:quaternions")
    assert code == 0
    assert len(doc["all"]) == 8
    assert doc["multiplier"] == doc["all"][0]
    assert all(d["format"] == 1 for d in doc["all"])


def test_verify_suite(capsys):
    code, doc = run(capsys, "verify", "--suite", "algebra", "--seed", "3")
    assert code == 0
    assert doc["seed"] == 3
    assert len(doc["reports"]) == 1
    assert doc["reports"][0]["name"] == "twisted_quaternion_tables"
    assert doc["reports"][0]["failures"] == []
    assert doc["reports"][0]["instances"] > 0


def test_pretty_format(capsys, xfile):
    code, doc = run(capsys, "gdet0", "--algebra", "preset:quaternions",
                    "--matrix", xfile, "--format", "pretty")
    assert code == 0
    out = json.dumps(doc, indent=2, sort_keys=True)
    assert doc["result"] == [{"b": "1", "c": "2"}]
    assert "\n" in out


def test_algebra_from_file(capsys, tmp_path, xfile):
    ap = tmp_path / "alg.json"
    ap.write_text(json.dumps(format_algebra(Q)))
    code, doc = run(capsys, "gdet0", "--algebra", str(ap),
                    "--matrix", xfile)
    assert code == 0
    assert doc["result"] == [{"b": "1", "c": "2"}]
