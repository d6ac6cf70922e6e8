import json

from repdim.cli import (
    EXIT_CAP,
    EXIT_MATH_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
    run,
)
from repdim.serialize import load_algebra_text, report_json, strip_timing


def _run(argv):
    code, report = run(argv)
    return code, report


def test_bounds_heckeA():
    code, rep = _run(["bounds", "--family", "heckeA", "--n", "7", "--ell", "3"])
    assert code == EXIT_PASS and rep["status"] == "pass"
    assert rep["payload"]["lower"] == 3 and rep["payload"]["upper"] == 4
    assert rep["payload"]["rep_class"] == "wild"


def test_bounds_heckeD_even_reason():
    code, rep = _run(["bounds", "--family", "heckeD", "--n", "6", "--ell", "3"])
    assert code == EXIT_PASS
    assert rep["payload"]["lower"] == 3 and rep["payload"]["upper"] is None
    assert "n even" in rep["payload"]["conditions"]["reason"]


def test_bounds_ariki_koike():
    code, rep = _run(
        ["bounds", "--family", "arikiKoike", "--n", "7", "--ell", "3", "--Q-list", "1,2"]
    )
    assert code == EXIT_PASS
    assert rep["payload"]["lower"] == 3 and rep["payload"]["upper"] is None


def test_bounds_usage_errors():
    code, rep = _run(["bounds", "--family", "group", "--n", "9", "--p", "3"])
    assert code == EXIT_USAGE and rep["status"] == "fail"
    code, rep = _run(["bounds", "--family", "heckeB", "--n", "2", "--ell", "2"])
    assert code == EXIT_USAGE  # missing --Q


def test_bounds_infinite_ell():
    code, rep = _run(["bounds", "--family", "heckeA", "--n", "9", "--ell", "inf"])
    assert code == EXIT_PASS
    assert rep["payload"]["rep_class"] == "semisimple"
    assert (rep["payload"]["lower"], rep["payload"]["upper"]) == (0, 0)


def test_witness_small():
    code, rep = _run(["witness", "--family", "heckeA", "--n", "3", "--ell", "2"])
    assert code == EXIT_PASS
    p = rep["payload"]
    assert p["gldim"] == 2 and p["bound"] == 2
    assert all(p["checks"].values())
    assert p["intermediates"]["induced_dim"] == 9


def test_witness_cap_exit_code():
    code, rep = _run(["witness", "--family", "group", "--n", "2", "--p", "2", "--cap", "0"])
    assert code == EXIT_CAP and rep["status"] == "partial"
    assert rep["payload"]["stage"] == "global_dimension"


def test_verify_casimir_suite():
    code, rep = _run(["verify", "--suite", "casimir"])
    assert code == EXIT_PASS
    assert all(r["ok"] for r in rep["payload"]["results"])


def test_verify_trace_seeded():
    code, rep = _run(
        ["verify", "--suite", "trace", "--family", "group", "--n", "3", "--p", "2",
         "--seed", "7"]
    )
    assert code == EXIT_PASS
    out = rep["payload"]["results"][0]
    assert out["samples"] >= 20 and not out["failures"]
    assert rep["seed"] == 7


def test_verify_mackey():
    code, rep = _run(["verify", "--suite", "mackey", "--n", "3", "--p", "2"])
    assert code == EXIT_PASS
    assert rep["payload"]["results"][0]["lhs_dim"] == 9


def test_algebra_dump_roundtrip(tmp_path):
    path = str(tmp_path / "hb2.alg")
    code, rep = _run(
        ["algebra", "--family", "heckeB", "--n", "2", "--ell", "2", "--Q", "2",
         "--path", path]
    )
    assert code == EXIT_PASS and rep["payload"]["dim"] == 8
    alg = load_algebra_text(open(path).read())
    assert alg.dim == 8
    alg.verify_associativity()


def test_indecomposables_group():
    code, rep = _run(["indecomposables", "--family", "group", "--n", "3", "--p", "2"])
    assert code == EXIT_PASS
    # P(k) of length 2, the trivial module, and the simple projective
    assert rep["payload"]["dims"] == [1, 2, 2]


def test_report_byte_determinism():
    argv = ["bounds", "--family", "heckeB", "--n", "5", "--ell", "3", "--Q", "1"]
    outs = set()
    for _ in range(2):
        _, rep = _run(argv)
        outs.add(report_json(strip_timing(rep)))
    assert len(outs) == 1


def test_report_envelope():
    _, rep = _run(["bounds", "--family", "group", "--n", "5", "--p", "3"])
    assert rep["schema"] == "v1"
    assert rep["command"][0] == "bounds"
    assert rep["seed"] == 0
    assert isinstance(rep["timing_ms"], int)
    json.loads(report_json(rep))  # JSON-safe
