import json
import os
import subprocess
import sys

import pytest

from conftest import L, pm, scalar
from rosenlin import serialize as ser
from rosenlin.cli import EXIT_FAIL, EXIT_NONCONVERGENCE, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, main
from rosenlin.constructors import RecurrenceBasis, build_frobenius
from rosenlin.exactalg import UniPoly

P_SQ = scalar(UniPoly((-1, 0, 1)))


def put(tmp_path, name, obj):
    path = tmp_path / name
    if isinstance(obj, dict):
        path.write_text(json.dumps(obj))
    else:
        ser.write(str(path), obj)
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_and_verify(tmp_path, capsys):
    inp = put(tmp_path, "p.json", P_SQ)
    out = str(tmp_path / "s.json")
    code, _, err = run(["construct", "--family", "frobenius", "--input", inp, "--out", out], capsys)
    assert code == EXIT_OK and "constructed" in err
    assert ser.read(out).S == pm([[L, -1], [-1, L]])
    code, text, _ = run(["verify", "--pencil", out, "--poly", inp, "--strong", "--ell", "2", "--mode", "direct"],
                        capsys)
    assert code == EXIT_OK and json.loads(text)["passed"]


def test_verify_failure_exit(tmp_path, capsys):
    pen = put(tmp_path, "s.json", build_frobenius(P_SQ))
    wrong = put(tmp_path, "w.json", scalar(UniPoly((1, 0, 1))))
    code, text, _ = run(["verify", "--pencil", pen, "--poly", wrong], capsys)
    assert code == EXIT_FAIL
    assert "transfer_matches" in json.loads(text)["reports"][0]["failures"]


def test_reversed_role_runs_strong_only(tmp_path, capsys):
    fam = put(tmp_path, "c.json", ser.family_doc("comrade", ([((0,),), ((0,),), ((1,),)],
                                                              RecurrenceBasis.chebyshev(3))))
    rev = str(tmp_path / "rev.json")
    assert run(["construct", "--family", "comrade", "--input", fam, "--rev", "--out", rev], capsys)[0] == 0
    poly = put(tmp_path, "p.json", scalar(UniPoly((-1, 0, 2))))
    code, text, _ = run(["verify", "--pencil", rev, "--poly", poly, "--mode", "local"], capsys)
    reports = json.loads(text)["reports"]
    assert code == EXIT_OK and [r["kind"] for r in reports] == ["strong_local"]


def test_precondition_exit(tmp_path, capsys):
    bad = put(tmp_path, "b.json", {"kind": "family_spec", "family": "blockkron",
                                   "M0": [[["0", "1"]]], "M1": [[["1", "1"]]],
                                   "eps": 0, "eta": 0, "p": 1, "m": 1})
    code, _, err = run(["construct", "--family", "blockkron", "--input", bad], capsys)
    assert code == EXIT_PRECONDITION and "eps >= 1 or eta >= 1" in err
    lin = put(tmp_path, "l.json", scalar(UniPoly((1, 1))))
    assert run(["construct", "--family", "frobenius", "--input", lin], capsys)[0] == EXIT_PRECONDITION


def test_parse_and_usage_exits(tmp_path, capsys):
    garbage = tmp_path / "g.json"
    garbage.write_text("{oops")
    assert run(["smith", "--input", str(garbage)], capsys)[0] == EXIT_PARSE
    assert run(["smith", "--input", str(tmp_path / "missing.json")], capsys)[0] == EXIT_PARSE
    assert run(["construct", "--family", "nope", "--input", "x"], capsys)[0] == EXIT_PARSE
    p = put(tmp_path, "p.json", P_SQ)
    assert run(["construct", "--family", "cork", "--input", p], capsys)[0] == EXIT_PARSE
    assert run(["smith", "--input", p, "--at", "1/0"], capsys)[0] == EXIT_PARSE


def test_smith_outputs(tmp_path, capsys):
    inp = put(tmp_path, "j.json", pm([[L, 1], [0, L]]))
    code, text, _ = run(["smith", "--input", inp, "--at", "0"], capsys)
    d = json.loads(text)
    assert code == 0 and [f["text"] for f in d["invariant_factors"]] == ["1", "λ^2"]
    assert d["local_orders"]["orders"] == [0, 2]


def test_eig(tmp_path, capsys):
    pen = put(tmp_path, "s.json", build_frobenius(scalar(UniPoly.from_roots([1, 2, 3]))))
    poly = put(tmp_path, "p.json", scalar(UniPoly.from_roots([1, 2, 3])))
    code, text, _ = run(["eig", "--pencil", pen, "--recover", "--poly", poly], capsys)
    d = json.loads(text)
    assert code == 0 and sorted(round(z[0], 8) for z in d["eigenvalues"]) == [1, 2, 3]
    assert d["recovery"]["passed"]


def test_eig_nonconvergence_exit(tmp_path, capsys):
    pen = put(tmp_path, "s.json", build_frobenius(scalar(UniPoly.from_roots([1, 2, 3]))))
    code, _, err = run(["eig", "--pencil", pen, "--tol", "1e-300"], capsys)
    assert code == EXIT_NONCONVERGENCE and "did not reach" in err


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "rosenlin", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "construct" in r.stdout


def test_rational_realization_mismatch(tmp_path, capsys):
    from rosenlin.exactalg import ONE, RatFunc
    from rosenlin.polymat import RatMatrix
    R = RatMatrix([[RatFunc(UniPoly((1, 0, 0, 1)), L)]])
    doc = {"kind": "family_spec", "family": "rational", "R": ser.to_doc(R),
           "realization": {"A_s": [[["1", "1"]]], "B_s": [[["1", "1"]]], "C_s": [[["1", "1"]]]}}
    code, _, err = run(["construct", "--family", "rational", "--input", put(tmp_path, "r.json", doc)], capsys)
    assert code == EXIT_PRECONDITION
    doc["realization"]["A_s"] = [[["0", "1"]]]
    code, text, _ = run(["construct", "--family", "rational", "--input", put(tmp_path, "r.json", doc)], capsys)
    assert code == EXIT_OK and json.loads(text)["n"] == 2
