import json
import os
import pathlib

import pytest

import bhk

FIXTURES = pathlib.Path(os.environ.get("BHK_FIXTURES", pathlib.Path(__file__).resolve().parents[2] / "fixtures"))


def fx(name):
    return str(FIXTURES / f"{name}.json")


def test_analyze_cubic():
    s = bhk.analyze(fx("cubic_J"))["summary"]
    assert s["k"] == "1"
    assert s["central_charge"] == "1"
    assert s["group"]["order"] == 3
    assert s["dual_group"]["order"] == 9


def test_accepts_dict_and_text():
    doc = {"mode": "bh", "matrix": [[3, 0, 0], [0, 3, 0], [0, 0, 3]], "group": {"generators": [["1/3", "1/3", "1/3"]]}}
    assert bhk.analyze(doc) == bhk.analyze(json.dumps(doc))


def test_rings_engines_agree():
    r = bhk.rings(fx("cubic_J"), side="B", engine="both")
    assert r["tables"]["complex"] == {"0/0": 1, "0/1": 1, "1/0": 1, "1/1": 1}
    assert r["tables"]["complex"] == r["tables"]["orbifold"]


def test_verify_cubic_passes():
    r = bhk.verify(fx("cubic_SL"))
    assert [v["status"] for v in r["verdicts"]] == ["PASS"] * 5
    assert bhk.exit_code(r) == 0
    assert "Q-=1" in bhk.render_text(r)


def test_quintic_orbifold_only():
    r = bhk.verify(fx("quintic_J"), engine="orbifold")
    assert r["tables"]["B"]["1/1"] == 101
    assert r["verdicts"][0]["status"] == "SKIPPED"
    assert all(v["status"] == "PASS" for v in r["verdicts"][1:])


def test_check_unified():
    assert bhk.exit_code(bhk.check_unified(fx("bb_simplex"))) == 0
    z = bhk.check_unified(fx("bb_simplex"), degree_bound=0)
    assert z["primal"]["verdict"] == "FAIL-UNKNOWN"


def test_dual_and_milnor():
    d = bhk.dual(fx("chain_cubic_J"))
    assert d["dual_input"]["matrix"] == [[2, 0, 0], [1, 3, 0], [0, 0, 3]]
    assert bhk.milnor_dims(fx("cubic_J")) == {"0": 1, "1/3": 3, "2/3": 3, "1": 1}


def test_errors():
    with pytest.raises(bhk.InputError, match="singular exponent matrix"):
        bhk.analyze(fx("singular"))
    with pytest.raises(bhk.NotCalabiYau):
        bhk.rings(fx("cubic_trivial"))
    with pytest.raises(bhk.InputError):
        bhk.analyze('{"mode": "bh", "matrix": [[3]]')
    assert issubclass(bhk.NotCalabiYau, bhk.BhkError)
