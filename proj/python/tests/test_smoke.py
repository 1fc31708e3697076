import json
import os
import pathlib

import pytest

import hopfcoh

DATA = pathlib.Path(os.environ.get("HOPFCOH_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_load_and_axioms():
    h = hopfcoh.load_algebra(str(DATA / "kc2_gf2.json"))
    assert h.dim == 2
    assert h.field == "GF(2)"
    assert all(h.check_axioms().values())


def test_broken_counit_named():
    h = hopfcoh.load_algebra(str(DATA / "kc2_q_broken_counit.json"))
    assert h.check_axioms()["counit"] is False


def test_dims():
    assert hopfcoh.dims(hopfcoh.cyclic_group_algebra(2), "b", 3) == [1, 0, 0, 0]
    assert hopfcoh.dims(hopfcoh.cyclic_group_algebra(2, p=2), "b", 3) == [1, 1, 1, 1]
    sweedler = hopfcoh.taft_algebra(2, "-1")
    assert hopfcoh.dims(sweedler, "h4", 2) == hopfcoh.dims(sweedler, "b", 2) == [1, 0, 3]
    assert hopfcoh.dims(sweedler, "gs", 1) == [1, 0]


def test_coefficients_from_files():
    h = hopfcoh.load_algebra(str(DATA / "kc2_q.json"))
    r = hopfcoh.cohomology(h, "h4", 1, module=str(DATA / "kc2_q_under_tensor.json"))
    assert r["dims"][0] == 1


def test_json_round_trip():
    h = hopfcoh.taft_algebra(3, "2", p=7)
    j = h.to_json()
    again = hopfcoh.algebra_from_json(json.dumps(j))
    assert again.dim == 9
    assert again.to_json() == j


def test_representatives_in_result():
    r = hopfcoh.cohomology(hopfcoh.cyclic_group_algebra(2, p=2), "b", 2, representatives=True)
    assert [len(x) for x in r["representatives"]] == r["dims"]


def test_cup_table():
    rows = hopfcoh.cup_table(hopfcoh.cyclic_group_algebra(2, p=2), 3)
    assert all(r["commutator_coboundary"] for r in rows)
    square = [r for r in rows if r["left"] == (1, 0) and r["right"] == (1, 0)]
    assert square[0]["product"] == ["1"]


def test_verify_threads():
    h = hopfcoh.cyclic_group_algebra(2, p=2)
    a = hopfcoh.verify(h, "cup", threads=1)
    b = hopfcoh.verify(h, "cup", threads=4)
    assert a == b and a["passed"]


def test_errors():
    with pytest.raises(hopfcoh.InputError):
        hopfcoh.algebra_from_json("{")
    with pytest.raises(hopfcoh.InputError):
        hopfcoh.taft_algebra(2, "1")
    with pytest.raises(hopfcoh.InputError):
        hopfcoh.cohomology(hopfcoh.cyclic_group_algebra(2), "ext", 1)
