import pytest

import wmodal


def test_logics():
    names = wmodal.logics()
    assert len(names) == 28
    assert "WK" in names and "KT" in names


def test_parse_and_render():
    f = wmodal.parse("[]p -> <>p")
    assert str(f) == "[]p1 -> <>p1"
    assert f == wmodal.parse("[]p1 -> <>p1")
    assert f.atoms == [1]
    with pytest.raises(wmodal.ParseError):
        wmodal.parse("p &")


def test_decide():
    assert wmodal.decide("WK", "[](p->q) -> ([]p -> []q)")
    assert not wmodal.decide("WM", "p | ~p")
    assert wmodal.decide("M", "p | ~p")
    with pytest.raises(ValueError):
        wmodal.decide("XYZ", "p")


def test_prove_and_round_trip():
    proof = wmodal.prove("WK", "[]p, [](p->q) |- []q")
    assert proof is not None and proof.check()
    back = wmodal.proof_from_json_lines(proof.json_lines())
    assert back.check() and back.sequent == proof.sequent
    assert wmodal.prove("WMC", "<>(p|q) -> <>p | <>q") is None


def test_budget():
    with pytest.raises(wmodal.BudgetExceeded):
        wmodal.prove("WK", "[](p->q) -> ([]p -> []q)", max_nodes=1)


def test_interpolate():
    c, left, right = wmodal.interpolate("WK", "p & q", "p | r")
    assert set(c.atoms) <= {1}
    assert left.check() and right.check()
    with pytest.raises(wmodal.NotATheorem):
        wmodal.interpolate("WM", "p", "q")


def test_models():
    m, w = wmodal.countermodel("WK", "<>(p|q) -> <>p | <>q", 3)
    assert m.is_model_for("WK")
    assert not m.forces(w, "<>(p|q) -> <>p | <>q")
    assert wmodal.model_from_json_lines(m.json_lines()) == m
    assert wmodal.countermodel("WK", "[](p->q)->([]p->[]q)", 3) is None
    r = wmodal.random_model("WKT", 4, 1)
    assert r.conditions("WKT")["T"]
    assert r.valid("[]p -> p")


def test_selftest():
    assert wmodal.selftest()
