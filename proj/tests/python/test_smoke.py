import pytest

import stratos


def test_check_worked_example():
    assert stratos.check("a@2 in b@3")
    assert stratos.check("a@2 = a@2")
    assert not stratos.check("a@2 in c@4")
    assert not stratos.check("a@2 in a@2")
    assert not stratos.check("a@2 = b@3")


def test_check_parse_error():
    with pytest.raises(ValueError):
        stratos.check("a@2 in")


def test_infer():
    assignment, resolved = stratos.infer("x in y")
    assert assignment == [("x", 1), ("y", 2)]
    assert resolved == "x@1 in y@2"
    with pytest.raises(ValueError):
        stratos.infer("a in a")


def test_infer_anchor():
    assignment, _ = stratos.infer("x in y", anchor=5)
    assert assignment == [("x", 5), ("y", 6)]


def test_interp_and_plus():
    assert stratos.interp("bot") == "bot"
    shifted = stratos.plus("forall a@1. a@1 = a@1")
    assert shifted == "forall a@2. a@2 = a@2"
    with pytest.raises(ValueError):
        stratos.interp("x in y")  # bare levels: run inference first


def test_subst():
    assert stratos.subst("elt(atm(a@0), a@1)", "[a@1 := full@1]") == "top"
    assert stratos.subst("atm(a@1)", "[a@1 := empty@1]") == "empty@1"


def test_sat():
    assert stratos.sat("top")
    assert not stratos.sat("bot")
    model = "prepoint\na@1 <- atm(b@0)\n"
    assert stratos.sat("elt(atm(b@0), a@1)", model)


def test_prove_and_check_proof():
    text = stratos.prove("X |- X", depth=3)
    assert text is not None
    ok, diag = stratos.check_proof(text)
    assert ok, diag
    assert stratos.prove("|- bot", depth=4) is None


def test_cut_eliminate():
    cut = (
        "cut | principal: X | seq: X |- X\n"
        "  ax | principal: X | seq: X |- X\n"
        "  ax | principal: X | seq: X |- X\n"
    )
    out = stratos.cut_eliminate(cut)
    assert not any(line.lstrip().startswith("cut") for line in out.splitlines())
    ok, diag = stratos.check_proof(out)
    assert ok, diag


def test_theory_derives():
    theory = "theta-closed\neq: atm(a@1) == full@1\n"
    cert = stratos.theory_derives(theory, "atm(a@1) == full@1", depth=2)
    assert cert is not None
    assert stratos.theory_derives(theory, "atm(b@1) == empty@1", depth=2) is None


def test_laws():
    ok, report = stratos.laws("constants", n=5, seed=11)
    assert ok
    assert "constants.top_bot: OK" in report
    assert set(stratos.suites()) >= {"sigma", "sequent", "numerals"}
