"""Smoke tests for the Python bindings: importability plus one real check of
each exposed entry point."""

import pytest

import finring


def test_version_is_a_string():
    assert isinstance(finring.__version__, str)
    assert finring.__version__


def test_property_registry():
    ids = finring.property_ids()
    assert len(ids) == 35
    assert "h_semicommutative" in ids
    assert "reduced" in ids


def test_check_returns_witnesses():
    v = finring.check("Tn(GF(2),2)", "abelian")
    assert v["verdict"] == "fails"
    roles = [(w["role"], w["label"]) for w in v["witness"]]
    assert roles == [("e", "E22"), ("r", "E12")]

    assert finring.check("Z6", "h_semicommutative")["verdict"] == "holds"
    assert finring.check("Sprime(Z4,2)", "h_semicommutative")["verdict"] == "holds"


def test_not_applicable_reason():
    v = finring.check("TprimeRn(GF(2),3)", "left_pp")
    assert v["verdict"] == "not_applicable"
    assert v["reason"]


def test_ring_info():
    info = finring.ring_info("M2(GF(2))")
    assert info["size"] == 16
    assert info["unital"] is True
    assert info["commutative"] is False


def test_structure_sets():
    sets = finring.structure_sets("Z12")
    assert sets["nil"] == ["0", "6"]
    assert set(sets["units"]) == {"1", "5", "7", "11"}
    assert sets["center"] == sets["hypercenter"] == [str(k) for k in range(12)]


def test_suite_checks_registry():
    checks = finring.suite_checks()
    assert len(checks) == 41
    assert all(c["id"] and c["statement"] for c in checks)


def test_paper_example_ids():
    assert "e2_7" in finring.paper_example_ids()


def test_errors_are_typed():
    with pytest.raises(finring.RingException):
        finring.check("Zx", "reduced")
    with pytest.raises(finring.RingException):
        finring.check("Z4", "no_such_property")
