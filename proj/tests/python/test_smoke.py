"""Smoke tests for the Python bindings."""

import json

import pytest

import airframe


def test_systems_and_generators():
    assert "airplane" in airframe.systems()
    assert airframe.generators() == ["alpha", "beta", "gamma", "delta", "epsilon"]
    doc = json.loads(airframe.system_json("basilica"))
    assert doc["name"] == "basilica"


def test_group_laws():
    a = airframe.evaluate("a")
    e = airframe.evaluate("e")
    assert (a * a.inverse()).is_identity()
    assert (a ** 3) == a * a * a
    assert airframe.evaluate("(d b)^3").is_identity()
    assert airframe.evaluate("d^2").is_identity()
    assert a == airframe.evaluate("[e,d] [e^-1, a^-2]")
    assert e * a == airframe.evaluate("e a")
    assert len(a) > 0 and a.is_reduced()


def test_json_round_trip():
    f = airframe.evaluate("a b' e^2")
    g = airframe.Diagram.from_json(f.to_json())
    assert g == f
    assert g.system == "airplane"
    with pytest.raises(ValueError):
        airframe.Diagram.from_json('{"system": "airplane"}')


def test_words():
    assert airframe.flatten_word("b^e") == [("e", -1), ("b", 1), ("e", 1)]
    assert airframe.normalize_word("[ a , b ]") == "[a,b]"
    with pytest.raises(ValueError):
        airframe.evaluate("a (b")
    with pytest.raises(ValueError):
        airframe.evaluate("zeta")


def test_derivative_and_commutator():
    assert airframe.derivative("e") == 1
    assert airframe.derivative("a") == 0
    assert airframe.in_commutator("[d,e]")
    assert not airframe.in_commutator("e")
    assert airframe.in_E("b")
    c, k = airframe.semidirect_split("a e^3")
    assert k == 3


def test_induced_maps():
    assert airframe.boundary_map("b")
    assert airframe.horizon_map("a")
    with pytest.raises(ValueError):
        airframe.horizon_map("d")


def test_components():
    assert airframe.map_component("", "(1/4,1/2)") == "(1/4,1/2)"
    word = airframe.orbit_search("(0,1/2)", "()", 2)
    assert word is not None
    assert airframe.map_component(word, "(0,1/2)") == "()"
    w = airframe.reduce_to_central("(1/2,1/2);(3/4,1/2)")
    assert airframe.map_component(w, "(1/2,1/2);(3/4,1/2)") == "()"
    ok, ordered = airframe.aligned(["(1/2,1/2)", "()", "(0,1/2)"])
    assert ok and ordered[1] == "()"


def test_circularize_and_trees():
    f = airframe.circularize("a b")
    assert f == airframe.circularize("a") * airframe.circularize("b")
    assert f.system == "circular_airplane"
    ok, checks, mismatches = airframe.intertwine_check(1, 8)
    assert ok and checks == 72 and not mismatches
    assert not airframe.intertwine_check(1, 8, shuffled=True)[0]


def test_criterion():
    passed, title, _ = airframe.run_criterion(3)
    assert passed and title
