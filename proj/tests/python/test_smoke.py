import json
import os
import pathlib

import pytest

import autoequiv

DATA = pathlib.Path(os.environ.get("AUTOEQUIV_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def model(name):
    return (DATA / name).read_text()


def test_validate_reports_paths():
    assert autoequiv.validate(model("fig7_g1.json")) == []
    [(path, message)] = autoequiv.validate(model("arity_mismatch.json"))
    assert path == 'interpretations["G"].tuples["E"](V:1,V:2,V:0)'
    assert "arity 3" in message


def test_figure7_groups_and_witness():
    aut = autoequiv.automorphisms(model("fig7_g1.json"))
    assert aut["algebra"]["order"] == 24
    assert aut["interpretations"]["G"]["order"] == 6
    result = autoequiv.equivalent(model("fig7_g1.json"), model("fig7_g2.json"))
    assert result["equivalent"]
    assert result["witness"]["mus"] == [{"V": [3, 0, 1, 2]}]
    assert autoequiv.verify(model("fig7_g1.json"), model("fig7_g2.json"), result["witness"]) == (True, "")
    ok, reason = autoequiv.verify(model("fig7_g1.json"), model("fig7_g2.json"),
                                  {"alpha": [[0, 0]], "mus": ["id"]})
    assert not ok and reason


def test_dict_input_and_graph_checks():
    star = {"vertices": 4, "directed": False, "edges": [[0, 1], [0, 2], [0, 3]]}
    assert autoequiv.graph_checks(star) == {"G": {"tree": True, "connected": True}}
    comp = autoequiv.simple_graph_complement(star)
    assert autoequiv.graph_checks(comp) == {"G-complement": {"tree": False, "connected": False}}
    assert autoequiv.equivalent(star, comp, mode="model")["equivalent"]


def test_pipeline_negatives():
    r = autoequiv.equivalent(model("c4.json"), model("klein4.json"))
    assert r["verdict"] == "algebras are not isomorphic"
    r = autoequiv.equivalent(model("match_f1.json"), model("match_f2.json"))
    assert not r["equivalent"] and r["edges"] == [(0, 0), (1, 0)]
    assert not autoequiv.oracle_equivalent(model("match_f1.json"), model("match_f2.json"))


def test_algebra_mode_and_constructions():
    r = autoequiv.equivalent(model("const3.json"), model("swap3.json"), mode="algebra")
    assert r["witness"] == {"delta": {"S": [0, 1, 2]}}
    twice = autoequiv.complement(autoequiv.complement(model("c4.json")))
    assert twice == autoequiv.normalize(model("c4.json"))
    moved = json.loads(autoequiv.sigma_transform(model("c4.json"), "G:(1 3)"))
    assert moved["interpretations"][0]["label"] == "f^G:(1 3)"


def test_errors_are_typed():
    with pytest.raises(autoequiv.PreconditionError):
        autoequiv.sigma_transform(model("c4.json"), "G:(0 1)")
    with pytest.raises(autoequiv.ValidationError):
        autoequiv.automorphisms(model("arity_mismatch.json"))
    with pytest.raises(autoequiv.ResourceError):
        autoequiv.equivalent(model("fig7_g1.json"), model("fig7_g2.json"), max_nodes=3)
    with pytest.raises(autoequiv.AutoequivError):
        autoequiv.graph_checks(model("c4.json"))


def test_cli_in_process():
    code, out, _ = autoequiv.run_cli(["graph", str(DATA / "fig7_g2.json"), "--check", "connected"])
    assert code == 1 and "not connected" in out
