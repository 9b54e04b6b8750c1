import json

import pytest

import contlie as cl
from contlie.exception import ValidationError


def test_to_tree_dict(chain_tree):
    data = cl.to_tree_dict(chain_tree)
    assert data["type"] == "relation-tree"
    assert data["spec"] == cl.serialize_spec(cl.CHAIN)
    assert data["depth-cap"] == 1
    assert [d["path"] for d in data["nodes"]] == ["", "L", "R"]
    assert data["edges"] == [["", "L"], ["", "R"]]
    assert data["marks"] is None
    # everything is plain JSON
    json.dumps(data)


def test_tree_dict_round_trip(chi1, phi1):
    with pytest.warns(UserWarning):
        tree = cl.derive_tree(cl.CHAIN, chi1, phi1, depth_cap=2)
    marked = cl.mark_dependence(tree)
    data = cl.to_tree_dict(marked)
    assert data["marks"] == [{"pair": ["LL", "RR"], "kind": "conjugation-dchi"}]

    rebuilt = cl.from_tree_dict(json.loads(json.dumps(data)))
    assert rebuilt == marked
    assert rebuilt != tree
    assert cl.independent_paths(rebuilt) == ["R"]


def test_gv_tree_round_trip(gv_tree):
    assert cl.from_tree_dict(cl.to_tree_dict(gv_tree)) == gv_tree


def test_from_tree_dict_errors(chain_tree):
    with pytest.raises(ValidationError):
        cl.from_tree_dict({"type": "lie-presentation"})
    data = cl.to_tree_dict(chain_tree)
    del data["nodes"]
    with pytest.raises(ValidationError):
        cl.from_tree_dict(data)


def test_expr_dict():
    e = cl.cech_delta(cl.cech_form("w", 1, 0))
    data = cl.expr_to_dict(e)
    assert [t["coeff"] for t in data] == ["1", "1", "-1"]
    assert data[0]["frame"] == [2, 0]
    assert cl.expr_from_dict(json.loads(json.dumps(data))) == e


def test_factor_dict():
    f = cl.Factor(cl.GenSymbol("chi", (1, 0), dmark=True), True)
    data = cl.factor_to_dict(f)
    assert data["delta"]
    assert data["dmark"]
    assert cl.factor_from_dict(data) == f

    word = cl.HolonomyWord((cl.holonomy(2), cl.holonomy(1)))
    assert cl.param_from_dict(cl.param_to_dict(word)) == word
    assert cl.param_from_dict({"name": "s"}) == cl.Param("s")
