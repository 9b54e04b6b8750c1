import tempfile

import pytest

import contlie as cl
from contlie.exception import ParseError, ValidationError

bad_json = """{
  "type":
}
"""

wrong_type = """{
  "type": "hypergraph"
}
"""


def test_tree_json(chain_tree):
    _, filename = tempfile.mkstemp()
    cl.write_tree_json(cl.mark_dependence(chain_tree), filename)
    tree = cl.read_tree_json(filename)
    assert tree == cl.mark_dependence(chain_tree)
    assert tree.node("R").display == "d chi = phi . alpha_1_R"


def test_presentation_json(gv):
    _, filename = tempfile.mkstemp()
    cl.write_presentation_json(gv, filename)
    assert cl.read_presentation_json(filename) == gv


def test_load_json():
    assert cl.load_json('{"a": 1}') == {"a": 1}
    with pytest.raises(ParseError) as excinfo:
        cl.load_json(bad_json)
    assert excinfo.value.line == 3
    assert excinfo.value.column == 1


def test_read_errors():
    _, filename = tempfile.mkstemp()
    with open(filename, "w") as file:
        file.write(bad_json)
    with pytest.raises(ParseError):
        cl.read_tree_json(filename)
    with pytest.raises(ParseError):
        cl.read_presentation_json(filename)

    _, filename = tempfile.mkstemp()
    with open(filename, "w") as file:
        file.write(wrong_type)
    with pytest.raises(ValidationError):
        cl.read_tree_json(filename)
    with pytest.raises(ValidationError):
        cl.read_presentation_json(filename)
