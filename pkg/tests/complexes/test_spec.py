import tempfile

import pytest

import contlie as cl
from contlie.exception import ParseError, ValidationError

spec_string = """
arity = 2
domain = "nonnegative"
shift = [1, 1]
sign = "first-component"
differential = "cech-de-rham"

[grading]
"1,1" = 1
"2,2" = -1
"""


def test_defaults():
    spec = cl.ComplexSpec(1)
    assert spec.domain == "integers"
    assert spec.shift == cl.Degree((1,))
    assert spec.sign == "total-degree"
    assert spec.differential == "formal"
    assert spec.grading == ()


def test_invalid_specs():
    with pytest.raises(ValidationError):
        cl.ComplexSpec(3)
    with pytest.raises(ValidationError):
        cl.ComplexSpec(True)
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, domain="rationals")
    with pytest.raises(ValidationError):
        cl.ComplexSpec(2, shift=(1,))
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, product="additive")
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, sign="alternating")
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, differential="cech-de-rham")
    with pytest.raises(ValidationError):
        cl.ComplexSpec(2, differential="cech-de-rham")
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, grading={"1,1": 0})
    with pytest.raises(ValidationError):
        cl.ComplexSpec(1, grading={"1": 0.5})


def test_grading():
    spec = cl.ComplexSpec(1, grading={"2": -1, "0": 1})
    assert spec.grade_of(2) == -1
    assert spec.grade_of((0,)) == 1
    assert spec.grade_of(5) is None
    assert [d.components for d, _ in spec.grading] == [(0,), (2,)]


def test_in_domain():
    assert cl.CHAIN.in_domain(-3)
    assert cl.CECH_DE_RHAM.in_domain((0, 2))
    assert not cl.CECH_DE_RHAM.in_domain((1, -1))


def test_builtin_spec():
    assert cl.builtin_spec(1) == cl.CHAIN
    assert cl.builtin_spec(2) == cl.CECH_DE_RHAM
    with pytest.raises(ValidationError):
        cl.builtin_spec(3)
    assert cl.CECH_DE_RHAM.formal().differential == "formal"
    assert cl.CECH_DE_RHAM.formal().sign == "first-component"


def test_parse_spec():
    spec = cl.parse_spec(spec_string)
    assert spec.arity == 2
    assert spec.domain == "nonnegative"
    assert spec.differential == "cech-de-rham"
    assert spec.grade_of((2, 2)) == -1

    minimal = cl.parse_spec("arity = 1")
    assert minimal == cl.CHAIN


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        cl.parse_spec("arity = 1\ndomain = \n")
    assert e.value.line == 2

    with pytest.raises(ParseError):
        cl.parse_spec("   \n")
    with pytest.raises(ValidationError):
        cl.parse_spec('domain = "integers"')
    with pytest.raises(ValidationError):
        cl.parse_spec("arity = 1\nweight = 2")
    with pytest.raises(ValidationError):
        cl.parse_spec('arity = "1"')
    with pytest.raises(ValidationError):
        cl.parse_spec("arity = 1\nshift = [1.5]")
    with pytest.raises(ValidationError):
        cl.parse_spec("arity = 1\ngrading = 3")
    with pytest.raises(ValidationError):
        cl.parse_spec("arity = 1\nsign = 1")


def test_serialize_is_canonical():
    spec = cl.parse_spec(spec_string)
    text = cl.serialize_spec(spec)
    assert cl.parse_spec(text) == spec
    assert cl.serialize_spec(cl.parse_spec(text)) == text
    assert text.startswith("arity = 2\n")
    assert '"1,1" = 1' in text


def test_read_write_spec():
    _, filename = tempfile.mkstemp()
    cl.write_spec(cl.CECH_DE_RHAM, filename)
    assert cl.read_spec(filename) == cl.CECH_DE_RHAM
