import pytest

import contlie as cl
from contlie.exception import DegreeMismatch, ParseError, ValidationError


def test_param():
    assert cl.Param("h1") == cl.Param("h1", "holonomy", 1)
    assert cl.Param("h1") != cl.Param("h2")
    assert hash(cl.Param("h1")) == hash(cl.Param("h1", "holonomy"))
    assert str(cl.Param("x")) == "x"

    with pytest.raises(ValidationError):
        cl.Param("x", "spatial")


def test_holonomy_word():
    h1, h2 = cl.Param("h1"), cl.Param("h2")
    w = cl.HolonomyWord([h2, h1])
    assert w.name == "h2h1"
    assert w.kind == "holonomy"
    assert w.letters == (h2, h1)

    with pytest.raises(ValidationError):
        cl.HolonomyWord(())


def test_degree_arithmetic():
    a = cl.Degree.of("1,2")
    b = cl.Degree.of((0, 1))
    assert a + b == cl.Degree((1, 3))
    assert a - b == cl.Degree((1, 1))
    assert b <= a
    assert a >= b
    assert not a <= b
    assert a.total == 3
    assert str(a) == "(1,2)"
    assert a.text() == "1,2"
    assert str(cl.Degree.of(4)) == "4"
    assert cl.Degree.zero(2) == cl.Degree((0, 0))
    assert cl.Degree((0, -1)).is_nonnegative() is False


def test_degree_errors():
    with pytest.raises(ValidationError):
        cl.Degree((1, 2, 3))
    with pytest.raises(DegreeMismatch):
        cl.Degree.of(1) + cl.Degree.of((1, 1))
    with pytest.raises(ParseError):
        cl.Degree.of("1,x")


def test_gensymbol():
    s = cl.GenSymbol("w", "1,0")
    assert s.degree == cl.Degree((1, 0))
    assert s.params == ()
    assert str(s) == "w"

    h1 = cl.Param("h1")
    t = s.with_params([h1])
    assert t.params == (h1,)
    assert t.key() == ("w", ("h1",), (), False, (1, 0))

    with pytest.raises(ValidationError):
        cl.GenSymbol("w", 2, (h1, h1))


def test_factor():
    s = cl.GenSymbol("chi", 1)
    f = cl.Factor(s)
    df = cl.Factor(s, True)
    assert str(f) == "chi"
    assert str(df) == "d chi"
    assert f.key() < df.key()
