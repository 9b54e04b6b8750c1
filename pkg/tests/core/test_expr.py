import pytest
import sympy as sp

import contlie as cl
from contlie.exception import DegreeMismatch, Inhomogeneous, ValidationError, ZeroExpr


def sym(name, degree, params=()):
    return cl.Expr.symbol(cl.GenSymbol(name, degree, tuple(cl.Param(p) for p in params)))


def test_render():
    phi, psi = sym("phi", 1), sym("psi", 2)
    assert str(cl.Expr()) == "0"
    assert str(phi) == "phi"
    assert str(phi * psi) == "phi . psi"
    assert str(phi - 2 * psi) == "phi - 2 psi"
    assert str(phi * sp.Rational(1, 2)) == "1/2 phi"


def test_normalize_antisymmetry():
    phi, psi, chi = sym("phi", 1), sym("psi", 2), sym("chi", 0)
    assert str(cl.normalize(psi * phi)) == "-phi . psi"
    assert cl.normalize(phi * phi).is_zero()
    assert (phi * psi + psi * phi).is_zero()
    # a cyclic permutation of three factors is even
    assert cl.normalize(psi * chi * phi) == chi * phi * psi
    assert cl.normalize(phi * chi * psi) == -(chi * phi * psi)


def test_same_name_different_degree():
    a1, a2 = sym("A", 1), sym("A", 2)
    product = cl.normalize(a1 * a2)
    assert not product.is_zero()
    assert str(product) == "A . A"
    assert (a1 * a2 + a2 * a1).is_zero()
    assert cl.GenSymbol("A", 1).key() != cl.GenSymbol("A", 2).key()


def test_normalize_collects_terms():
    phi, psi = sym("phi", 1), sym("psi", 2)
    e = phi * psi + 2 * (phi * psi) - psi * phi
    n = cl.normalize(e)
    assert len(n) == 1
    assert n.terms[0].coeff == 4
    assert cl.normalize(n).terms == n.terms


def test_equality_and_hash():
    phi, psi = sym("phi", 1), sym("psi", 2)
    assert phi * psi == -(psi * phi)
    assert hash(phi * psi) == hash(-(psi * phi))
    assert phi - phi == 0
    assert 0 + phi == phi
    with pytest.raises(TypeError):
        phi + 1


def test_degree_of():
    phi = sym("phi", 1, ["a"])
    psi = sym("psi", 2, ["a", "b"])
    assert cl.degree_of(phi) == cl.Degree((1,))
    # one shared parameter
    assert cl.degree_of(phi * psi) == cl.Degree((2,))
    assert cl.degree_of(cl.apply_delta(psi)) == cl.Degree((3,))

    with pytest.raises(ZeroExpr):
        cl.degree_of(cl.Expr())
    with pytest.raises(Inhomogeneous):
        cl.degree_of(phi + psi)


def test_overlap():
    a = cl.Factor(cl.GenSymbol("a", 2, (cl.Param("x"), cl.Param("y"))))
    b = cl.Factor(cl.GenSymbol("b", 1, (cl.Param("y"),)))
    assert cl.overlap(a, b) == cl.Degree((1,))
    # unnamed parameters are padded with the symbol name, never shared
    c = cl.Factor(cl.GenSymbol("c", 3))
    assert cl.overlap(a, c) == cl.Degree((0,))

    d = cl.Factor(cl.GenSymbol("d", (1, 1)))
    with pytest.raises(DegreeMismatch):
        cl.overlap(a, d)


def test_apply_delta():
    phi, psi = sym("phi", 1), sym("psi", 2)
    assert str(cl.apply_delta(phi)) == "d phi"
    assert str(cl.apply_delta(phi * psi)) == "-phi . d psi + d phi . psi"
    assert cl.apply_delta(cl.apply_delta(phi * psi)).is_zero()
    assert cl.apply_delta(cl.apply_delta(phi)).is_zero()


def test_leibniz_keeps_order():
    phi, psi = sym("phi", 1), sym("psi", 2)
    raw = cl.leibniz(psi * phi)
    assert str(raw) == "d psi . phi + psi . d phi"


def test_parity_conventions():
    f = cl.Factor(cl.GenSymbol("w", (1, 2)))
    df = cl.Factor(cl.GenSymbol("w", (1, 2)), True)
    spec = cl.ComplexSpec(2)
    assert cl.parity(f, spec) == 1
    assert cl.parity(df, spec) == 0
    first = cl.ComplexSpec(2, sign="first-component")
    assert cl.parity(f, first) == 1
    shifted = cl.ComplexSpec(2, sign="shifted-total")
    assert cl.parity(f, shifted) == 0


def test_wedge_strict():
    spec = cl.ComplexSpec(2, "nonnegative")
    a = sym("a", (1, 0))
    b = sym("b", (0, 1))
    assert str(cl.wedge(b, a, spec, strict=True)) == "-a . b"

    with pytest.raises(DegreeMismatch):
        cl.wedge(a, sym("c", (-1, 0)), spec, strict=True)
    with pytest.raises(DegreeMismatch):
        cl.wedge(a, sym("c", 1), spec, strict=True)
    with pytest.raises(DegreeMismatch):
        cl.wedge(a, a + sym("c", (1, 1)), spec, strict=True)


def test_unregistered_delta_rule():
    class Fake:
        differential = "nowhere"

    with pytest.raises(ValidationError):
        cl.apply_delta(sym("phi", 1), Fake())
