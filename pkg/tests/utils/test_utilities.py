import pytest
import sympy as sp

from contlie.exception import ParseError
from contlie.utils import (
    Combination,
    format_coeff,
    format_grade,
    format_sympy,
    parse_degree,
    rng_from_seed,
)


def test_combination():
    c = Combination.of("x", 2) + Combination.of("y")
    assert c["x"] == 2
    assert c["z"] == 0
    assert "z" not in c

    d = c - Combination.of("x", 2)
    assert dict(d) == {"y": 1}

    assert (c - c).is_zero()
    assert (-c)["y"] == -1
    assert (c * 3)["x"] == 6
    assert (3 * c)["x"] == 6

    c["y"] = 0
    assert "y" not in c


def test_combination_symbolic_coeffs():
    n = sp.Symbol("n")
    c = Combination.of("x", (-1) ** n) + Combination.of("x", (-1) ** n)
    assert c["x"] == 2 * (-1) ** n
    assert c.subs({n: 1})["x"] == -2
    assert (c - c).is_zero()


def test_rng_from_seed():
    rng1, seed1 = rng_from_seed(5)
    rng2, seed2 = rng_from_seed(5)
    assert seed1 == seed2 == 5
    assert rng1.integers(1000) == rng2.integers(1000)

    _, seed = rng_from_seed(-1)
    assert seed >= 0

    with pytest.raises(ValueError):
        rng_from_seed(-2)


def test_parse_degree():
    assert parse_degree("2") == (2,)
    assert parse_degree(" 1 , 0 ") == (1, 0)
    assert parse_degree("-1,3") == (-1, 3)

    for text in ["", "a", "1,2,3", "1;2", "1.5"]:
        with pytest.raises(ParseError):
            parse_degree(text)


def test_format_grade():
    assert format_grade(1) == "+1"
    assert format_grade(0) == "0"
    assert format_grade(-2) == "-2"


def test_format_sympy():
    n = sp.Symbol("n")
    assert format_sympy(n + 1) == "n+1"
    assert format_sympy((-1) ** n) == "(-1)^n"
    assert format_sympy(3) == "3"


def test_format_coeff():
    assert format_coeff(1, first=True) == ""
    assert format_coeff(-1, first=True) == "-"
    assert format_coeff(1) == " + "
    assert format_coeff(-1) == " - "
    assert format_coeff(2, first=True) == "2 "
    assert format_coeff(2) == " + 2 "
    assert format_coeff(sp.Rational(-1, 2)) == " - 1/2 "
