"""General utilities."""

import re

import numpy as np
import sympy as sp

from ..exception import ParseError

__all__ = [
    "Combination",
    "rng_from_seed",
    "parse_degree",
    "format_grade",
    "format_sympy",
    "format_coeff",
]


class Combination(dict):
    """A formal linear combination of hashable atoms.

    For internal use only.  Keys are atoms and values are exact sympy
    coefficients; zero coefficients are never stored, so two combinations
    are equal exactly when they are equal as dicts.

    Examples
    --------
    >>> from contlie.utils import Combination
    >>> c = Combination.of("x") + Combination.of("y", 2) - Combination.of("x")
    >>> dict(c)
    {'y': 2}
    >>> c["z"]
    0

    """

    def __init__(self, *args, **kwargs):
        super().__init__()
        for atom, coeff in dict(*args, **kwargs).items():
            self._accumulate(atom, coeff)

    @classmethod
    def of(cls, atom, coeff=1):
        return cls({atom: coeff})

    def _accumulate(self, atom, coeff):
        total = sp.expand(dict.get(self, atom, sp.S.Zero) + sp.sympify(coeff))
        if total == 0:
            dict.pop(self, atom, None)
        else:
            dict.__setitem__(self, atom, total)

    def __getitem__(self, item):
        return dict.get(self, item, sp.S.Zero)

    def __setitem__(self, item, value):
        if sp.sympify(value) == 0:
            dict.pop(self, item, None)
        else:
            dict.__setitem__(self, item, sp.sympify(value))

    def __add__(self, other):
        out = Combination(self)
        for atom, coeff in other.items():
            out._accumulate(atom, coeff)
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, scalar):
        return Combination({atom: scalar * coeff for atom, coeff in self.items()})

    __rmul__ = __mul__

    def is_zero(self):
        return len(self) == 0

    def subs(self, bindings):
        """Substitute symbol values into every coefficient."""
        return Combination({a: sp.sympify(c).subs(bindings) for a, c in self.items()})


def rng_from_seed(seed=0):
    """Return a seeded generator and the seed it was built from.

    Parameters
    ----------
    seed : int, optional
        Seed for ``numpy.random.default_rng``, by default 0. The value -1
        requests a fresh seed drawn from operating system entropy.

    Returns
    -------
    tuple
        ``(numpy.random.Generator, int)``; the integer is the seed used.

    Examples
    --------
    >>> from contlie.utils import rng_from_seed
    >>> rng, used = rng_from_seed(7)
    >>> used
    7

    """
    if seed == -1:
        seed = int(np.random.SeedSequence().entropy % (2**32))
    if seed < 0:
        raise ValueError(f"seed must be non-negative or -1, got {seed}")
    return np.random.default_rng(seed), seed


_DEGREE_RE = re.compile(r"^\s*-?\d+\s*(,\s*-?\d+\s*)?$")


def parse_degree(text):
    """Parse a degree written as ``"p"`` or ``"p,q"``.

    Parameters
    ----------
    text : str
        The degree text.

    Returns
    -------
    tuple of int

    Raises
    ------
    ParseError
        If the text is not one or two comma separated integers.

    Examples
    --------
    >>> from contlie.utils import parse_degree
    >>> parse_degree("1, 2")
    (1, 2)
    >>> parse_degree("3")
    (3,)

    """
    if not _DEGREE_RE.match(str(text)):
        raise ParseError(f"invalid degree {text!r}; expected 'p' or 'p,q'")
    return tuple(int(part) for part in str(text).split(","))


def format_grade(grade):
    """Render an integer grade with an explicit sign, e.g. ``+1``, ``0``, ``-1``."""
    grade = int(grade)
    return f"+{grade}" if grade > 0 else str(grade)


def format_sympy(expr):
    """Render a sympy expression compactly: ``n+1``, ``(-1)^n``."""
    return str(sp.sympify(expr)).replace("**", "^").replace(" ", "")


def format_coeff(coeff, first=False):
    """Render a coefficient in front of a product.

    Returns the prefix to put before the product: ``""``, ``"-"``,
    ``" + "``, ``" - "``, or the rational value with a trailing space.

    """
    coeff = sp.Rational(coeff)
    if coeff == 1:
        return "" if first else " + "
    if coeff == -1:
        return "-" if first else " - "
    if first:
        return f"{coeff} "
    sign = " - " if coeff < 0 else " + "
    return f"{sign}{abs(coeff)} "
