"""Formal sums of exterior products and their differential."""

from dataclasses import dataclass

import sympy as sp
from sympy.combinatorics import Permutation

from ..exception import DegreeMismatch, Inhomogeneous, ValidationError, ZeroExpr
from ..utils import format_coeff
from .symbols import Degree, Factor, Param

__all__ = [
    "Term",
    "Expr",
    "normalize",
    "wedge",
    "apply_delta",
    "degree_of",
    "term_degree",
    "factor_degree",
    "factor_params",
    "overlap",
    "parity",
    "leibniz",
    "factor_param_lists",
    "register_delta_rule",
    "render",
]

SIGN_CONVENTIONS = ("total-degree", "first-component", "shifted-total")

_DELTA_RULES = {}


@dataclass(frozen=True)
class Term:
    """A rational multiple of an ordered product of factors.

    `frame` optionally pins the cochain bidegree the term lives in; it is
    only set by the Čech–de Rham operations.

    """

    coeff: sp.Rational
    factors: tuple
    frame: Degree = None

    def __post_init__(self):
        object.__setattr__(self, "coeff", sp.Rational(self.coeff))
        object.__setattr__(self, "factors", tuple(self.factors))

    def key(self):
        frame = () if self.frame is None else self.frame.components
        return (tuple(f.key() for f in self.factors), frame)


class Expr:
    """An immutable formal sum of terms.

    Instances may hold raw (unnormalized) terms; equality, hashing and
    `is_zero` always compare normal forms.

    Examples
    --------
    >>> from contlie import Expr, GenSymbol
    >>> phi = Expr.symbol(GenSymbol("phi", 1))
    >>> psi = Expr.symbol(GenSymbol("psi", 2))
    >>> print(psi * phi)
    psi . phi
    >>> print(normalize(psi * phi))
    -phi . psi
    >>> (phi * psi + psi * phi).is_zero()
    True

    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        self._terms = tuple(terms)

    @classmethod
    def symbol(cls, base, delta=False, coeff=1, frame=None):
        """The expression consisting of one factor."""
        if isinstance(base, Factor):
            factor = base
        else:
            factor = Factor(base, delta)
        return cls((Term(coeff, (factor,), frame),))

    @classmethod
    def zero(cls):
        return cls()

    @property
    def terms(self):
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return Expr(self._terms + Expr._coerce(other)._terms)

    __radd__ = __add__

    def __neg__(self):
        return Expr(Term(-t.coeff, t.factors, t.frame) for t in self._terms)

    def __sub__(self, other):
        return self + (-Expr._coerce(other))

    def __mul__(self, other):
        if isinstance(other, Expr):
            return Expr(_raw_products(self, other))
        return Expr(Term(other * t.coeff, t.factors, t.frame) for t in self._terms)

    def __rmul__(self, scalar):
        return Expr(Term(scalar * t.coeff, t.factors, t.frame) for t in self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Expr):
            return NotImplemented
        return normalize(self)._terms == normalize(other)._terms

    def __hash__(self):
        return hash(normalize(self)._terms)

    def is_zero(self):
        return len(normalize(self)._terms) == 0

    def factors(self):
        """The distinct factors appearing in the expression."""
        seen = {}
        for term in self._terms:
            for f in term.factors:
                seen.setdefault(f.key(), f)
        return [seen[k] for k in sorted(seen)]

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Expr({render(self)!r})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, Expr):
            return other
        if isinstance(other, int) and other == 0:
            return Expr()
        raise TypeError(f"Cannot combine Expr with {type(other).__name__}")


def _raw_products(a, b):
    for ta in a.terms:
        for tb in b.terms:
            if ta.frame is not None and tb.frame is not None:
                frame = ta.frame + tb.frame
            else:
                frame = None
            yield Term(ta.coeff * tb.coeff, ta.factors + tb.factors, frame)


def _canonical(factors):
    """Sorted factors and the sign of the sort, or None for a repeated factor."""
    keys = [f.key() for f in factors]
    if len(set(keys)) < len(keys):
        return None
    if len(keys) < 2:
        return 1, tuple(factors)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    sign = -1 if Permutation(order).parity() else 1
    return sign, tuple(factors[i] for i in order)


def normalize(e):
    """Return the canonical form of an expression.

    Factors are sorted by
    ``(name, params, pullbacks, dmark, degree, delta_applied)``
    with one sign flip per transposition, terms with a repeated factor are
    dropped, like terms are collected and zero terms removed.

    Parameters
    ----------
    e : Expr
        Any expression.

    Returns
    -------
    Expr
        The normal form. ``normalize`` is idempotent.

    Examples
    --------
    >>> from contlie import Expr, GenSymbol
    >>> phi = Expr.symbol(GenSymbol("phi", 1))
    >>> normalize(phi * phi).is_zero()
    True

    """
    collected = {}
    frames = {}
    for term in e.terms:
        canon = _canonical(term.factors)
        if canon is None or term.coeff == 0:
            continue
        sign, factors = canon
        key = Term(1, factors, term.frame).key()
        collected[key] = collected.get(key, sp.S.Zero) + sign * term.coeff
        frames[key] = (factors, term.frame)
    terms = []
    for key in sorted(collected):
        if collected[key] != 0:
            factors, frame = frames[key]
            terms.append(Term(collected[key], factors, frame))
    return Expr(terms)


def _spec_shift(spec, degree):
    if spec is None:
        return Degree((1,) * len(degree))
    return Degree.of(spec.shift)


def factor_degree(factor, spec=None):
    """Degree of one factor; an applied differential adds the shift."""
    degree = factor.base.degree
    if factor.delta_applied:
        degree = degree + _spec_shift(spec, degree)
    return degree


def parity(factor, spec=None):
    """Parity entering the Leibniz sign in front of later factors.

    The convention is the spec's `sign` option. An applied differential
    always adds one, so the differential is odd under every convention.

    """
    convention = "total-degree" if spec is None else spec.sign
    degree = factor.base.degree
    if convention == "total-degree":
        value = degree.total
    elif convention == "first-component":
        value = degree[0]
    elif convention == "shifted-total":
        value = degree.total + 1
    else:
        raise ValidationError(f"Unknown sign convention {convention!r}")
    return (value + int(factor.delta_applied)) % 2


def factor_param_lists(factor, spec=None):
    """Ordered per-component parameters a factor depends on.

    Components with fewer named parameters than their degree are padded
    with parameters named after the symbol. An applied differential depends
    on everything its base depends on, followed by `shift` more.

    Returns
    -------
    tuple of tuple of Param

    """
    base = factor.base
    degree = factor_degree(factor, spec)
    out = []
    for k in range(len(degree)):
        own = [p for p in base.params if p.component == k]
        base_pad = max(0, base.degree[k] - len(own))
        params = own + [
            Param(f"{base.name}#{k}.{j}", component=k) for j in range(base_pad)
        ]
        extra = max(0, degree[k] - len(params))
        params += [Param(f"d{base.name}#{k}.{j}", component=k) for j in range(extra)]
        out.append(tuple(params))
    return tuple(out)


def factor_params(factor, spec=None):
    """Per-component sets of parameter names a factor depends on."""
    return tuple(
        frozenset(p.name for p in params)
        for params in factor_param_lists(factor, spec)
    )


def overlap(first, second, spec=None):
    """Per-component count of parameter names shared by two factors."""
    p1 = factor_params(first, spec)
    p2 = factor_params(second, spec)
    if len(p1) != len(p2):
        raise DegreeMismatch(
            f"Factors {first} and {second} have different arities"
        )
    return Degree(tuple(len(a & b) for a, b in zip(p1, p2)))


def term_degree(term, spec=None):
    """Degree of a single term under the additive-minus-overlap rule."""
    if term.frame is not None:
        return term.frame
    if not term.factors:
        return Degree.zero(1 if spec is None else spec.arity)
    first = term.factors[0]
    degree = factor_degree(first, spec)
    acc = [set(s) for s in factor_params(first, spec)]
    for factor in term.factors[1:]:
        params = factor_params(factor, spec)
        shared = Degree(tuple(len(a & b) for a, b in zip(acc, params)))
        degree = degree + factor_degree(factor, spec) - shared
        for a, b in zip(acc, params):
            a |= b
    return degree


def degree_of(e, spec=None):
    """The common degree of all terms of an expression.

    Parameters
    ----------
    e : Expr
        A nonzero expression.
    spec : ComplexSpec, optional
        Supplies the differential shift; defaults to shift one per component.

    Returns
    -------
    Degree

    Raises
    ------
    ZeroExpr
        If `e` is zero.
    Inhomogeneous
        If terms disagree on their degree.

    Examples
    --------
    >>> from contlie import Expr, GenSymbol
    >>> phi = Expr.symbol(GenSymbol("phi", 2))
    >>> print(degree_of(apply_delta(phi)))
    3

    """
    e = normalize(e)
    if not e.terms:
        raise ZeroExpr("The zero expression has no degree")
    degrees = {term_degree(t, spec) for t in e.terms}
    if len(degrees) > 1:
        listed = ", ".join(sorted(str(d) for d in degrees))
        raise Inhomogeneous(f"Terms of {render(e)} have degrees {listed}")
    return degrees.pop()


def wedge(a, b, spec=None, strict=False):
    """Exterior product of two expressions, normalized.

    Parameters
    ----------
    a, b : Expr
        The factors, `a` on the left.
    spec : ComplexSpec, optional
        Complex the degrees are checked against in strict mode.
    strict : bool, optional
        If True, reject compositions whose degrees do not fit `spec`.

    Returns
    -------
    Expr

    Raises
    ------
    DegreeMismatch
        In strict mode, if either side is inhomogeneous, has the wrong
        arity, or lies outside the index domain.

    """
    if strict and spec is not None:
        for side in (a, b):
            if side.is_zero():
                continue
            try:
                degree = degree_of(side, spec)
            except Inhomogeneous as e:
                raise DegreeMismatch(str(e)) from e
            if len(degree) != spec.arity or not spec.in_domain(degree):
                raise DegreeMismatch(
                    f"Degree {degree} does not compose under the spec "
                    f"(arity {spec.arity}, domain {spec.domain})"
                )
    return normalize(Expr(_raw_products(a, b)))


def register_delta_rule(name, rule):
    """Register how a non-formal differential evaluates.

    Parameters
    ----------
    name : str
        Value of the spec's `differential` key.
    rule : callable
        ``rule(expr, spec) -> Expr``.

    """
    _DELTA_RULES[name] = rule


def leibniz(e, spec=None):
    """Raw graded Leibniz expansion of `e`, keeping the given factor order.

    Factors that already carry the differential contribute nothing. The
    result is not normalized, so it can be rendered as written.

    """
    out = []
    for term in e.terms:
        frame = None
        if term.frame is not None:
            frame = term.frame + _spec_shift(spec, term.frame)
        sign = 1
        for i, factor in enumerate(term.factors):
            if not factor.delta_applied:
                factors = (
                    term.factors[:i]
                    + (Factor(factor.base, True),)
                    + term.factors[i + 1 :]
                )
                out.append(Term(sign * term.coeff, factors, frame))
            if parity(factor, spec):
                sign = -sign
    return Expr(out)


def apply_delta(e, spec=None):
    """Apply the differential term by term.

    In formal mode the graded Leibniz rule wraps each factor once and a
    factor that already carries the differential maps to zero. When the
    spec names a registered evaluation rule, that rule is used instead.

    Parameters
    ----------
    e : Expr
        The expression.
    spec : ComplexSpec, optional
        Supplies the shift, the sign convention and the differential kind.

    Returns
    -------
    Expr
        The normalized result.

    Examples
    --------
    >>> from contlie import Expr, GenSymbol
    >>> phi = Expr.symbol(GenSymbol("phi", 1))
    >>> psi = Expr.symbol(GenSymbol("psi", 2))
    >>> print(apply_delta(phi * psi))
    -phi . d psi + d phi . psi
    >>> apply_delta(apply_delta(phi * psi)).is_zero()
    True

    """
    e = normalize(e)
    if spec is not None and spec.differential != "formal":
        try:
            rule = _DELTA_RULES[spec.differential]
        except KeyError as err:
            raise ValidationError(
                f"No evaluation rule registered for {spec.differential!r}"
            ) from err
        return normalize(rule(e, spec))
    return normalize(leibniz(e, spec))


def render(e, factor_format=str):
    """Render an expression in the fixed ASCII grammar, e.g. ``phi . d chi``."""
    if not e.terms:
        return "0"
    parts = []
    for i, term in enumerate(e.terms):
        body = " . ".join(factor_format(f) for f in term.factors) or "1"
        parts.append(format_coeff(term.coeff, first=(i == 0)) + body)
    return "".join(parts)
