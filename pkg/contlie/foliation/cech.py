"""Čech–de Rham cochains of a foliation and their differentials.

A cochain in ``C^{p,q}`` is a q-form valued function of p holonomy
embeddings ``h1, ..., hp``. Forms are GenSymbols with holonomy params and
an optional pullback chain; expressions carry their cochain bidegree in
the term frame.

"""

import re
from dataclasses import dataclass, field, replace

from ..core.expr import Expr, Term, normalize, register_delta_rule, render, term_degree
from ..core.symbols import Degree, Factor, GenSymbol, HolonomyWord, Param
from ..exception import ValidationError

__all__ = [
    "holonomy",
    "cech_form",
    "cochain",
    "cech_delta",
    "de_rham_d",
    "total_delta",
    "rewrite_pullbacks",
    "bigraded_product",
    "render_form",
    "render_cochain",
    "DeltaSquaredReport",
    "verify_delta_squared_zero",
    "check_product_leibniz",
]

PRODUCT_SIGNS = ("displayed", "koszul")

_LETTER_RE = re.compile(r"^h(\d+)$")


def holonomy(i):
    """The holonomy letter ``h<i>``."""
    return Param(f"h{i}", "holonomy")


def cech_form(name, p, q, pullbacks=()):
    """A form ``name(h1, ..., hp)`` in ``C^{p,q}``.

    Examples
    --------
    >>> from contlie import cech_form, render_form
    >>> from contlie.core import Factor
    >>> print(render_form(Factor(cech_form("w", 2, 1))))
    w{2,1}(h1,h2)

    """
    if p < 0 or q < 0:
        raise ValidationError(f"Čech–de Rham degrees are nonnegative, got ({p},{q})")
    params = tuple(holonomy(i) for i in range(1, p + 1))
    return GenSymbol(name, (p, q), params, tuple(pullbacks))


def cochain(form, coeff=1):
    """The expression of one form, framed at its own bidegree."""
    if isinstance(form, Expr):
        return form
    if isinstance(form, Factor):
        form = form.base
    return Expr.symbol(form, coeff=coeff, frame=form.degree)


def _frame(term, spec=None):
    if term.frame is not None:
        return term.frame
    return term_degree(term, spec)


def _substitute_letter(letter, mapping):
    if isinstance(letter, HolonomyWord):
        letters = []
        for inner in letter.composition:
            letters += mapping.get(inner.name, (inner,))
        return HolonomyWord(tuple(letters))
    letters = mapping.get(letter.name, (letter,))
    if len(letters) == 1:
        return letters[0]
    return HolonomyWord(tuple(letters))


def _substitute(factor, mapping, prepend=()):
    if factor.delta_applied:
        raise ValidationError(
            f"{factor} carries an unevaluated differential; Čech–de Rham "
            f"forms are always expanded"
        )
    base = factor.base
    base = replace(
        base,
        params=tuple(_substitute_letter(h, mapping) for h in base.params),
        pullbacks=tuple(prepend)
        + tuple(_substitute_letter(h, mapping) for h in base.pullbacks),
    )
    return Factor(base)


def _shift_map(term, offset, start=1):
    """Map every letter ``hj`` with ``j >= start`` to ``h(j + offset)``."""
    mapping = {}
    for factor in term.factors:
        for letter in factor.base.params + factor.base.pullbacks:
            for h in letter.letters:
                match = _LETTER_RE.match(h.name)
                if match and int(match[1]) >= start:
                    mapping[h.name] = (holonomy(int(match[1]) + offset),)
    return mapping


def _rewrite_factor(factor):
    chain = []
    for h in factor.base.pullbacks:
        if isinstance(h, HolonomyWord):
            chain += reversed(h.composition)
        else:
            chain.append(h)
    return Factor(replace(factor.base, pullbacks=tuple(chain)), factor.delta_applied)


def rewrite_pullbacks(e):
    """Apply ``(h2h1)* = h1* h2*`` to every composite pullback.

    Examples
    --------
    >>> from contlie import cech_delta, cech_form, rewrite_pullbacks
    >>> dd = cech_delta(cech_delta(cech_form("w", 0, 0)), rewrite=False)
    >>> dd.is_zero()
    False
    >>> rewrite_pullbacks(dd).is_zero()
    True

    """
    terms = [
        Term(t.coeff, tuple(_rewrite_factor(f) for f in t.factors), t.frame)
        for t in e.terms
    ]
    return normalize(Expr(terms))


def _cech_terms(term, spec=None):
    frame = _frame(term, spec)
    p = frame[0]
    out_frame = Degree((p + 1, frame[1]))
    # i = 0: h1* w(h2, ..., h(p+1))
    mapping = _shift_map(term, 1)
    factors = tuple(_substitute(f, mapping, (holonomy(1),)) for f in term.factors)
    yield Term(term.coeff, factors, out_frame)
    for i in range(1, p + 1):
        mapping = _shift_map(term, 1, start=i + 1)
        mapping[f"h{i}"] = (holonomy(i + 1), holonomy(i))
        factors = tuple(_substitute(f, mapping) for f in term.factors)
        yield Term((-1) ** i * term.coeff, factors, out_frame)
    factors = tuple(_substitute(f, {}) for f in term.factors)
    yield Term((-1) ** (p + 1) * term.coeff, factors, out_frame)


def cech_delta(e, rewrite=True, raw=False):
    """The Čech differential ``sum_i (-1)^i delta_i``.

    Term 0 pulls back along ``h1`` and shifts the arguments, term ``i``
    composes ``h(i+1)h(i)``, the last term drops the last argument.

    Parameters
    ----------
    e : Expr or GenSymbol
        A cochain of bidegree ``(p, q)``.
    rewrite : bool, optional
        Apply ``(h2h1)* = h1* h2*`` to the result, by default True.
    raw : bool, optional
        Return the p+2 terms per input term unnormalized, by default False.

    Returns
    -------
    Expr
        A cochain of bidegree ``(p+1, q)``.

    Examples
    --------
    >>> from contlie import cech_delta, cech_form, render_cochain
    >>> print(render_cochain(cech_delta(cech_form("w", 0, 1))))
    -w{0,1}() + h1*.w{0,1}()

    """
    e = cochain(e)
    terms = [t for term in e.terms for t in _cech_terms(term)]
    out = Expr(terms)
    if rewrite:
        out = Expr(
            Term(t.coeff, tuple(_rewrite_factor(f) for f in t.factors), t.frame)
            for t in out.terms
        )
    return out if raw else normalize(out)


def _de_rham_terms(term, spec=None):
    frame = _frame(term, spec)
    out_frame = Degree((frame[0], frame[1] + 1))
    sign = (-1) ** frame[0]
    for i, factor in enumerate(term.factors):
        if factor.delta_applied:
            raise ValidationError(f"{factor} carries an unevaluated differential")
        preceding = sum(f.base.degree[1] for f in term.factors[:i])
        if factor.base.dmark:
            continue
        base = factor.base
        marked = replace(
            base, degree=Degree((base.degree[0], base.degree[1] + 1)), dmark=True
        )
        factors = term.factors[:i] + (Factor(marked),) + term.factors[i + 1 :]
        yield Term(sign * (-1) ** preceding * term.coeff, factors, out_frame)


def de_rham_d(e):
    """The vertical differential ``(-1)^p d`` with a formal ``d``.

    Examples
    --------
    >>> from contlie import cech_form, de_rham_d, render_cochain
    >>> print(render_cochain(de_rham_d(cech_form("w", 1, 0))))
    -dw{1,1}(h1)

    """
    e = cochain(e)
    return normalize(Expr(t for term in e.terms for t in _de_rham_terms(term)))


def total_delta(e, spec=None, rewrite=True):
    """The total differential ``(-1)^p d + delta`` of the Čech–de Rham bicomplex.

    Examples
    --------
    >>> from contlie import cech_form, render_cochain, total_delta
    >>> print(render_cochain(total_delta(cech_form("w", 0, 1))))
    -w{0,1}() + dw{0,2}() + h1*.w{0,1}()

    """
    e = cochain(e)
    return normalize(de_rham_d(e) + cech_delta(e, rewrite=rewrite))


def _delta_rule(e, spec):
    return total_delta(e, spec)


register_delta_rule("cech-de-rham", _delta_rule)


def _product_terms(tw, te, sign):
    n, q = _frame(tw)
    n2, q2 = _frame(te)
    mapping = _shift_map(te, n)
    prepend = tuple(holonomy(i) for i in range(1, n + 1))
    shifted = tuple(_substitute(f, mapping, prepend) for f in te.factors)
    if sign == "displayed":
        s = (-1) ** (n * n2)
    else:
        s = (-1) ** (q * n2)
    return Term(s * tw.coeff * te.coeff, tw.factors + shifted, Degree((n + n2, q + q2)))


def bigraded_product(w, e, sign="displayed"):
    """The product of cochains, ``(w e)(h1..h(n+n')) = s w(h1..hn) . h1*..hn*.e(h(n+1)..)``.

    Parameters
    ----------
    w, e : Expr or GenSymbol
        Cochains; the product is bilinear.
    sign : str, optional
        "displayed" (default) uses ``(-1)^(n n')``; "koszul" uses
        ``(-1)^(q n')``, under which the total differential is a
        derivation.

    Returns
    -------
    Expr
        Of bidegree ``(n+n', q+q')``; arguments are never shared.

    Examples
    --------
    >>> from contlie import bigraded_product, cech_form, render_cochain
    >>> w, eta = cech_form("u", 1, 0), cech_form("v", 1, 0)
    >>> print(render_cochain(bigraded_product(w, eta)))
    -u{1,0}(h1) . h1*.v{1,0}(h2)

    """
    if sign not in PRODUCT_SIGNS:
        raise ValidationError(f"sign must be one of {PRODUCT_SIGNS}, got {sign!r}")
    w, e = cochain(w), cochain(e)
    terms = [_product_terms(tw, te, sign) for tw in w.terms for te in e.terms]
    return normalize(Expr(terms))


def render_form(factor):
    """Render a form as ``h1*h2*.w{p,q}(h1,h2h1)``; composites as ``(h2h1)*``."""
    base = factor.base if isinstance(factor, Factor) else factor
    chain = "".join(
        f"({h.name})*" if isinstance(h, HolonomyWord) else f"{h.name}*"
        for h in base.pullbacks
    )
    if chain:
        chain += "."
    mark = "d" if base.dmark else ""
    args = ",".join(h.name for h in base.params)
    delta = "D " if isinstance(factor, Factor) and factor.delta_applied else ""
    return f"{delta}{chain}{mark}{base.name}{{{base.degree.text()}}}({args})"


def render_cochain(e):
    return render(e, factor_format=render_form)


@dataclass
class DeltaSquaredReport:
    """Per-degree outcome of the total differential squared."""

    rows: list = field(default_factory=list)

    @property
    def passed(self):
        return all(row["zero"] for row in self.rows)


def verify_delta_squared_zero(pmax=3, q=0, name="w"):
    """Check ``D D w = 0`` for generic forms ``w`` in ``C^{p,q}``, ``p <= pmax``.

    Parameters
    ----------
    pmax : int, optional
        By default 3.
    q : int, optional
        The form degree, by default 0.
    name : str, optional

    Returns
    -------
    DeltaSquaredReport
        One row per p with the term counts of ``delta w``, ``D w`` and the
        raw expansion of ``D D w``, and whether the result is zero.

    """
    if pmax < 0:
        raise ValidationError(f"pmax must be nonnegative, got {pmax}")
    report = DeltaSquaredReport()
    for p in range(pmax + 1):
        w = cochain(cech_form(name, p, q))
        dw = total_delta(w)
        raw = Expr(de_rham_d(dw).terms + cech_delta(dw, raw=True).terms)
        ddw = rewrite_pullbacks(raw)
        cech_twice = cech_delta(cech_delta(w))
        report.rows.append(
            {
                "p": p,
                "q": q,
                "cech_terms": len(cech_delta(w, raw=True)),
                "total_terms": len(dw),
                "raw_terms": len(raw),
                "cech_zero": cech_twice.is_zero(),
                "zero": ddw.is_zero(),
            }
        )
    return report


def check_product_leibniz(w, e, sign="koszul"):
    """Whether ``D(w e) = D(w) e + (-1)^(n+q) w D(e)`` holds exactly.

    Only the "koszul" product sign satisfies it in general; the
    "displayed" sign already fails for two forms in ``C^{1,0}``.

    Returns
    -------
    tuple
        ``(holds, lhs, rhs)``.

    """
    w, e = cochain(w), cochain(e)
    degrees = {_frame(t) for t in w.terms}
    if len(degrees) != 1:
        raise ValidationError("the left factor must be homogeneous")
    n, q = degrees.pop()
    lhs = total_delta(bigraded_product(w, e, sign))
    rhs = bigraded_product(total_delta(w), e, sign) + (-1) ** (n + q) * bigraded_product(
        w, total_delta(e), sign
    )
    rhs = normalize(rhs)
    return lhs == rhs, lhs, rhs
