"""Exhaustive and randomized checks of the exterior DGA laws."""

from dataclasses import dataclass, field
from itertools import combinations, product

import sympy as sp

from ..utils import rng_from_seed
from .expr import Expr, apply_delta, degree_of, normalize, parity, wedge
from .symbols import Degree, Factor, GenSymbol

__all__ = ["LawReport", "law_symbols", "dga_law_suite"]

LAWS = (
    "idempotence",
    "anticommutativity",
    "nilpotency",
    "leibniz",
    "delta-squared",
    "degree-shift",
    "bilinearity",
)


@dataclass
class LawReport:
    """Per-law counts of checked and failed cases."""

    checked: dict = field(default_factory=lambda: {law: 0 for law in LAWS})
    failed: dict = field(default_factory=lambda: {law: 0 for law in LAWS})
    examples: list = field(default_factory=list)

    def record(self, law, ok, expr=None):
        self.checked[law] += 1
        if not ok:
            self.failed[law] += 1
            if len(self.examples) < 10:
                self.examples.append((law, "" if expr is None else str(expr)))

    @property
    def passed(self):
        return not any(self.failed.values())

    def rows(self):
        return [
            {"check": law, "cases": self.checked[law], "failures": self.failed[law]}
            for law in LAWS
        ]


def law_symbols(spec=None):
    """Four symbols of mixed degrees for the given arity."""
    arity = 1 if spec is None else spec.arity
    if arity == 1:
        degrees = [(1,), (2,), (0,), (3,)]
    else:
        degrees = [(0, 1), (1, 0), (1, 1), (2, 0)]
    return [GenSymbol(name, d) for name, d in zip("ABCD", degrees)]


def _chain(factors, coeff=1):
    e = Expr.symbol(factors[0], coeff=coeff)
    for f in factors[1:]:
        e = e * Expr.symbol(f)
    return e


def _check_product(report, e, spec):
    n = normalize(e)
    report.record("idempotence", normalize(n).terms == n.terms, e)
    de = apply_delta(n, spec)
    report.record("delta-squared", apply_delta(de, spec).is_zero(), e)
    if n.terms and de.terms and len(n.terms) == 1:
        degree = degree_of(n, spec)
        shift = spec.shift if spec is not None else Degree((1,) * len(degree))
        report.record("degree-shift", degree_of(de, spec) == degree + shift, e)


def dga_law_suite(spec=None, max_symbols=4, nsamples=1000, seed=0):
    """Run the exterior DGA law suite.

    Every product of at most `max_symbols` factors drawn from four symbols
    and their differentials is checked exhaustively, followed by
    `nsamples` random sums with rational coefficients.

    Parameters
    ----------
    spec : ComplexSpec, optional
        Formal signature supplying shift and sign convention.
    max_symbols : int, optional
        Longest product checked exhaustively, by default 4.
    nsamples : int, optional
        Number of random expressions, by default 1000.
    seed : int, optional
        Seed of the random part, by default 0.

    Returns
    -------
    LawReport

    """
    if spec is not None:
        spec = spec.formal()
    report = LawReport()
    pool = [Factor(s, d) for s in law_symbols(spec) for d in (False, True)]

    for length in range(1, max_symbols + 1):
        for factors in product(pool, repeat=length):
            _check_product(report, _chain(factors), spec)

    for a, b in product(pool, repeat=2):
        ea, eb = Expr.symbol(a), Expr.symbol(b)
        swapped = wedge(ea, eb) + wedge(eb, ea)
        report.record("anticommutativity", swapped.is_zero(), ea * eb)
    for a in pool:
        ea = Expr.symbol(a)
        report.record("nilpotency", wedge(ea, ea).is_zero(), ea)

    ordered = sorted(pool, key=Factor.key)
    for length in range(2, max_symbols + 1):
        for factors in combinations(ordered, length):
            for k in range(1, length):
                a, b = _chain(factors[:k]), _chain(factors[k:])
                sign = (-1) ** sum(parity(f, spec) for f in factors[:k])
                lhs = apply_delta(wedge(a, b), spec)
                rhs = wedge(apply_delta(a, spec), b) + sign * wedge(
                    a, apply_delta(b, spec)
                )
                report.record("leibniz", lhs == rhs, wedge(a, b))

    for a, b, c in product(pool, repeat=3):
        ea, eb, ec = Expr.symbol(a), Expr.symbol(b), Expr.symbol(c)
        left = wedge(ea + eb, ec) == wedge(ea, ec) + wedge(eb, ec)
        right = wedge(ec, ea + eb) == wedge(ec, ea) + wedge(ec, eb)
        report.record("bilinearity", left and right, ea + eb)

    rng, _ = rng_from_seed(seed)
    for _ in range(nsamples):
        e = _random_expr(rng, pool, max_symbols)
        n = normalize(e)
        report.record("idempotence", normalize(n).terms == n.terms, e)
        twice = apply_delta(apply_delta(n, spec), spec)
        report.record("delta-squared", twice.is_zero(), e)
        f = _random_expr(rng, pool, max_symbols)
        g = _random_expr(rng, pool, max_symbols)
        ok = wedge(e + f, g) == wedge(e, g) + wedge(f, g)
        report.record("bilinearity", ok, e)
    return report


def _random_expr(rng, pool, max_symbols):
    terms = []
    for _ in range(int(rng.integers(1, 5))):
        length = int(rng.integers(1, max_symbols + 1))
        factors = [pool[int(i)] for i in rng.integers(0, len(pool), size=length)]
        numerator = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        coeff = sp.Rational(numerator, int(rng.integers(1, 4)))
        terms.append(_chain(factors, coeff))
    e = terms[0]
    for t in terms[1:]:
        e = e + t
    return e
