"""Index and parameter compatibility arithmetic."""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from ..core.symbols import Degree
from ..exception import DegreeMismatch, DomainViolation, OverlapOutOfRange

__all__ = [
    "OverlapRecord",
    "CompatKind",
    "BranchReport",
    "product_degree",
    "check_compat",
    "overlap_lattice",
    "branch_existence",
    "relation_text",
]


@dataclass(frozen=True)
class OverlapRecord:
    """Numbers of shared parameters: `r` in the first component, `t` in the second.

    Examples
    --------
    >>> from contlie import OverlapRecord
    >>> OverlapRecord.of((1, 0))
    OverlapRecord(r=1, t=0)
    >>> print(OverlapRecord(2).degree)
    2

    """

    r: int
    t: int = None

    @classmethod
    def of(cls, value):
        if isinstance(value, OverlapRecord):
            return value
        if isinstance(value, int):
            return cls(value)
        value = tuple(Degree.of(value))
        return cls(*value)

    @property
    def degree(self):
        if self.t is None:
            return Degree((self.r,))
        return Degree((self.r, self.t))


class CompatKind(Enum):
    """The four compatibility relations between outer, inner and alpha degrees."""

    R1 = "R1"
    L1 = "L1"
    RRseq = "RRseq"
    LLseq = "LLseq"


_RELATIONS = {
    CompatKind.R1: "outer + shift = inner + alpha - ov",
    CompatKind.L1: "inner = alpha + outer + shift - ov",
    CompatKind.RRseq: "outer = inner + alpha - ov",
    CompatKind.LLseq: "inner = outer + alpha - ov",
}


def _as_overlap(ov, arity):
    degree = OverlapRecord.of(ov).degree
    if len(degree) != arity:
        raise DegreeMismatch(f"Overlap {degree} does not have arity {arity}")
    return degree


def _as_degree(value, arity):
    degree = Degree.of(value)
    if len(degree) != arity:
        raise DegreeMismatch(f"Degree {degree} does not have arity {arity}")
    return degree


def product_degree(spec, d1, d2, ov):
    """Degree of a product under the additive-minus-overlap rule.

    Parameters
    ----------
    spec : ComplexSpec
        The signature.
    d1, d2 : Degree
        Degrees of the factors.
    ov : OverlapRecord
        Shared parameter counts.

    Returns
    -------
    Degree
        ``d1 + d2 - ov`` componentwise.

    Raises
    ------
    DegreeMismatch
        If a degree does not have the spec's arity.
    OverlapOutOfRange
        Unless ``0 <= ov <= min(d1, d2)`` componentwise.

    Examples
    --------
    >>> from contlie import CHAIN, product_degree
    >>> print(product_degree(CHAIN, 1, 2, 1))
    2

    """
    d1 = _as_degree(d1, spec.arity)
    d2 = _as_degree(d2, spec.arity)
    ov = _as_overlap(ov, spec.arity)
    for a, b, o in zip(d1, d2, ov):
        if o < 0 or o > min(a, b):
            raise OverlapOutOfRange(
                f"Overlap {ov} is outside [0, min({d1}, {d2})]"
            )
    return d1 + d2 - ov


def check_compat(spec, kind, outer, inner, alpha, ov):
    """Check one compatibility relation.

    "outer" is the degree of chi, "inner" the degree of phi and "alpha"
    the degree of the introduced element.

    Parameters
    ----------
    spec : ComplexSpec
    kind : CompatKind or str
    outer, inner, alpha : Degree
    ov : OverlapRecord

    Returns
    -------
    bool
        True iff the linear relation holds componentwise and
        ``ov <= alpha``.

    Raises
    ------
    DomainViolation
        If a degree lies outside the index domain or the overlap is negative.

    Examples
    --------
    >>> from contlie import CHAIN, check_compat
    >>> check_compat(CHAIN, "R1", outer=1, inner=1, alpha=2, ov=1)
    True

    """
    kind = CompatKind(kind)
    outer, inner, alpha = (_as_degree(d, spec.arity) for d in (outer, inner, alpha))
    ov = _as_overlap(ov, spec.arity)
    for label, degree in (("outer", outer), ("inner", inner), ("alpha", alpha)):
        if not spec.in_domain(degree):
            raise DomainViolation(
                f"{label} degree {degree} is outside the {spec.domain} domain"
            )
    if not ov.is_nonnegative():
        raise DomainViolation(f"Overlap {ov} is negative")
    shift = spec.shift
    if kind is CompatKind.R1:
        holds = outer + shift == inner + alpha - ov
    elif kind is CompatKind.L1:
        holds = inner == alpha + outer + shift - ov
    elif kind is CompatKind.RRseq:
        holds = outer == inner + alpha - ov
    else:
        holds = inner == outer + alpha - ov
    return holds and ov <= alpha


def relation_text(kind):
    """The relation a compatibility kind checks, as text."""
    return f"{CompatKind(kind).value}: {_RELATIONS[CompatKind(kind)]}"


def overlap_lattice(spec, kind, outer, inner):
    """All admissible ``(alpha, ov)`` pairs for a compatibility relation.

    The relation fixes ``alpha - ov``; the overlap then ranges up to the
    degree of the factor alpha shares parameters with.

    Returns
    -------
    list of tuple
        ``(alpha, ov)`` pairs of Degrees, smallest alpha first. Empty when
        the relation has no solution.

    """
    kind = CompatKind(kind)
    outer = _as_degree(outer, spec.arity)
    inner = _as_degree(inner, spec.arity)
    shift = spec.shift
    if kind is CompatKind.R1:
        fixed, bound = outer + shift - inner, inner
    elif kind is CompatKind.L1:
        fixed, bound = inner - outer - shift, outer + shift
    elif kind is CompatKind.RRseq:
        fixed, bound = outer - inner, inner + shift
    else:
        fixed, bound = inner - outer, outer + shift
    if not fixed.is_nonnegative():
        return []
    lattice = []
    for ov in product(*(range(0, b + 1) for b in bound)):
        ov = Degree(ov)
        alpha = fixed + ov
        if spec.in_domain(alpha):
            lattice.append((alpha, ov))
    lattice.sort(
        key=lambda pair: (pair[0].total, pair[0].components, pair[1].components)
    )
    return lattice


@dataclass(frozen=True)
class BranchReport:
    """Which branches exist at a vertex, with their admissible lattices."""

    left: bool
    right: bool
    left_witnesses: tuple = field(default=())
    right_witnesses: tuple = field(default=())

    @property
    def both(self):
        return self.left and self.right


def branch_existence(spec, chi, phi):
    """Decide which branch relations can be satisfied at a vertex.

    The right branch ``d chi = phi . alpha`` needs ``chi + shift - phi >= 0``;
    the left branch ``phi = alpha . d chi`` needs ``phi - chi - shift >= 0``.

    Parameters
    ----------
    spec : ComplexSpec
    chi, phi : Degree
        Degrees of chi and phi.

    Returns
    -------
    BranchReport

    Examples
    --------
    >>> from contlie import CECH_DE_RHAM, branch_existence
    >>> report = branch_existence(CECH_DE_RHAM, (1, 0), (1, 0))
    >>> report.left, report.right
    (False, True)
    >>> [(str(a), str(o)) for a, o in report.right_witnesses]
    [('(1,1)', '(0,0)'), ('(2,1)', '(1,0)')]

    """
    right = tuple(overlap_lattice(spec, CompatKind.R1, chi, phi))
    left = tuple(overlap_lattice(spec, CompatKind.L1, chi, phi))
    return BranchReport(
        left=bool(left),
        right=bool(right),
        left_witnesses=left,
        right_witnesses=right,
    )
