"""Symbolic and numeric Jacobi identity checks."""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..core.symbols import HolonomyWord, Param
from ..exception import ArityMismatch, SharedMismatch, UnknownPair, ValidationError
from ..utils import Combination, format_grade, rng_from_seed
from .algebra import PRINCIPAL_GRADES
from .presentation import Applied, _lookup, _lookup_mixed, bracket

__all__ = [
    "Word",
    "Defect",
    "TripleResult",
    "SymbolicJacobiReport",
    "NumericJacobiReport",
    "check_jacobi_symbolic",
    "admissible_triples",
    "distinct_triples",
    "check_jacobi_numeric",
    "graded_triples",
]


@dataclass(frozen=True)
class Word:
    """An unevaluated bracket of two atoms, stored in canonical order."""

    left: object
    right: object

    def key(self):
        return ("B", self.left.key(), self.right.key())

    def __str__(self):
        return f"[{self.left}, {self.right}]"


@dataclass(frozen=True)
class Defect:
    """A kernel evaluation that violated a precondition; never cancels."""

    index: int
    message: str

    def key(self):
        return ("D", self.index, self.message)

    def __str__(self):
        return f"defect#{self.index}"


def _render(combination):
    if combination.is_zero():
        return "0"
    items = sorted(combination.items(), key=lambda item: item[0].key())
    return " + ".join(f"({c})*{atom}" for atom, c in items)


@dataclass
class TripleResult:
    triple: tuple
    residual: Combination
    defects: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)

    @property
    def admissible(self):
        return not self.defects and not self.unresolved

    @property
    def zero(self):
        return self.residual.is_zero()

    def text(self):
        return ", ".join(str(a) for a in self.triple)


@dataclass
class SymbolicJacobiReport:
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.zero for r in self.results)

    @property
    def nonzero(self):
        return [r for r in self.results if not r.zero]

    @property
    def admissible(self):
        return [r for r in self.results if r.admissible]

    @property
    def unresolved(self):
        return [r for r in self.results if r.unresolved]

    def rows(self):
        return [
            {
                "triple": r.text(),
                "admissible": r.admissible,
                "residual": _render(r.residual),
            }
            for r in self.results
        ]


class _Evaluator:
    def __init__(self, p):
        self.p = p
        self.defects = []
        self.unresolved = []

    def atoms(self, x, y):
        if x.key() == y.key():
            return Combination()
        p = self.p
        if (
            isinstance(x, Applied)
            and isinstance(y, Applied)
            and p.has_generator(x.generator)
            and p.has_generator(y.generator)
        ):
            try:
                return bracket(p, x.generator, x.args, y.generator, y.args)
            except UnknownPair:
                self.unresolved.append(f"[{x.generator}, {y.generator}]")
            except (ArityMismatch, SharedMismatch) as e:
                self.defects.append(str(e))
                return Combination.of(Defect(len(self.defects), str(e)))
        else:
            self.unresolved.append(f"[{x}, {y}]")
        if x.key() < y.key():
            return Combination.of(Word(x, y))
        return Combination.of(Word(y, x), -1)

    def bracket(self, x, combination):
        out = Combination()
        for atom, coeff in combination.items():
            out = out + self.atoms(x, atom) * coeff
        return out

    def jacobi(self, a, b, c):
        return (
            self.bracket(a, self.atoms(b, c))
            + self.bracket(b, self.atoms(c, a))
            + self.bracket(c, self.atoms(a, b))
        )


def _as_atom(item):
    if isinstance(item, Applied):
        return item
    name, args = item
    args = tuple(
        a if isinstance(a, (Param, HolonomyWord)) else Param(str(a), "holonomy")
        for a in args
    )
    return Applied(getattr(name, "name", name), args)


def _evaluate(p, triple):
    triple = tuple(_as_atom(t) for t in triple)
    ev = _Evaluator(p)
    residual = ev.jacobi(*triple)
    return TripleResult(triple, residual, ev.defects, ev.unresolved)


def check_jacobi_symbolic(p, samples):
    """Evaluate the cyclic sum of double brackets on sample triples.

    Parameters
    ----------
    p : LiePresentation
    samples : iterable
        Triples of ``(generator, args)`` pairs.

    Returns
    -------
    SymbolicJacobiReport
        One result per triple with its residual combination. Brackets
        missing from the table stay as formal words; kernel evaluations
        that break an arity or shared-prefix precondition leave defect
        atoms in the residual.

    """
    report = SymbolicJacobiReport()
    for triple in samples:
        if len(triple) != 3:
            raise ValidationError(f"Expected a triple, got {len(triple)} entries")
        report.results.append(_evaluate(p, triple))
    return report


def _shared_with(p, a, b):
    """Shared count and orientation of the tuple-merge kernel of ``[a, b]``."""
    entry, sign = _lookup(p, a, b)
    if entry is not None:
        kernel = p.kernel(entry.kernel)
        b_right = sign == 1
    else:
        found = _lookup_mixed(p, a, b)
        if found is None:
            return None
        _, term, _ = found
        kernel = p.kernel(term.kernel)
        b_right = (term.left, term.right) == (a, b)
    if kernel.rule != "tuple-merge":
        return None
    return p.evaluate(kernel.shared), b_right


def admissible_triples(p, count=50, seed=0, pool=12):
    """Draw triples that evaluate without defects or unresolved brackets.

    Triples repeat one generator application, in the patterns
    ``(P, P, Q)``, ``(P, Q, P)`` and ``(Q, P, P)``. Arguments are drawn
    without replacement from ``h1, ..., h<pool>``; when ``[P, Q]`` is a
    tuple merge the shared entries of Q are copied from P.

    Parameters
    ----------
    p : LiePresentation
    count : int, optional
        Number of triples wanted, by default 50.
    seed : int, optional
        By default 0.
    pool : int, optional
        Size of the argument alphabet, by default 12.

    Returns
    -------
    list of tuple
        At most `count` distinct triples of Applied atoms.

    """
    rng, _ = rng_from_seed(seed)
    letters = [Param(f"h{i}", "holonomy") for i in range(1, pool + 1)]
    names = [g.name for g in p.generators]
    patterns = ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def draw(k, exclude=()):
        choices = [h for h in letters if h not in exclude]
        if k > len(choices):
            return None
        idx = rng.choice(len(choices), size=k, replace=False)
        return tuple(choices[int(i)] for i in idx)

    found, seen = [], set()
    attempts = 0
    while len(found) < count and attempts < 200 * count:
        attempts += 1
        a = names[int(rng.integers(len(names)))]
        b = names[int(rng.integers(len(names)))]
        args_a = draw(p.arity(a))
        if args_a is None:
            continue
        kb = p.arity(b)
        shared = _shared_with(p, a, b)
        if shared is None or shared[0] == 0:
            args_b = draw(kb)
        else:
            s, b_right = shared
            if s > min(kb, len(args_a)):
                continue
            fresh = draw(kb - s, exclude=args_a)
            if fresh is None:
                continue
            if b_right:
                args_b = args_a[len(args_a) - s :] + fresh
            else:
                args_b = fresh + args_a[:s]
        if args_b is None:
            continue
        atoms = (Applied(a, args_a), Applied(b, args_b))
        triple = tuple(atoms[i] for i in patterns[int(rng.integers(3))])
        key = tuple(t.key() for t in triple)
        if key in seen:
            continue
        seen.add(key)
        if _evaluate(p, triple).admissible:
            found.append(triple)
    return found


def distinct_triples(p, count=50, seed=0, pool=12):
    """Draw triples of three pairwise distinct atoms.

    Each atom is a random generator applied to arguments drawn without
    replacement from ``h1, ..., h<pool>``. Unlike :func:`admissible_triples`
    nothing is filtered out, so most triples hit a pair missing from the
    bracket table and come back unresolved.

    Parameters
    ----------
    p : LiePresentation
    count : int, optional
        Number of triples wanted, by default 50.
    seed : int, optional
        By default 0.
    pool : int, optional
        Size of the argument alphabet, by default 12.

    Returns
    -------
    list of tuple
        At most `count` distinct triples of Applied atoms.

    """
    rng, _ = rng_from_seed(seed)
    letters = [Param(f"h{i}", "holonomy") for i in range(1, pool + 1)]
    names = [g.name for g in p.generators if p.arity(g.name) <= pool]
    if not names:
        return []

    def atom():
        name = names[int(rng.integers(len(names)))]
        idx = rng.choice(pool, size=p.arity(name), replace=False)
        return Applied(name, tuple(letters[int(i)] for i in idx))

    found, seen = [], set()
    attempts = 0
    while len(found) < count and attempts < 200 * count:
        attempts += 1
        triple = (atom(), atom(), atom())
        key = tuple(t.key() for t in triple)
        if len(set(key)) < 3 or key in seen:
            continue
        seen.add(key)
        found.append(triple)
    return found


@dataclass
class NumericJacobiReport:
    max_residual: float
    passed: bool
    seed: int
    nsamples: int
    tol: float
    residuals: dict = field(default_factory=dict)

    def rows(self):
        return [
            {"relation": name, "max_residual": value}
            for name, value in self.residuals.items()
        ]


def graded_triples():
    """Grade triples whose grades, pairwise sums and total lie in {-1, 0, 1}."""
    unit = (-1, 0, 1)
    return [
        (i, j, k)
        for i, j, k in product(unit, repeat=3)
        if all(s in unit for s in (i + j, j + k, k + i, i + j + k))
    ]


def check_jacobi_numeric(E, kernels, grades=None, nsamples=100, tol=1e-12, seed=0):
    """Check the kernel Jacobi conditions on random elements of E.

    Parameters
    ----------
    E : DiscreteE
    kernels : dict
        Kernel name to numeric Kernel.
    grades : dict, optional
        Kernel name to the grade pair ``(i, j)`` it brackets; by default the
        principal map ``K_{0,0}: (0, 0)``, ``K_{+1}: (0, 1)``,
        ``K_{-1}: (0, -1)``, ``K_{0}: (1, -1)``. Reversed pairs follow by
        antisymmetry, missing pairs are zero.
    nsamples : int, optional
        By default 100.
    tol : float, optional
        By default 1e-12.
    seed : int, optional
        By default 0; -1 draws a fresh seed.

    Returns
    -------
    NumericJacobiReport

    Raises
    ------
    DimensionMismatch
        If a kernel tensor does not match the dimension of E.

    """
    grades = PRINCIPAL_GRADES if grades is None else grades
    if tol <= 0:
        raise ValidationError(f"tol must be positive, got {tol}")
    direct = {}
    for name, kernel in kernels.items():
        if kernel.rule not in ("numeric-bilinear", "zero"):
            raise ValidationError(f"Kernel {name} is not numeric")
        E.check_kernel(kernel)
        if name in grades:
            direct[tuple(grades[name])] = kernel

    def K(i, j, x, y):
        if (i, j) in direct:
            return direct[i, j](x, y)
        if (j, i) in direct:
            return -direct[j, i](y, x)
        return np.zeros_like(x)

    rng, seed = rng_from_seed(seed)
    phi, psi, chi = (E.sample(rng, nsamples) for _ in range(3))

    residuals = {}
    for s in (1, -1):
        lhs = K(0, s, K(0, 0, phi, psi), chi)
        rhs = K(0, s, phi, K(0, s, psi, chi)) - K(0, s, psi, K(0, s, phi, chi))
        residuals[f"jac1[{format_grade(s)}]"] = lhs - rhs
    lhs = K(0, 0, psi, K(1, -1, phi, chi))
    rhs = K(1, -1, K(0, 1, psi, phi), chi) + K(1, -1, phi, K(0, -1, psi, chi))
    residuals["jac1[0]"] = lhs - rhs
    for i, j, k in graded_triples():
        total = (
            K(i, j + k, phi, K(j, k, psi, chi))
            + K(j, k + i, psi, K(k, i, chi, phi))
            + K(k, i + j, chi, K(i, j, phi, psi))
        )
        label = ",".join(format_grade(g) for g in (i, j, k))
        residuals[f"cyclic({label})"] = total

    residuals = {
        name: float(np.max(np.abs(values))) if np.size(values) else 0.0
        for name, values in residuals.items()
    }
    max_residual = max(residuals.values())
    return NumericJacobiReport(
        max_residual=max_residual,
        passed=max_residual < tol,
        seed=seed,
        nsamples=nsamples,
        tol=tol,
        residuals=residuals,
    )
