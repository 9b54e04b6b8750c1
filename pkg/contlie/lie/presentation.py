"""Continual Lie algebra presentations and their bracket evaluation."""

from dataclasses import dataclass, field, replace
from warnings import warn

import numpy as np
import sympy as sp

from ..core.expr import factor_degree, parity
from ..core.symbols import Factor, HolonomyWord, Param
from ..exception import (
    ArityMismatch,
    NoIndependentPath,
    SharedMismatch,
    UnknownPair,
    ValidationError,
)
from ..relations.dependence import independent_paths, mark_dependence
from ..relations.tree import ACTIVE, ROOT
from ..utils import Combination, format_coeff, format_grade, format_sympy

__all__ = [
    "KERNEL_RULES",
    "Generator",
    "Kernel",
    "BracketEntry",
    "MixedTerm",
    "MixedConstraint",
    "LiePresentation",
    "Applied",
    "merge_tuples",
    "bracket",
    "extract_presentation",
    "principal_presentation",
    "with_kernel",
    "with_bracket",
    "render_presentation",
    "render_kernels",
]

KERNEL_RULES = ("zero", "tuple-merge", "numeric-bilinear")


@dataclass(frozen=True)
class Generator:
    """A generator ``X(h_1, ..., h_arity)`` of grade `grade`.

    `arity` may be a sympy expression in the presentation's bound symbols.
    `source` names the differential-algebra element it was identified with.

    """

    name: str
    grade: int
    arity: object = 1
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "arity", sp.sympify(self.arity))


@dataclass(frozen=True, eq=False)
class Kernel:
    """A bilinear kernel ``K_{i,j}``.

    Parameters
    ----------
    name : str
        The label, e.g. ``K_{+1,0}``.
    rule : str
        One of "zero", "tuple-merge" or "numeric-bilinear".
    shared : int or sympy expression, optional
        Number of entries merged by a tuple-merge kernel.
    output : int or sympy expression, optional
        Output length of a tuple-merge kernel.
    tensor : numpy.ndarray, optional
        Structure tensor ``T[i, j, k]`` of a numeric-bilinear kernel.

    """

    name: str
    rule: str
    shared: object = None
    output: object = None
    tensor: np.ndarray = None

    def __post_init__(self):
        if self.rule not in KERNEL_RULES:
            raise ValidationError(f"Unknown kernel rule {self.rule!r}")
        if self.rule == "tuple-merge" and self.shared is None:
            raise ValidationError(f"Tuple-merge kernel {self.name} needs `shared`")
        if self.rule == "numeric-bilinear":
            if self.tensor is None:
                raise ValidationError(f"Numeric kernel {self.name} needs a tensor")
            tensor = np.asarray(self.tensor, dtype=float)
            if tensor.ndim != 3:
                raise ValidationError(f"Kernel {self.name} tensor must have 3 axes")
            object.__setattr__(self, "tensor", tensor)
        for attr in ("shared", "output"):
            value = getattr(self, attr)
            if value is not None:
                object.__setattr__(self, attr, sp.sympify(value))

    def __eq__(self, other):
        if not isinstance(other, Kernel):
            return NotImplemented
        if (self.name, self.rule, self.shared, self.output) != (
            other.name,
            other.rule,
            other.shared,
            other.output,
        ):
            return False
        if self.tensor is None or other.tensor is None:
            return self.tensor is None and other.tensor is None
        return np.array_equal(self.tensor, other.tensor)

    def __hash__(self):
        return hash((self.name, self.rule))

    def __call__(self, x, y):
        """Evaluate a numeric kernel on batches of E elements."""
        if self.rule == "zero":
            return np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)))
        if self.rule != "numeric-bilinear":
            raise ValidationError(f"Kernel {self.name} is not numeric")
        return np.einsum("ijk,ni,nj->nk", self.tensor, x, y)

    def scaled(self, factor):
        if self.rule != "numeric-bilinear":
            return self
        return replace(self, tensor=factor * self.tensor)


@dataclass(frozen=True)
class BracketEntry:
    """``[left, right] = output(kernel(args_left, args_right))``; no output means zero."""

    left: str
    right: str
    kernel: str
    output: str = None


@dataclass(frozen=True)
class MixedTerm:
    coeff: object
    left: str
    right: str
    kernel: str

    def __post_init__(self):
        object.__setattr__(self, "coeff", sp.sympify(self.coeff))


@dataclass(frozen=True)
class MixedConstraint:
    """A vanishing combination ``c1 [A1, B1] + c2 [A2, B2] = 0``."""

    terms: tuple

    def __post_init__(self):
        if len(self.terms) != 2:
            raise ValidationError("A mixed constraint ties exactly two brackets")
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Applied:
    """A generator applied to an argument tuple, e.g. ``X-(h1,h2)``."""

    generator: str
    args: tuple

    def key(self):
        return ("A", self.generator, tuple(p.name for p in self.args))

    def __str__(self):
        return f"{self.generator}({','.join(p.name for p in self.args)})"


@dataclass(frozen=True)
class LiePresentation:
    """Generators, bracket table, kernels and mixed constraints.

    Attributes
    ----------
    generators : tuple of Generator
    brackets : tuple of BracketEntry
        Ordered table; each unordered pair appears at most once, the
        reversed order is implied by antisymmetry.
    kernels : tuple of Kernel
    mixed : tuple of MixedConstraint
    grading_rule : str
        "principal", "non-principal", "spec" or "sequential".
    bindings : tuple
        ``(symbol name, value)`` pairs that evaluate symbolic arities.
    annotations : tuple of str

    """

    generators: tuple
    brackets: tuple = ()
    kernels: tuple = ()
    mixed: tuple = ()
    grading_rule: str = None
    bindings: tuple = ()
    annotations: tuple = field(default=())

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValidationError(f"Generator names are not unique: {names}")
        knames = [k.name for k in self.kernels]
        if len(set(knames)) != len(knames):
            raise ValidationError(f"Kernel names are not unique: {knames}")
        for entry in self.brackets:
            for name in (entry.left, entry.right, entry.output):
                if name is not None and name not in names:
                    raise ValidationError(f"Bracket uses unknown generator {name}")
            if entry.kernel not in knames:
                raise ValidationError(f"Bracket uses unknown kernel {entry.kernel}")

    def generator(self, name):
        if isinstance(name, Generator):
            name = name.name
        for g in self.generators:
            if g.name == name:
                return g
        raise ValidationError(f"No generator named {name!r}")

    def has_generator(self, name):
        return any(g.name == name for g in self.generators)

    def kernel(self, name):
        for k in self.kernels:
            if k.name == name:
                return k
        raise ValidationError(f"No kernel named {name!r}")

    def table(self):
        return {(e.left, e.right): e for e in self.brackets}

    def evaluate(self, value):
        """Integer value of an arity or shared-count expression."""
        value = sp.sympify(value).subs({sp.Symbol(k): v for k, v in self.bindings})
        if not value.is_integer:
            raise ValidationError(f"{value} does not evaluate to an integer")
        return int(value)

    def arity(self, name):
        return self.evaluate(self.generator(name).arity)


def _as_params(args):
    out = []
    for a in args:
        if isinstance(a, (Param, HolonomyWord)):
            out.append(a)
        else:
            out.append(Param(str(a), "holonomy"))
    return tuple(out)


def merge_tuples(a, b, shared):
    """Merge two argument tuples that agree on `shared` entries.

    Parameters
    ----------
    a, b : tuple of Param
    shared : int
        Number of trailing entries of `a` that must equal the leading
        entries of `b`.

    Returns
    -------
    tuple of Param
        `a` followed by the non-shared tail of `b`.

    Raises
    ------
    SharedMismatch
        If the overlap entries differ or `shared` is out of range.

    Examples
    --------
    >>> from contlie import Param, merge_tuples
    >>> h1, h2, h3 = (Param(f"h{i}") for i in (1, 2, 3))
    >>> [p.name for p in merge_tuples((h1, h2), (h2, h3), 1)]
    ['h1', 'h2', 'h3']

    """
    a, b = _as_params(a), _as_params(b)
    shared = int(shared)
    if shared < 0 or shared > min(len(a), len(b)):
        raise SharedMismatch(
            f"Cannot share {shared} entries between tuples of length "
            f"{len(a)} and {len(b)}"
        )
    if shared and a[len(a) - shared :] != b[:shared]:
        suffix = ",".join(p.name for p in a[len(a) - shared :])
        prefix = ",".join(p.name for p in b[:shared])
        raise SharedMismatch(f"Suffix ({suffix}) does not equal prefix ({prefix})")
    return a + b[shared:]


def _lookup(p, a, b):
    """Table entry for ``[a, b]`` and the sign of the lookup, or None."""
    table = p.table()
    if (a, b) in table:
        return table[a, b], 1
    if (b, a) in table:
        return table[b, a], -1
    return None, 0


def _lookup_mixed(p, a, b):
    for i, constraint in enumerate(p.mixed):
        t1, t2 = constraint.terms
        for term, other, sign in ((t1, t2, 1), (t2, t1, -1)):
            # [A1, B1] = c2 W, [A2, B2] = -c1 W
            coeff = sign * other.coeff
            if (term.left, term.right) == (a, b):
                return i, term, coeff
            if (term.left, term.right) == (b, a):
                return i, term, -coeff
    return None


def bracket(p, a, args_a, b, args_b):
    """Evaluate ``[a(args_a), b(args_b)]`` through the bracket table.

    Parameters
    ----------
    p : LiePresentation
    a, b : Generator or str
    args_a, args_b : tuple of Param or str

    Returns
    -------
    Combination
        Formal combination of Applied atoms. A bracket tied by a mixed
        constraint evaluates to its constraint atom ``W<i>``.

    Raises
    ------
    ArityMismatch
        If an argument tuple, or the kernel output, has the wrong length.
    UnknownPair
        If neither order of the pair is in the table.
    SharedMismatch
        If a tuple-merge kernel gets tuples that disagree on shared entries.

    Examples
    --------
    >>> from contlie import CECH_DE_RHAM, godbillon_vey, bracket
    >>> gv = godbillon_vey(CECH_DE_RHAM, 1, 1)
    >>> result = bracket(gv, "X+", ("h1",), "H", ("h2",))
    >>> [(str(atom), int(c)) for atom, c in result.items()]
    [('X-(h1,h2)', 1)]

    """
    a = a.name if isinstance(a, Generator) else a
    b = b.name if isinstance(b, Generator) else b
    args_a, args_b = _as_params(args_a), _as_params(args_b)
    for name, args in ((a, args_a), (b, args_b)):
        if len(args) != p.arity(name):
            raise ArityMismatch(
                f"{name} takes {p.arity(name)} arguments, got {len(args)}"
            )
    if a == b and args_a == args_b:
        return Combination()

    entry, sign = _lookup(p, a, b)
    if entry is not None:
        left, right = (args_a, args_b) if sign == 1 else (args_b, args_a)
        kernel = p.kernel(entry.kernel)
        output = entry.output
    else:
        found = _lookup_mixed(p, a, b)
        if found is None:
            raise UnknownPair(f"No bracket [{a}, {b}] in the table")
        index, term, sign = found
        left, right = (args_a, args_b) if (term.left, term.right) == (a, b) else (
            args_b,
            args_a,
        )
        kernel = p.kernel(term.kernel)
        output = f"W{index + 1}"

    sign = sp.sympify(sign).subs({sp.Symbol(k): v for k, v in p.bindings})
    if kernel.rule == "zero" or sign == 0:
        return Combination()
    if kernel.rule != "tuple-merge":
        raise ValidationError(
            f"Kernel {kernel.name} is numeric; use check_jacobi_numeric"
        )
    merged = merge_tuples(left, right, p.evaluate(kernel.shared))
    if kernel.output is not None and len(merged) != p.evaluate(kernel.output):
        raise ArityMismatch(
            f"{kernel.name} produced {len(merged)} arguments but declares "
            f"{p.evaluate(kernel.output)}"
        )
    if p.has_generator(output) and len(merged) != p.arity(output):
        raise ArityMismatch(
            f"{kernel.name} produced {len(merged)} arguments but {output} "
            f"takes {p.arity(output)}"
        )
    return Combination.of(Applied(output, merged), sign)


def _kernel_label(left, right):
    return f"K_{{{format_grade(left)},{format_grade(right)}}}"


class _Builder:
    """Accumulates generators, kernels and brackets during extraction."""

    def __init__(self, spec):
        self.spec = spec
        self.generators = {}
        self.by_factor = {}
        self.kernels = {}
        self.brackets = []
        self.mixed = []

    def add_generator(self, factor, name, grade, arity):
        key = factor.key()
        if key in self.by_factor:
            return self.by_factor[key]
        g = Generator(name, grade, arity, str(factor))
        self.generators[name] = g
        self.by_factor[key] = name
        return name

    def name_of(self, factor):
        return self.by_factor[factor.key()]

    def add_kernel(self, kernel):
        name = kernel.name
        while name in self.kernels and self.kernels[name] != replace(kernel, name=name):
            name += "'"
        kernel = replace(kernel, name=name)
        self.kernels[name] = kernel
        return name

    def _label(self, left, right):
        return _kernel_label(self.generators[left].grade, self.generators[right].grade)

    def add_bracket(self, left, right, output=None, shared=None):
        left, right = self.name_of(left), self.name_of(right)
        output = None if output is None else self.name_of(output)
        pairs = {(e.left, e.right) for e in self.brackets}
        if (left, right) in pairs or (right, left) in pairs:
            warn(f"Bracket [{left}, {right}] is already in the table; keeping the first")
            return
        label = self._label(left, right)
        if output is None:
            kernel = self.add_kernel(Kernel(label, "zero"))
        else:
            g = self.generators
            out = sp.expand(g[left].arity + g[right].arity - sp.sympify(shared))
            kernel = self.add_kernel(Kernel(label, "tuple-merge", shared, out))
        self.brackets.append(BracketEntry(left, right, kernel, output))

    def add_mixed(self, terms, shared):
        """`terms` is a pair of ``(coeff, left, right)`` with factor operands."""
        out = []
        for coeff, left, right in terms:
            left, right = self.name_of(left), self.name_of(right)
            g = self.generators
            arity = sp.expand(g[left].arity + g[right].arity - sp.sympify(shared))
            label = self._label(right, left)
            kernel = self.add_kernel(Kernel(label, "tuple-merge", shared, arity))
            out.append(MixedTerm(coeff, left, right, kernel))
        self.mixed.append(MixedConstraint(tuple(out)))


def _collect_nodes(tree, paths):
    route_nodes = []
    for path in paths:
        for q in tree.route(path):
            if q != ROOT and q not in route_nodes:
                route_nodes.append(q)
    return sorted(route_nodes, key=lambda q: (len(q), q))


def _identify_integrability(tree, builder, nodes):
    """Generators X+, X-, H, H* of the integrability seed ``chi = phi``."""
    spec = tree.spec
    chi = tree.chi
    node = tree.node("R")
    s = spec.shift[0]
    n, r = sp.Symbol("n"), sp.Symbol("r")
    dchi = Factor(chi.base, True)
    alpha = Factor(node.introduced)
    dalpha = Factor(node.introduced, True)
    builder.add_generator(chi, "X+", 1, n)
    builder.add_generator(dchi, "X-", -1, n + s)
    builder.add_generator(alpha, "H", 0, r + s)
    builder.add_generator(dalpha, "H*", 0, r + 2 * s)

    builder.add_bracket(chi, dchi)
    builder.add_bracket(chi, alpha, output=dchi, shared=r)
    offset = (parity(chi, spec) - factor_degree(chi, spec)[0]) % 2
    builder.add_mixed(
        ((1, dchi, alpha), ((-1) ** (n + offset), chi, dalpha)), shared=r
    )
    bindings = (("n", factor_degree(chi, spec)[0]), ("r", node.compat.overlap.r))
    annotations = ()
    if bindings[0][1] == 1:
        annotations = (
            f"Godbillon-Vey class [{node.introduced.name} . d {node.introduced.name}]",
        )
    return "non-principal", bindings, annotations


def _translate(tree, builder, nodes, through_consequence):
    spec = tree.spec
    root = tree.node(ROOT)
    builder.add_bracket(root.left, root.right)
    if through_consequence and root.consequence_status == ACTIVE:
        builder.add_bracket(Factor(root.left.base, True), root.right)

    for path in nodes:
        node = tree.node(path)
        ov = node.compat.overlap.r
        x, y = node.left, node.right
        alpha = Factor(node.introduced)
        dalpha = Factor(node.introduced, True)
        if node.letter == "R":
            builder.add_bracket(x, alpha, output=y, shared=ov)
        else:
            builder.add_bracket(alpha, y, output=x, shared=ov)
        if node.consequence_status != ACTIVE:
            continue
        if node.depth >= 2:
            first, second = (x, dalpha) if node.letter == "R" else (dalpha, y)
            builder.add_bracket(first, second)
        elif node.letter == "L":
            builder.add_bracket(
                dalpha, y, output=Factor(x.base, True), shared=ov
            )
        else:
            sign = (-1) ** parity(x, spec)
            builder.add_mixed(
                ((1, Factor(x.base, True), alpha), (sign, x, dalpha)), shared=ov
            )


def extract_presentation(tree):
    """Extract the continual Lie algebra presentation of a relation tree.

    Products become commutators: every relation ``A . B = C`` along an
    independent path becomes the bracket ``[A, B] = C`` with a tuple-merge
    kernel sharing the node's overlap, and ``A . B = 0`` becomes a zero
    bracket. The differentiated right-branch relation is kept as a mixed
    constraint. When the seed is the integrability condition
    ``chi . d chi = 0``, the generators are named X+, X-, H, H* with
    grades +1, -1, 0, 0.

    Parameters
    ----------
    tree : RelationTree

    Returns
    -------
    LiePresentation

    Raises
    ------
    NoIndependentPath
        If the tree has no independent path.

    """
    if tree.marks is None:
        tree = mark_dependence(tree)
    paths = independent_paths(tree)
    if not paths:
        raise NoIndependentPath("The relation tree has no independent path")
    nodes = _collect_nodes(tree, paths)
    builder = _Builder(tree.spec)

    if tree.chi.key() == tree.phi.key() and paths == ["R"]:
        rule, bindings, annotations = _identify_integrability(tree, builder, nodes)
    else:
        spec = tree.spec
        factors = [
            tree.chi,
            Factor(tree.chi.base, True),
            tree.phi,
            Factor(tree.phi.base, True),
        ]
        for path in nodes:
            introduced = tree.node(path).introduced
            factors += [Factor(introduced), Factor(introduced, True)]
        index = 0
        for f in factors:
            if f.key() in builder.by_factor:
                continue
            degree = factor_degree(f, spec)
            grade = spec.grade_of(degree)
            builder.add_generator(
                f, str(f), index if grade is None else grade, degree[0]
            )
            index += 1
        rule = "spec" if spec.grading else "sequential"
        bindings, annotations = (), ()
        through = any(q[:2] in ("LL", "RR") for q in nodes)
        _translate(tree, builder, nodes, through)

    return LiePresentation(
        generators=tuple(builder.generators.values()),
        brackets=tuple(builder.brackets),
        kernels=tuple(builder.kernels.values()),
        mixed=tuple(builder.mixed),
        grading_rule=rule,
        bindings=bindings,
        annotations=annotations,
    )


def principal_presentation(kernels):
    """The principal-grading local part ``X0, X+1, X-1`` with numeric kernels.

    Parameters
    ----------
    kernels : dict
        Kernels named ``K_{0,0}``, ``K_{+1}``, ``K_{-1}`` and ``K_{0}``,
        e.g. from :func:`sl2_kernels`.

    Returns
    -------
    LiePresentation

    """
    missing = {"K_{0,0}", "K_{+1}", "K_{-1}", "K_{0}"} - set(kernels)
    if missing:
        raise ValidationError(f"Missing kernels: {', '.join(sorted(missing))}")
    generators = (
        Generator("X0", 0, source="X_0"),
        Generator("X+1", 1, source="X_{+1}"),
        Generator("X-1", -1, source="X_{-1}"),
    )
    brackets = (
        BracketEntry("X0", "X0", "K_{0,0}", "X0"),
        BracketEntry("X0", "X+1", "K_{+1}", "X+1"),
        BracketEntry("X0", "X-1", "K_{-1}", "X-1"),
        BracketEntry("X+1", "X-1", "K_{0}", "X0"),
    )
    return LiePresentation(
        generators=generators,
        brackets=brackets,
        kernels=tuple(kernels[name] for name in sorted(kernels)),
        grading_rule="principal",
    )


def with_kernel(p, kernel):
    """A copy of `p` with the kernel of the same name replaced."""
    p.kernel(kernel.name)
    kernels = tuple(kernel if k.name == kernel.name else k for k in p.kernels)
    return replace(p, kernels=kernels)


def with_bracket(p, entry, kernel=None):
    """A copy of `p` with one more bracket entry (and its kernel, if new)."""
    kernels = p.kernels if kernel is None else p.kernels + (kernel,)
    return replace(p, brackets=p.brackets + (entry,), kernels=kernels)


def _args_text(arity):
    arity = sp.sympify(arity)
    if arity == 0:
        return ""
    if arity == 1:
        return "h_1"
    text = format_sympy(arity)
    if len(text) > 1:
        text = "{" + text + "}"
    return f"h_1..h_{text}"


def _bracket_text(p, left, right):
    tl = _args_text(p.generator(left).arity)
    tr = _args_text(p.generator(right).arity)
    return f"[{left}({tl}), {right}({tr})]", tl, tr


def _coeff_text(coeff, first):
    coeff = sp.sympify(coeff)
    if coeff.is_Rational:
        return format_coeff(coeff, first)
    prefix = "" if first else " + "
    return f"{prefix}{format_sympy(coeff)} "


def render_presentation(p):
    """Text lines for generators, bracket table and mixed constraints."""
    lines = ["generators:"]
    for g in p.generators:
        source = f"  = {g.source}" if g.source else ""
        lines.append(
            f"  {g.name}  grade {format_grade(g.grade)}  "
            f"arity {format_sympy(g.arity)}{source}"
        )
    lines.append(f"brackets ({p.grading_rule or 'ungraded'} grading):")
    for entry in p.brackets:
        text, tl, tr = _bracket_text(p, entry.left, entry.right)
        if entry.output is None:
            lines.append(f"  {text} = 0")
        else:
            args = ", ".join(t for t in (tl, tr) if t)
            lines.append(f"  {text} = {entry.output}({entry.kernel}({args}))")
    for constraint in p.mixed:
        parts = []
        for i, term in enumerate(constraint.terms):
            text, _, _ = _bracket_text(p, term.left, term.right)
            parts.append(_coeff_text(term.coeff, i == 0) + text)
        lines.append("  " + "".join(parts) + " = 0")
    for note in p.annotations:
        lines.append(f"note: {note}")
    return lines


def render_kernels(p):
    lines = ["kernels:"]
    for k in p.kernels:
        if k.rule == "zero":
            lines.append(f"  {k.name} = 0")
        elif k.rule == "tuple-merge":
            out = format_sympy(k.output)
            out = out if len(out) == 1 else "{" + out + "}"
            lines.append(f"  {k.name} = h_{out}  [shared {format_sympy(k.shared)}]")
        else:
            shape = "x".join(str(s) for s in k.tensor.shape)
            lines.append(f"  {k.name} = tensor {shape}")
    return lines
