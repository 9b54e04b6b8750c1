"""Derivation of the tree of differential relations from an orthogonality seed.

The root is the orthogonality ``phi . d chi = 0``. Every branch node
introduces a fresh element alpha and states either the right relation
``Y = X . alpha`` or the left relation ``X = alpha . Y`` for the
orthogonal pair ``(X, Y)`` it grows from. Differentiating a node gives its
consequence; consequences of depth one are leaves, the root's consequence
and those of deeper nodes are new orthogonalities that seed the next pair
of branches.

"""

from collections import deque
from dataclasses import dataclass, field, replace
from warnings import warn

import networkx as nx

from ..complexes.compat import (
    CompatKind,
    OverlapRecord,
    check_compat,
    overlap_lattice,
    relation_text,
)
from ..core.expr import (
    Expr,
    degree_of,
    factor_degree,
    factor_param_lists,
    leibniz,
    normalize,
    render,
)
from ..core.symbols import Degree, Factor, GenSymbol, Param
from ..exception import (
    ContlieError,
    DegreeMismatch,
    SeedDegenerate,
    ValidationError,
)

__all__ = [
    "ROOT",
    "ACTIVE",
    "PRUNED",
    "COLLAPSED",
    "PathLabel",
    "CompatRecord",
    "RelationNode",
    "RelationTree",
    "derive_tree",
    "render_tree",
]

ROOT = ""
ACTIVE = "active"
PRUNED = "pruned"
COLLAPSED = "collapsed-trivial"


class PathLabel(str):
    """A word over ``{L, R}``; the empty word labels the root.

    Examples
    --------
    >>> from contlie import PathLabel
    >>> PathLabel("RR").depth
    2
    >>> PathLabel("RX")
    Traceback (most recent call last):
    contlie.exception.ValidationError: path 'RX' has letters other than L and R

    """

    def __new__(cls, steps=""):
        steps = "".join(steps)
        if set(steps) - {"L", "R"}:
            raise ValidationError(f"path {steps!r} has letters other than L and R")
        return super().__new__(cls, steps)

    @property
    def steps(self):
        return tuple(self)

    @property
    def depth(self):
        return len(self)

    def label(self):
        return self or "root"


@dataclass(frozen=True)
class CompatRecord:
    """The compatibility data of a branch node."""

    kind: CompatKind
    outer: Degree
    inner: Degree
    lattice: tuple
    alpha: Degree = None
    overlap: OverlapRecord = None


@dataclass(frozen=True)
class RelationNode:
    """One relation of the tree with its consequence.

    Attributes
    ----------
    path : PathLabel
    role : str
        "orthogonality" for the root, "branch" otherwise.
    status : str
        "active", "pruned" or "collapsed-trivial".
    left, right : Factor
        The orthogonal pair ``(X, Y)`` the node grows from.
    introduced : GenSymbol
        The alpha of a branch node, None at the root or when pruned.
    relation : tuple of Expr
        Normalized ``(lhs, rhs)``.
    display : str
        The relation as written, before normalization.
    consequence : tuple of Expr
        Normalized differential of the relation.
    consequence_display : str
    consequence_status : str
        "active" or "collapsed-trivial"; None when there is no consequence.
    compat : CompatRecord
    violation : str
        The relation that has no solution, for pruned nodes.
    flags : tuple of str

    """

    path: PathLabel
    role: str
    status: str
    left: Factor
    right: Factor
    introduced: GenSymbol = None
    relation: tuple = None
    display: str = ""
    consequence: tuple = None
    consequence_display: str = ""
    consequence_status: str = None
    compat: CompatRecord = None
    violation: str = None
    flags: tuple = field(default=())

    @property
    def depth(self):
        return len(self.path)

    @property
    def letter(self):
        return self.path[-1] if self.path else None


class RelationTree:
    """The derived system of relations, stored as a networkx DiGraph.

    Graph nodes are path strings; the `node` attribute holds the
    RelationNode. Edges point from the vertex an orthogonality belongs
    to, to the branches it seeds.

    """

    def __init__(self, spec, chi, phi, depth_cap, graph, marks=None, unpaired=()):
        self.spec = spec
        self.chi = chi
        self.phi = phi
        self.depth_cap = depth_cap
        self.graph = graph
        self.marks = None if marks is None else tuple(marks)
        self.unpaired = tuple(unpaired)

    @property
    def nodes(self):
        return {p: self.graph.nodes[p]["node"] for p in self.paths}

    @property
    def paths(self):
        return sorted(self.graph.nodes, key=lambda p: (len(p), p))

    def node(self, path):
        try:
            return self.graph.nodes[path]["node"]
        except KeyError as e:
            raise ValidationError(f"No node at path {path!r}") from e

    def __contains__(self, path):
        return path in self.graph

    def __len__(self):
        return self.graph.number_of_nodes()

    def children(self, path):
        return sorted(self.graph.successors(path))

    def route(self, path):
        """Node paths from the root to `path` in the derivation graph."""
        return nx.shortest_path(self.graph, ROOT, path)

    def active(self):
        return [p for p, n in self.nodes.items() if n.status == ACTIVE]

    def marked(self):
        if not self.marks:
            return set()
        return {p for mark in self.marks for p in mark.pair}

    def with_marks(self, marks, unpaired):
        return RelationTree(
            self.spec,
            self.chi,
            self.phi,
            self.depth_cap,
            self.graph.copy(),
            marks=marks,
            unpaired=unpaired,
        )

    def __eq__(self, other):
        if not isinstance(other, RelationTree):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.chi == other.chi
            and self.phi == other.phi
            and self.depth_cap == other.depth_cap
            and self.nodes == other.nodes
            and set(self.graph.edges) == set(other.graph.edges)
            and self.marks == other.marks
            and self.unpaired == other.unpaired
        )

    def __repr__(self):
        return f"RelationTree({len(self)} nodes, depth_cap={self.depth_cap})"


def _seed_factor(value, spec, role):
    if isinstance(value, Expr):
        e = normalize(value)
        if not e.terms:
            raise SeedDegenerate(f"{role} is the zero expression")
        if len(e.terms) != 1 or len(e.terms[0].factors) != 1 or e.terms[0].coeff != 1:
            raise ValidationError(f"{role} must be a single symbol, got {render(e)}")
        value = e.terms[0].factors[0]
    if isinstance(value, GenSymbol):
        value = Factor(value)
    if not isinstance(value, Factor):
        raise ValidationError(f"{role} must be a GenSymbol, Factor or Expr")
    base = value.base
    if len(base.degree) != spec.arity:
        raise DegreeMismatch(
            f"{role} has degree {base.degree} but the spec has arity {spec.arity}"
        )
    if not base.params:
        params = [
            Param(f"{base.name}_{k}_{j}", component=k)
            for k, d in enumerate(base.degree)
            for j in range(max(0, d))
        ]
        value = Factor(base.with_params(params), value.delta_applied)
    return value


def _alpha_symbol(name, alpha, ov, partner, letter, spec):
    lists = factor_param_lists(partner, spec)
    params = []
    for k in range(len(alpha)):
        fresh = [
            Param(f"{name}_{k}_{j}", component=k) for j in range(alpha[k] - ov[k])
        ]
        partner_k = list(lists[k])
        if letter == "R":
            shared = partner_k[len(partner_k) - ov[k] :]
            params += shared + fresh
        else:
            shared = partner_k[: ov[k]]
            params += fresh + shared
    return GenSymbol(name, alpha, tuple(params))


def _relation_text(lhs, rhs):
    return f"{render(lhs)} = {render(rhs)}"


def _consequence(lhs_raw, rhs_raw, spec):
    dl, dr = leibniz(lhs_raw, spec), leibniz(rhs_raw, spec)
    consequence = (normalize(dl), normalize(dr))
    status = COLLAPSED if normalize(dl - dr).is_zero() else ACTIVE
    return consequence, _relation_text(dl, dr), status


def _root(spec, chi, phi):
    x = phi
    y = Factor(chi.base, True)
    if chi.delta_applied:
        lhs_raw = Expr()
    else:
        lhs_raw = Expr.symbol(x) * Expr.symbol(y)
    lhs = normalize(lhs_raw)
    node = RelationNode(
        path=PathLabel(ROOT),
        role="orthogonality",
        status=ACTIVE,
        left=x,
        right=y,
        relation=(lhs, Expr()),
        display=_relation_text(lhs_raw, Expr()),
    )
    if lhs.is_zero():
        return replace(node, status=COLLAPSED)
    consequence, text, status = _consequence(lhs_raw, Expr(), spec)
    return replace(
        node,
        consequence=consequence,
        consequence_display=text,
        consequence_status=status,
    )


def _branch(spec, path, kind, x, y, overlaps):
    letter = path[-1]
    shift = spec.shift
    outer = factor_degree(y, spec) - shift
    inner = factor_degree(x, spec)
    if kind in (CompatKind.RRseq, CompatKind.LLseq):
        inner = inner - shift
    lattice = tuple(overlap_lattice(spec, kind, outer, inner))
    record = CompatRecord(kind=kind, outer=outer, inner=inner, lattice=lattice)
    node = RelationNode(
        path=PathLabel(path),
        role="branch",
        status=PRUNED,
        left=x,
        right=y,
        compat=record,
    )
    if not lattice:
        return replace(
            node,
            violation=(
                f"{relation_text(kind)} has no admissible (alpha, ov) "
                f"for outer={outer}, inner={inner}"
            ),
        )

    alpha, ov = lattice[0]
    if path in overlaps:
        wanted = OverlapRecord.of(overlaps[path]).degree
        choices = [pair for pair in lattice if pair[1] == wanted]
        if not choices:
            raise ValidationError(
                f"overlap {wanted} is not admissible at {path}; "
                f"choose from {[str(o) for _, o in lattice]}"
            )
        alpha, ov = choices[0]

    partner = x if letter == "R" else y
    name = f"alpha_{len(path)}_{path}"
    symbol = _alpha_symbol(name, alpha, ov, partner, letter, spec)
    a = Expr.symbol(symbol)
    if letter == "R":
        lhs_raw, rhs_raw = Expr.symbol(y), Expr.symbol(x) * a
    else:
        lhs_raw, rhs_raw = Expr.symbol(x), a * Expr.symbol(y)
    if not check_compat(spec, kind, outer, inner, alpha, ov):
        raise ContlieError(f"lattice point {alpha}, {ov} fails {relation_text(kind)}")

    record = replace(record, alpha=alpha, overlap=OverlapRecord.of(tuple(ov)))
    relation = (normalize(lhs_raw), normalize(rhs_raw))
    consequence, text, cstatus = _consequence(lhs_raw, rhs_raw, spec)
    status = COLLAPSED if normalize(lhs_raw - rhs_raw).is_zero() else ACTIVE
    return replace(
        node,
        status=status,
        introduced=symbol,
        relation=relation,
        display=_relation_text(lhs_raw, rhs_raw),
        consequence=consequence,
        consequence_display=text,
        consequence_status=cstatus,
        compat=record,
    )


def _orthogonal_pair(node):
    """The orthogonal pair stated by the consequence of a deep branch node."""
    dalpha = Factor(node.introduced, True)
    if node.letter == "R":
        return node.left, dalpha
    return dalpha, node.right


def derive_tree(spec, chi, phi, depth_cap=6, overlaps=None):
    """Derive the tree of relations seeded by ``phi . d chi = 0``.

    Parameters
    ----------
    spec : ComplexSpec
        The signature; its differential is kept formal.
    chi, phi : GenSymbol, Factor or Expr
        The seed symbols. Symbols without parameters get one parameter per
        degree unit.
    depth_cap : int, optional
        Deepest path length generated, by default 6.
    overlaps : dict, optional
        Map from path to the overlap to use there. Unlisted paths use the
        smallest admissible alpha.

    Returns
    -------
    RelationTree

    Raises
    ------
    SeedDegenerate
        If `chi` or `phi` is the zero expression.
    ValidationError
        If `depth_cap` < 1 or a requested overlap is not admissible.

    Examples
    --------
    >>> from contlie import CHAIN, GenSymbol, derive_tree
    >>> tree = derive_tree(CHAIN, GenSymbol("chi", 1), GenSymbol("phi", 1), depth_cap=1)
    >>> tree.paths
    ['', 'L', 'R']
    >>> tree.node("R").display
    'd chi = phi . alpha_1_R'

    """
    if isinstance(depth_cap, bool) or not isinstance(depth_cap, int) or depth_cap < 1:
        raise ValidationError(f"depth_cap must be an integer >= 1, got {depth_cap!r}")
    spec = spec.formal()
    overlaps = {} if overlaps is None else dict(overlaps)
    chi = _seed_factor(chi, spec, "chi")
    phi = _seed_factor(phi, spec, "phi")

    graph = nx.DiGraph()
    root = _root(spec, chi, phi)
    graph.add_node(ROOT, node=root)

    queue = deque()
    if root.status == ACTIVE:
        queue.append((ROOT, root.left, root.right, "", (CompatKind.L1, CompatKind.R1)))
        if root.consequence_status == ACTIVE and depth_cap >= 2:
            dx = Factor(root.left.base, True)
            queue.append((ROOT, dx, root.right, "L", None))

    while queue:
        vertex, x, y, prefix, kinds = queue.popleft()
        if kinds is None:
            # consequence orthogonality: the next letter repeats for the
            # root's consequence, and is free below it
            kinds = (CompatKind.LLseq, CompatKind.RRseq)
        children = []
        for kind in kinds:
            letter = "L" if kind in (CompatKind.L1, CompatKind.LLseq) else "R"
            if vertex == ROOT and prefix:
                path = letter + letter
            else:
                path = vertex + letter
            if len(path) > depth_cap:
                continue
            node = _branch(spec, path, kind, x, y, overlaps)
            graph.add_node(path, node=node)
            graph.add_edge(vertex, path)
            children.append(node)
            if (
                node.status == ACTIVE
                and node.depth >= 2
                and node.consequence_status == ACTIVE
                and node.depth < depth_cap
            ):
                nx_, ny_ = _orthogonal_pair(node)
                queue.append((path, nx_, ny_, "", None))

        if len(children) == 2 and all(c.status == ACTIVE for c in children):
            flag = f"both-branches({children[0].path},{children[1].path})"
            parent = graph.nodes[vertex]["node"]
            graph.nodes[vertex]["node"] = replace(parent, flags=parent.flags + (flag,))
            warn(
                f"Both branches are satisfiable at vertex "
                f"{PathLabel(vertex).label()}: {children[0].path} and "
                f"{children[1].path}"
            )

    for path in graph.nodes:
        node = graph.nodes[path]["node"]
        if node.status == ACTIVE and node.relation is not None and path != ROOT:
            lhs, rhs = node.relation
            if degree_of(lhs, spec) != degree_of(rhs, spec):
                raise ContlieError(f"relation at {path} is not homogeneous")

    return RelationTree(spec, chi, phi, depth_cap, graph)


def render_tree(tree):
    """Text lines describing every node of a tree, root first."""
    lines = []
    for path, node in tree.nodes.items():
        head = f"[{PathLabel(path).label()}] {node.status}"
        if node.compat is not None:
            head += f" {node.compat.kind.value}"
            if node.compat.alpha is not None:
                head += (
                    f" alpha={node.compat.alpha} ov={node.compat.overlap.degree}"
                    f" lattice={len(node.compat.lattice)}"
                )
        if node.flags:
            head += " " + " ".join(node.flags)
        lines.append(head)
        if node.relation is not None:
            lines.append(f"    {node.display}")
        if node.violation:
            lines.append(f"    violates {node.violation}")
        if node.consequence is not None:
            tag = "" if node.consequence_status == ACTIVE else f"  [{node.consequence_status}]"
            lines.append(f"    => {node.consequence_display}{tag}")
    if tree.marks:
        for mark in tree.marks:
            lines.append(f"dependent {mark.pair[0]} ~ {mark.pair[1]} ({mark.kind})")
    if tree.unpaired:
        lines.append("unpaired " + ", ".join(tree.unpaired))
    return lines
