"""Marking of dependent branch pairs and selection of independent paths."""

from dataclasses import dataclass
from warnings import warn

from .tree import ACTIVE, ROOT

__all__ = ["DependencyMark", "mark_dependence", "independent_paths"]


@dataclass(frozen=True)
class DependencyMark:
    """Two active nodes related by a conjugation.

    `kind` is "conjugation-phi" for the depth-one pair ``(L, R)`` and
    "conjugation-dchi" for a pair ``(LL..., RR...)`` below the root's
    consequence.

    """

    pair: tuple
    kind: str


def mark_dependence(tree):
    """Return a copy of `tree` with dependent pairs of active nodes marked.

    Active nodes left uncovered at a depth that holds a mark, or holds two
    or more active nodes, are recorded in `unpaired` with a warning.

    Parameters
    ----------
    tree : RelationTree

    Returns
    -------
    RelationTree

    """
    nodes = tree.nodes
    active = {p for p, n in nodes.items() if n.status == ACTIVE and p != ROOT}
    marks = []
    if "L" in active and "R" in active:
        marks.append(DependencyMark(("L", "R"), "conjugation-phi"))
    for p in sorted(active):
        if p.startswith("LL"):
            partner = "RR" + p[2:]
            if partner in active:
                marks.append(DependencyMark((p, partner), "conjugation-dchi"))

    covered = {p for m in marks for p in m.pair}
    marked_depths = {len(p) for p in covered}
    by_depth = {}
    for p in active:
        by_depth.setdefault(len(p), []).append(p)

    unpaired = []
    for depth, paths in sorted(by_depth.items()):
        if depth in marked_depths or len(paths) >= 2:
            unpaired += sorted(p for p in paths if p not in covered)
    if unpaired:
        warn(f"Active nodes without a conjugate partner: {', '.join(unpaired)}")
    return tree.with_marks(marks, unpaired)


def independent_paths(tree):
    """Labels of the active leaves reachable without crossing a marked node.

    The tree is marked first if it has not been. A root without active
    descendants is itself a leaf and is returned as the empty label.

    Parameters
    ----------
    tree : RelationTree

    Returns
    -------
    list of str
        Sorted path labels; empty if the root is not active.

    """
    if tree.marks is None:
        tree = mark_dependence(tree)
    nodes = tree.nodes
    if nodes[ROOT].status != ACTIVE:
        return []
    marked = tree.marked()
    leaves = []
    for p, node in nodes.items():
        if node.status != ACTIVE:
            continue
        if any(nodes[c].status == ACTIVE for c in tree.children(p)):
            continue
        route = tree.route(p)
        if any(q in marked for q in route if q != ROOT):
            continue
        leaves.append(p)
    return sorted(leaves)
