"""Methods for converting relation trees to and from a standardized dictionary."""

import networkx as nx
import sympy as sp

from ..complexes.compat import CompatKind, OverlapRecord
from ..complexes.spec import parse_spec, serialize_spec
from ..core.expr import Expr, Term
from ..core.symbols import Degree, Factor, GenSymbol, HolonomyWord, Param
from ..exception import ValidationError
from ..relations.dependence import DependencyMark
from ..relations.tree import CompatRecord, PathLabel, RelationNode, RelationTree

__all__ = [
    "to_tree_dict",
    "from_tree_dict",
    "param_to_dict",
    "param_from_dict",
    "factor_to_dict",
    "factor_from_dict",
    "expr_to_dict",
    "expr_from_dict",
]


def param_to_dict(p):
    if isinstance(p, HolonomyWord):
        return {"word": [param_to_dict(h) for h in p.composition]}
    return {"name": p.name, "kind": p.kind, "component": p.component}


def param_from_dict(d):
    if "word" in d:
        return HolonomyWord(tuple(param_from_dict(h) for h in d["word"]))
    return Param(d["name"], d.get("kind", "generic"), d.get("component", 0))


def _symbol_to_dict(s):
    return {
        "name": s.name,
        "degree": list(s.degree),
        "params": [param_to_dict(p) for p in s.params],
        "pullbacks": [param_to_dict(p) for p in s.pullbacks],
        "dmark": s.dmark,
    }


def _symbol_from_dict(d):
    return GenSymbol(
        d["name"],
        tuple(d["degree"]),
        tuple(param_from_dict(p) for p in d.get("params", [])),
        tuple(param_from_dict(p) for p in d.get("pullbacks", [])),
        d.get("dmark", False),
    )


def factor_to_dict(f):
    data = _symbol_to_dict(f.base)
    data["delta"] = f.delta_applied
    return data


def factor_from_dict(d):
    return Factor(_symbol_from_dict(d), d.get("delta", False))


def expr_to_dict(e):
    """A JSON-ready list of terms; coefficients are written as ``"p/q"`` text."""
    return [
        {
            "coeff": str(t.coeff),
            "factors": [factor_to_dict(f) for f in t.factors],
            "frame": None if t.frame is None else list(t.frame),
        }
        for t in e.terms
    ]


def expr_from_dict(data):
    return Expr(
        Term(
            sp.Rational(t["coeff"]),
            tuple(factor_from_dict(f) for f in t["factors"]),
            None if t.get("frame") is None else Degree(tuple(t["frame"])),
        )
        for t in data
    )


def _degree(d):
    return None if d is None else list(d)


def _compat_to_dict(c):
    if c is None:
        return None
    return {
        "kind": c.kind.value,
        "outer": list(c.outer),
        "inner": list(c.inner),
        "lattice": [[list(a), list(o)] for a, o in c.lattice],
        "alpha": _degree(c.alpha),
        "overlap": None if c.overlap is None else list(c.overlap.degree),
    }


def _compat_from_dict(d):
    if d is None:
        return None
    return CompatRecord(
        kind=CompatKind(d["kind"]),
        outer=Degree(tuple(d["outer"])),
        inner=Degree(tuple(d["inner"])),
        lattice=tuple((Degree(tuple(a)), Degree(tuple(o))) for a, o in d["lattice"]),
        alpha=None if d["alpha"] is None else Degree(tuple(d["alpha"])),
        overlap=None if d["overlap"] is None else OverlapRecord.of(d["overlap"]),
    )


def _pair(pair):
    return None if pair is None else [expr_to_dict(pair[0]), expr_to_dict(pair[1])]


def _pair_from(data):
    return None if data is None else (expr_from_dict(data[0]), expr_from_dict(data[1]))


def _node_to_dict(node):
    return {
        "path": str(node.path),
        "role": node.role,
        "status": node.status,
        "left": factor_to_dict(node.left),
        "right": factor_to_dict(node.right),
        "introduced": None
        if node.introduced is None
        else _symbol_to_dict(node.introduced),
        "relation": _pair(node.relation),
        "display": node.display,
        "consequence": _pair(node.consequence),
        "consequence-display": node.consequence_display,
        "consequence-status": node.consequence_status,
        "compat": _compat_to_dict(node.compat),
        "violation": node.violation,
        "flags": list(node.flags),
    }


def _node_from_dict(d):
    return RelationNode(
        path=PathLabel(d["path"]),
        role=d["role"],
        status=d["status"],
        left=factor_from_dict(d["left"]),
        right=factor_from_dict(d["right"]),
        introduced=None if d["introduced"] is None else _symbol_from_dict(d["introduced"]),
        relation=_pair_from(d["relation"]),
        display=d["display"],
        consequence=_pair_from(d["consequence"]),
        consequence_display=d["consequence-display"],
        consequence_status=d["consequence-status"],
        compat=_compat_from_dict(d["compat"]),
        violation=d["violation"],
        flags=tuple(d["flags"]),
    )


def to_tree_dict(tree):
    """Convert a relation tree to a JSON-ready dictionary.

    Parameters
    ----------
    tree : RelationTree

    Returns
    -------
    dict
        With keys "type", "spec" (the canonical spec document), "chi",
        "phi", "depth-cap", "nodes", "edges", "marks" and "unpaired".

    See Also
    --------
    from_tree_dict
    ~contlie.readwrite.json.write_tree_json

    """
    return {
        "type": "relation-tree",
        "spec": serialize_spec(tree.spec),
        "chi": factor_to_dict(tree.chi),
        "phi": factor_to_dict(tree.phi),
        "depth-cap": tree.depth_cap,
        "nodes": [_node_to_dict(tree.node(p)) for p in tree.paths],
        "edges": [[u, v] for u, v in sorted(tree.graph.edges)],
        "marks": None
        if tree.marks is None
        else [{"pair": list(m.pair), "kind": m.kind} for m in tree.marks],
        "unpaired": list(tree.unpaired),
    }


def from_tree_dict(data):
    """Rebuild a relation tree from :func:`to_tree_dict` output.

    Raises
    ------
    ValidationError
        If the dictionary is not a relation-tree document.

    """
    if data.get("type") != "relation-tree":
        raise ValidationError("Not a relation-tree document")
    try:
        graph = nx.DiGraph()
        for d in data["nodes"]:
            node = _node_from_dict(d)
            graph.add_node(str(node.path), node=node)
        graph.add_edges_from((u, v) for u, v in data["edges"])
        marks = data["marks"]
        if marks is not None:
            marks = [DependencyMark(tuple(m["pair"]), m["kind"]) for m in marks]
        return RelationTree(
            parse_spec(data["spec"]),
            factor_from_dict(data["chi"]),
            factor_from_dict(data["phi"]),
            data["depth-cap"],
            graph,
            marks=marks,
            unpaired=data["unpaired"],
        )
    except KeyError as e:
        raise ValidationError(f"Relation-tree document is missing {e}") from e
