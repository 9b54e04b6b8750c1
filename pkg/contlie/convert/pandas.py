"""Methods for converting trees, kernels and check reports to pandas DataFrames."""

import pandas as pd

from ..utils import format_sympy

__all__ = ["to_relation_dataframe", "to_kernel_dataframe", "to_check_dataframe"]


def to_relation_dataframe(tree):
    """One row per node of a relation tree, root first.

    Parameters
    ----------
    tree : RelationTree

    Returns
    -------
    pandas.DataFrame
        Columns "path", "role", "status", "kind", "alpha", "overlap",
        "relation", "consequence" and "flags".

    """
    rows = []
    for path, node in tree.nodes.items():
        compat = node.compat
        rows.append(
            {
                "path": path or "root",
                "role": node.role,
                "status": node.status,
                "kind": "" if compat is None else compat.kind.value,
                "alpha": "" if compat is None or compat.alpha is None else str(compat.alpha),
                "overlap": ""
                if compat is None or compat.overlap is None
                else str(compat.overlap.degree),
                "relation": node.display or (node.violation or ""),
                "consequence": node.consequence_display,
                "flags": " ".join(node.flags),
            }
        )
    columns = [
        "path",
        "role",
        "status",
        "kind",
        "alpha",
        "overlap",
        "relation",
        "consequence",
        "flags",
    ]
    return pd.DataFrame(rows, columns=columns)


def to_kernel_dataframe(p):
    """One row per kernel of a presentation."""
    rows = []
    for k in p.kernels:
        rows.append(
            {
                "kernel": k.name,
                "rule": k.rule,
                "shared": "" if k.shared is None else format_sympy(k.shared),
                "output": "" if k.output is None else format_sympy(k.output),
                "shape": "" if k.tensor is None else "x".join(map(str, k.tensor.shape)),
            }
        )
    return pd.DataFrame(rows, columns=["kernel", "rule", "shared", "output", "shape"])


def to_check_dataframe(report):
    """The rows of a check report as a DataFrame.

    Works with any report exposing `rows`, either as a list or a method.

    """
    rows = report.rows() if callable(report.rows) else report.rows
    return pd.DataFrame(rows)
