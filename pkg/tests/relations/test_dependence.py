import warnings
from itertools import product

import networkx as nx
import pytest

import contlie as cl


def test_mark_chain_tree(chain_tree):
    marked = cl.mark_dependence(chain_tree)
    assert marked.marks == ()
    assert marked.unpaired == ()
    assert marked.marked() == set()
    # the input tree is left unmarked
    assert chain_tree.marks is None


def test_independent_paths(chain_tree, gv_tree, generic_tree):
    assert cl.independent_paths(chain_tree) == ["R"]
    assert cl.independent_paths(gv_tree) == ["R"]
    assert cl.independent_paths(generic_tree) == [""]


def test_conjugation_dchi(chi1, phi1):
    with pytest.warns(UserWarning):
        tree = cl.derive_tree(cl.CHAIN, chi1, phi1, depth_cap=2)
    marked = cl.mark_dependence(tree)
    assert marked.marks == (cl.DependencyMark(("LL", "RR"), "conjugation-dchi"),)
    assert marked.marked() == {"LL", "RR"}
    assert cl.independent_paths(marked) == ["R"]


def test_conjugation_phi():
    # chi in C^0 and phi in C^1 admit both depth-one branches
    chi = cl.GenSymbol("chi", 0)
    phi = cl.GenSymbol("phi", 1)
    with pytest.warns(UserWarning, match="Both branches"):
        tree = cl.derive_tree(cl.CHAIN, chi, phi, depth_cap=1)
    assert tree.node("L").status == cl.ACTIVE
    assert tree.node("R").status == cl.ACTIVE

    marked = cl.mark_dependence(tree)
    assert cl.DependencyMark(("L", "R"), "conjugation-phi") in marked.marks
    assert cl.independent_paths(marked) == []


def test_collapsed_root_has_no_paths(chi1, phi1):
    tree = cl.derive_tree(cl.CHAIN, cl.Factor(chi1, True), phi1)
    assert cl.independent_paths(tree) == []


def test_rendered_marks(chi1, phi1):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        tree = cl.mark_dependence(cl.derive_tree(cl.CHAIN, chi1, phi1, depth_cap=2))
    assert "dependent LL ~ RR (conjugation-dchi)" in cl.render_tree(tree)


def brute_force_paths(tree):
    words = [
        "".join(w) for d in range(tree.depth_cap + 1) for w in product("LR", repeat=d)
    ]
    words = [w for w in words if w in tree]
    if tree.node("").status != cl.ACTIVE:
        return []
    marked = tree.marked() - {""}
    kept = []
    for w in words:
        if tree.node(w).status != cl.ACTIVE:
            continue
        if any(
            tree.graph.has_edge(w, v) and tree.node(v).status == cl.ACTIVE
            for v in words
        ):
            continue
        if any(nx.has_path(tree.graph, u, w) for u in marked):
            continue
        kept.append(w)
    return sorted(kept)


def test_independent_paths_match_brute_force(small_trees):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        marked = [cl.mark_dependence(tree) for tree in small_trees]
    for tree in marked:
        assert cl.independent_paths(tree) == brute_force_paths(tree)
    assert any(tree.marks for tree in marked)
    assert any(cl.independent_paths(tree) for tree in marked)
