"""The integrability system of a foliation and its Godbillon–Vey presentation."""

from ..complexes.compat import OverlapRecord
from ..complexes.spec import CECH_DE_RHAM
from ..exception import ValidationError
from ..lie.presentation import extract_presentation
from ..relations.tree import derive_tree
from .cech import cech_form

__all__ = ["derive_gv_tree", "godbillon_vey"]


def derive_gv_tree(spec=CECH_DE_RHAM, chi=None, depth_cap=6, overlap=None):
    """Derive the relation tree of the integrability condition ``chi . d chi = 0``.

    The seed has ``phi = chi``. The left branch has no solution, the
    root's consequence ``d chi . d chi = 0`` collapses, and the right
    branch ``d chi = chi . alpha_1_R`` leaves the two-term consequence
    ``0 = d chi . alpha_1_R + (-1)^n chi . d alpha_1_R``.

    Parameters
    ----------
    spec : ComplexSpec, optional
        By default CECH_DE_RHAM.
    chi : GenSymbol, optional
        The form defining the foliation, by default ``chi`` in ``C^{1,1}``.
    depth_cap : int, optional
        By default 6; the collapse makes any cap >= 1 give the same nodes.
    overlap : OverlapRecord or tuple, optional
        Overlap ``(r, t)`` of alpha_1_R with chi, by default the smallest.

    Returns
    -------
    RelationTree

    Raises
    ------
    SeedDegenerate
        If `chi` is the zero expression.

    Examples
    --------
    >>> from contlie import derive_gv_tree
    >>> tree = derive_gv_tree()
    >>> [(path, tree.node(path).status) for path in tree.paths]
    [('', 'active'), ('L', 'pruned'), ('R', 'active')]

    """
    if chi is None:
        chi = cech_form("chi", 1, 1)
    overlaps = None if overlap is None else {"R": OverlapRecord.of(overlap)}
    return derive_tree(spec, chi, chi, depth_cap=depth_cap, overlaps=overlaps)


def godbillon_vey(spec=CECH_DE_RHAM, n=1, m=1, overlap=None):
    """The continual Lie algebra of a codimension-one type integrability system.

    Generators ``X+ = chi``, ``X- = d chi``, ``H = alpha_1_R`` and
    ``H* = d alpha_1_R`` with grades +1, -1, 0, 0. The table holds
    ``[X+, X-] = 0``, ``[X+, H] = X-(K_{+1,0})`` and the mixed constraint
    ``[X-, H] + (-1)^n [X+, H*] = 0``.

    Parameters
    ----------
    spec : ComplexSpec, optional
        By default CECH_DE_RHAM.
    n, m : int, optional
        Bidegree of chi, by default (1, 1). The table does not depend on m.
    overlap : OverlapRecord or tuple, optional
        Overlap ``(r, t)`` of H with X+, by default ``(0, 0)``.

    Returns
    -------
    LiePresentation

    Examples
    --------
    >>> from contlie import godbillon_vey, render_presentation
    >>> for line in render_presentation(godbillon_vey())[5:]:
    ...     print(line)
    brackets (non-principal grading):
      [X+(h_1..h_n), X-(h_1..h_{n+1})] = 0
      [X+(h_1..h_n), H(h_1..h_{r+1})] = X-(K_{+1,0}(h_1..h_n, h_1..h_{r+1}))
      [X-(h_1..h_{n+1}), H(h_1..h_{r+1})] + (-1)^n [X+(h_1..h_n), H*(h_1..h_{r+2})] = 0
    note: Godbillon-Vey class [alpha_1_R . d alpha_1_R]

    """
    if n < 0 or m < 0:
        raise ValidationError(f"n and m must be nonnegative, got ({n}, {m})")
    if spec.arity != 2:
        raise ValidationError("The integrability system lives in a bicomplex")
    tree = derive_gv_tree(spec, cech_form("chi", n, m), overlap=overlap)
    return extract_presentation(tree)
