"""Finite-dimensional commutative algebras standing in for the root space E."""

import numpy as np

from ..exception import DimensionMismatch, ValidationError
from .presentation import Kernel

__all__ = ["DiscreteE", "PRINCIPAL_GRADES", "sl2_kernels", "zero_kernels"]

PRINCIPAL_GRADES = {
    "K_{0,0}": (0, 0),
    "K_{+1}": (0, 1),
    "K_{-1}": (0, -1),
    "K_{0}": (1, -1),
}


class DiscreteE:
    """A commutative associative algebra given by structure constants.

    The product is ``(x y)_k = sum_ij T[i, j, k] x_i y_j``. The default
    table is the pointwise product of functions on a grid of `dimension`
    points.

    Parameters
    ----------
    dimension : int, optional
        By default 8.
    table : array_like, optional
        Structure constants of shape ``(dimension,) * 3``.

    Raises
    ------
    DimensionMismatch
        If `table` does not have shape ``(dimension,) * 3``.
    ValidationError
        If the product is not commutative or not associative.

    Examples
    --------
    >>> import numpy as np
    >>> from contlie import DiscreteE
    >>> E = DiscreteE(3)
    >>> E.product(np.array([[1.0, 2.0, 3.0]]), np.array([[2.0, 2.0, 2.0]]))
    array([[2., 4., 6.]])

    """

    def __init__(self, dimension=8, table=None):
        if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1:
            raise ValidationError(f"dimension must be a positive integer, got {dimension!r}")
        self.dimension = dimension
        if table is None:
            table = np.zeros((dimension,) * 3)
            idx = np.arange(dimension)
            table[idx, idx, idx] = 1.0
        table = np.asarray(table, dtype=float)
        if table.shape != (dimension,) * 3:
            raise DimensionMismatch(
                f"product table has shape {table.shape}, expected {(dimension,) * 3}"
            )
        if not np.array_equal(table, table.transpose(1, 0, 2)):
            raise ValidationError("product table is not commutative")
        left = np.einsum("ijm,mkl->ijkl", table, table)
        right = np.einsum("jkm,iml->ijkl", table, table)
        if not np.array_equal(left, right):
            raise ValidationError("product table is not associative")
        self.table = table

    def product(self, x, y):
        return np.einsum("ijk,ni,nj->nk", self.table, x, y)

    def sample(self, rng, n):
        """`n` elements with entries uniform in [-1, 1]."""
        return rng.uniform(-1.0, 1.0, size=(n, self.dimension))

    def check_kernel(self, kernel):
        if kernel.rule != "numeric-bilinear":
            return
        if kernel.tensor.shape != (self.dimension,) * 3:
            raise DimensionMismatch(
                f"kernel {kernel.name} has shape {kernel.tensor.shape}, "
                f"expected {(self.dimension,) * 3}"
            )

    def __eq__(self, other):
        if not isinstance(other, DiscreteE):
            return NotImplemented
        return self.dimension == other.dimension and np.array_equal(
            self.table, other.table
        )

    def __repr__(self):
        return f"DiscreteE(dimension={self.dimension})"


def sl2_kernels(E, epsilon=0.0):
    """The sl(2)-type kernels over `E`.

    ``K_{0,0} = 0``, ``K_{+1}(f, g) = (2 + epsilon) f g``,
    ``K_{-1}(f, g) = -2 f g`` and ``K_{0}(f, g) = f g``; a nonzero
    `epsilon` perturbs the ``K_{+1}`` kernel away from a Lie algebra.

    Returns
    -------
    dict
        Kernel name to Kernel.

    """
    t = E.table
    return {
        "K_{0,0}": Kernel("K_{0,0}", "numeric-bilinear", tensor=np.zeros_like(t)),
        "K_{+1}": Kernel("K_{+1}", "numeric-bilinear", tensor=(2.0 + epsilon) * t),
        "K_{-1}": Kernel("K_{-1}", "numeric-bilinear", tensor=-2.0 * t),
        "K_{0}": Kernel("K_{0}", "numeric-bilinear", tensor=t.copy()),
    }


def zero_kernels(E):
    """Principal kernels that are all zero."""
    return {
        name: Kernel(name, "numeric-bilinear", tensor=np.zeros((E.dimension,) * 3))
        for name in PRINCIPAL_GRADES
    }
