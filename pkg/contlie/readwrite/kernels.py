"""Read and write numeric kernel files."""

import json

from ..convert import kernel_from_dict, kernel_to_dict
from ..exception import DimensionMismatch, ValidationError
from ..lie.algebra import DiscreteE
from .json import load_json

__all__ = ["write_kernels", "read_kernels"]


def write_kernels(E, kernels, path):
    """Write kernels over `E` to a UTF-8 JSON file.

    The document holds the dimension and, per kernel, its name, rule,
    shape and the tensor flattened in row-major order.

    Parameters
    ----------
    E : DiscreteE
    kernels : dict
        Kernel name to Kernel.
    path : str

    """
    data = {
        "dimension": E.dimension,
        "kernels": [kernel_to_dict(kernels[name]) for name in sorted(kernels)],
    }
    with open(path, "w", encoding="utf-8") as output_file:
        output_file.write(json.dumps(data, indent=2))


def read_kernels(path):
    """Read a kernel file.

    Returns
    -------
    tuple
        ``(DiscreteE, dict)`` with the pointwise algebra of the file's
        dimension and the kernels by name.

    Raises
    ------
    ParseError
        If the file is not valid JSON.
    ValidationError
        If a required field is missing.
    DimensionMismatch
        If a kernel does not have shape ``(dimension,) * 3``.

    """
    with open(path, encoding="utf-8") as file:
        data = load_json(file.read())
    try:
        E = DiscreteE(data["dimension"])
        kernels = {}
        for entry in data["kernels"]:
            kernel = kernel_from_dict(entry)
            if kernel.tensor is None and kernel.rule == "numeric-bilinear":
                raise ValidationError(f"kernel {kernel.name} has no data")
            kernels[kernel.name] = kernel
    except (KeyError, TypeError) as e:
        raise ValidationError(f"Malformed kernel file: {e}") from e
    for kernel in kernels.values():
        if kernel.tensor is not None and kernel.tensor.shape != (E.dimension,) * 3:
            raise DimensionMismatch(
                f"kernel {kernel.name} has shape {kernel.tensor.shape}, "
                f"expected {(E.dimension,) * 3}"
            )
    return E, kernels
