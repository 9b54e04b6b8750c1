"""Methods for converting presentations to and from a standardized dictionary."""

import numpy as np
import sympy as sp

from ..exception import ValidationError
from ..lie.presentation import (
    BracketEntry,
    Generator,
    Kernel,
    LiePresentation,
    MixedConstraint,
    MixedTerm,
)

__all__ = [
    "to_presentation_dict",
    "from_presentation_dict",
    "kernel_to_dict",
    "kernel_from_dict",
]


def _text(value):
    return None if value is None else str(value)


def kernel_to_dict(k):
    data = {
        "name": k.name,
        "rule": k.rule,
        "shared": _text(k.shared),
        "output": _text(k.output),
    }
    if k.tensor is not None:
        data["shape"] = list(k.tensor.shape)
        data["data"] = k.tensor.ravel().tolist()
    return data


def kernel_from_dict(d):
    tensor = None
    if "data" in d:
        tensor = np.asarray(d["data"], dtype=float)
        shape = tuple(d.get("shape", ()))
        if tensor.size != int(np.prod(shape)):
            raise ValidationError(
                f"kernel {d['name']} has {tensor.size} entries for shape {shape}"
            )
        tensor = tensor.reshape(shape)
    return Kernel(
        d["name"],
        d["rule"],
        shared=None if d.get("shared") is None else sp.sympify(d["shared"]),
        output=None if d.get("output") is None else sp.sympify(d["output"]),
        tensor=tensor,
    )


def to_presentation_dict(p):
    """Convert a presentation to a JSON-ready dictionary.

    Arities, shared counts and coefficients are written as sympy text,
    e.g. ``"n + 1"`` or ``"(-1)**n"``.

    See Also
    --------
    from_presentation_dict
    ~contlie.readwrite.json.write_presentation_json

    """
    return {
        "type": "lie-presentation",
        "grading-rule": p.grading_rule,
        "generators": [
            {"name": g.name, "grade": g.grade, "arity": str(g.arity), "source": g.source}
            for g in p.generators
        ],
        "brackets": [
            {"left": e.left, "right": e.right, "kernel": e.kernel, "output": e.output}
            for e in p.brackets
        ],
        "mixed": [
            [
                {"coeff": str(t.coeff), "left": t.left, "right": t.right, "kernel": t.kernel}
                for t in c.terms
            ]
            for c in p.mixed
        ],
        "kernels": [kernel_to_dict(k) for k in p.kernels],
        "bindings": {name: value for name, value in p.bindings},
        "annotations": list(p.annotations),
    }


def from_presentation_dict(data):
    """Rebuild a presentation from :func:`to_presentation_dict` output."""
    if data.get("type") != "lie-presentation":
        raise ValidationError("Not a lie-presentation document")
    try:
        return LiePresentation(
            generators=tuple(
                Generator(g["name"], g["grade"], sp.sympify(g["arity"]), g["source"])
                for g in data["generators"]
            ),
            brackets=tuple(
                BracketEntry(e["left"], e["right"], e["kernel"], e["output"])
                for e in data["brackets"]
            ),
            kernels=tuple(kernel_from_dict(k) for k in data["kernels"]),
            mixed=tuple(
                MixedConstraint(
                    tuple(
                        MixedTerm(sp.sympify(t["coeff"]), t["left"], t["right"], t["kernel"])
                        for t in terms
                    )
                )
                for terms in data["mixed"]
            ),
            grading_rule=data["grading-rule"],
            bindings=tuple(data["bindings"].items()),
            annotations=tuple(data["annotations"]),
        )
    except KeyError as e:
        raise ValidationError(f"Presentation document is missing {e}") from e
