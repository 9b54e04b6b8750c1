"""Read from and write to JSON."""

import json

from ..convert import (
    from_presentation_dict,
    from_tree_dict,
    to_presentation_dict,
    to_tree_dict,
)
from ..exception import ParseError

__all__ = [
    "write_tree_json",
    "read_tree_json",
    "write_presentation_json",
    "read_presentation_json",
    "load_json",
]


def load_json(text):
    """Parse a JSON document, reporting syntax errors as ParseError."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e


def write_tree_json(tree, path):
    """Write a relation tree to a UTF-8 JSON file.

    Parameters
    ----------
    tree : RelationTree
    path : str

    See Also
    --------
    read_tree_json

    """
    datastring = json.dumps(to_tree_dict(tree), indent=2)
    with open(path, "w", encoding="utf-8") as output_file:
        output_file.write(datastring)


def read_tree_json(path):
    """Read a relation tree written by :func:`write_tree_json`.

    Raises
    ------
    ParseError
        If the file is not valid JSON.
    ValidationError
        If the JSON is not a relation-tree document.

    """
    with open(path, encoding="utf-8") as file:
        return from_tree_dict(load_json(file.read()))


def write_presentation_json(p, path):
    """Write a presentation to a UTF-8 JSON file."""
    datastring = json.dumps(to_presentation_dict(p), indent=2)
    with open(path, "w", encoding="utf-8") as output_file:
        output_file.write(datastring)


def read_presentation_json(path):
    """Read a presentation written by :func:`write_presentation_json`."""
    with open(path, encoding="utf-8") as file:
        return from_presentation_dict(load_json(file.read()))
