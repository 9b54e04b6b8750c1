import json
import tempfile

import numpy as np
import pytest

import contlie as cl
from contlie.exception import DimensionMismatch, ParseError, ValidationError


def test_kernels_file(E8, sl2):
    _, filename = tempfile.mkstemp()
    cl.write_kernels(E8, sl2, filename)
    with open(filename) as file:
        data = json.load(file)
    assert data["dimension"] == 8
    assert [k["name"] for k in data["kernels"]] == sorted(sl2)

    E, kernels = cl.read_kernels(filename)
    assert E == E8
    assert kernels == sl2
    assert cl.check_jacobi_numeric(E, kernels).passed


def test_perturbed_kernels_file(E8):
    _, filename = tempfile.mkstemp()
    cl.write_kernels(E8, cl.sl2_kernels(E8, epsilon=0.5), filename)
    E, kernels = cl.read_kernels(filename)
    assert not cl.check_jacobi_numeric(E, kernels).passed


def test_wrong_shape(E8):
    _, filename = tempfile.mkstemp()
    bad = {"K": cl.Kernel("K", "numeric-bilinear", tensor=np.zeros((3, 3, 3)))}
    cl.write_kernels(E8, bad, filename)
    with pytest.raises(DimensionMismatch):
        cl.read_kernels(filename)


@pytest.mark.parametrize(
    "text",
    [
        '{"kernels": []}',
        '{"dimension": 2, "kernels": [{"rule": "zero"}]}',
        '{"dimension": 2, "kernels": [{"name": "K", "rule": "numeric-bilinear"}]}',
        '{"dimension": 2, "kernels": [{"name": "K", "rule": "numeric-bilinear", '
        '"shape": [2, 2, 2], "data": [1, 2]}]}',
    ],
)
def test_malformed_file(text):
    _, filename = tempfile.mkstemp()
    with open(filename, "w") as file:
        file.write(text)
    with pytest.raises(ValidationError):
        cl.read_kernels(filename)


def test_bad_json():
    _, filename = tempfile.mkstemp()
    with open(filename, "w") as file:
        file.write('{"dimension": 8,')
    with pytest.raises(ParseError):
        cl.read_kernels(filename)
