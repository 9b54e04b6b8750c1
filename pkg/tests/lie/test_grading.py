import pytest

import contlie as cl
from contlie.exception import ValidationError


def test_principal_grading(sl2):
    report = cl.grading_check(cl.principal_presentation(sl2))
    assert report.passed
    assert report.checked == 4
    assert report.lines() == ["grading (principal): 4 relations checked, pass"]


def test_gv_grading(gv):
    report = cl.grading_check(gv)
    assert not report.passed
    assert report.checked == 3
    assert report.violations == [
        "[X+, H] -> X-: output grade -1, expected +1",
        "[X-, H] + [X+, H*]: terms have grades -1 and +1",
    ]
    lines = report.lines()
    assert lines[0] == "grading (non-principal): 3 relations checked, 2 violation(s)"
    assert lines[1] == "  [X+, H] -> X-: output grade -1, expected +1"


def test_zero_brackets_are_graded():
    p = cl.LiePresentation(
        generators=(cl.Generator("A", 1), cl.Generator("B", 5)),
        brackets=(cl.BracketEntry("A", "B", "K"),),
        kernels=(cl.Kernel("K", "zero"),),
        grading_rule="spec",
    )
    assert cl.grading_check(p).passed


def test_ungraded_presentation():
    p = cl.LiePresentation(generators=(cl.Generator("A", 0),))
    with pytest.raises(ValidationError):
        cl.grading_check(p)
