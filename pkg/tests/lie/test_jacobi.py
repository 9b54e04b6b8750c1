import numpy as np
import pytest
import sympy as sp

import contlie as cl
from contlie.exception import DimensionMismatch, ValidationError


def test_graded_triples():
    triples = cl.graded_triples()
    assert len(triples) == 13
    assert (0, 0, 0) in triples
    assert (1, -1, 0) in triples
    assert (1, 1, 0) not in triples
    assert (1, 0, 1) not in triples


def test_sl2_passes(E8, sl2):
    report = cl.check_jacobi_numeric(E8, sl2, nsamples=50, seed=3)
    assert report.passed
    assert report.max_residual < 1e-12
    assert report.seed == 3
    assert report.nsamples == 50
    assert {"jac1[+1]", "jac1[-1]", "jac1[0]", "cyclic(0,0,0)", "cyclic(+1,-1,0)"} <= set(
        report.residuals
    )
    assert len(report.residuals) == 3 + 13


def test_perturbed_kernel_fails(E8):
    half = cl.check_jacobi_numeric(E8, cl.sl2_kernels(E8, epsilon=0.5), seed=1)
    one = cl.check_jacobi_numeric(E8, cl.sl2_kernels(E8, epsilon=1.0), seed=1)
    assert not half.passed
    assert half.residuals["jac1[+1]"] < 1e-12
    assert half.residuals["jac1[0]"] > 1e-3
    assert half.residuals["cyclic(+1,-1,0)"] > 1e-3
    # the residual is linear in the perturbation
    assert one.residuals["jac1[0]"] == pytest.approx(2 * half.residuals["jac1[0]"], rel=1e-9)


def test_zero_kernels_pass(E8):
    assert cl.check_jacobi_numeric(E8, cl.zero_kernels(E8)).max_residual == 0.0


def test_numeric_deterministic(E8):
    kernels = cl.sl2_kernels(E8, epsilon=0.1)
    r1 = cl.check_jacobi_numeric(E8, kernels, seed=7)
    r2 = cl.check_jacobi_numeric(E8, kernels, seed=7)
    assert r1.residuals == r2.residuals
    assert cl.check_jacobi_numeric(E8, kernels, seed=-1).seed >= 0


def test_numeric_rows(E8, sl2):
    rows = cl.check_jacobi_numeric(E8, sl2).rows()
    assert rows[0]["relation"] == "jac1[+1]"
    assert set(rows[0]) == {"relation", "max_residual"}


def test_numeric_errors(E8, sl2):
    with pytest.raises(ValidationError):
        cl.check_jacobi_numeric(E8, sl2, tol=0)
    bad = dict(sl2)
    bad["K_{+1}"] = cl.Kernel("K_{+1}", "numeric-bilinear", tensor=np.zeros((3, 3, 3)))
    with pytest.raises(DimensionMismatch):
        cl.check_jacobi_numeric(E8, bad)
    bad["K_{+1}"] = cl.Kernel("K_{+1}", "tuple-merge", shared=0)
    with pytest.raises(ValidationError):
        cl.check_jacobi_numeric(E8, bad)


def test_custom_grades(E8, sl2):
    grades = dict(cl.PRINCIPAL_GRADES)
    del grades["K_{0}"]
    report = cl.check_jacobi_numeric(E8, sl2, grades=grades)
    # without [X+1, X-1] the mixed relation loses its only nonzero terms
    assert report.residuals["jac1[0]"] < 1e-12


def test_symbolic_trivial_triple(gv):
    triple = [("X+", ("h1",)), ("X+", ("h1",)), ("H", ("h2",))]
    report = cl.check_jacobi_symbolic(gv, [triple])
    assert report.passed
    (result,) = report.results
    assert result.admissible
    assert result.zero
    assert result.text() == "X+(h1), X+(h1), H(h2)"


def test_symbolic_unresolved(gv):
    triple = [("X+", ("h1",)), ("X+", ("h2",)), ("H", ("h3",))]
    report = cl.check_jacobi_symbolic(gv, [triple])
    (result,) = report.results
    assert "[X+, X+]" in result.unresolved
    assert not result.admissible
    assert not result.zero
    assert report.admissible == []


def test_admissible_triples(gv):
    triples = cl.admissible_triples(gv, count=50, seed=0)
    assert len(triples) == 50
    assert len({tuple(t.key() for t in triple) for triple in triples}) == len(triples)
    report = cl.check_jacobi_symbolic(gv, triples)
    assert report.passed
    assert len(report.admissible) == len(triples)
    assert cl.admissible_triples(gv, count=50, seed=0) == triples


def test_admissible_triples_repeat_an_atom(gv):
    for triple in cl.admissible_triples(gv, count=50, seed=4):
        assert len({atom.key() for atom in triple}) < 3


def test_distinct_triples_unresolved(gv):
    triples = cl.distinct_triples(gv, count=30, seed=0)
    assert len(triples) == 30
    for triple in triples:
        assert len({atom.key() for atom in triple}) == 3
    report = cl.check_jacobi_symbolic(gv, triples)
    # every pairwise distinct triple needs a bracket the table does not hold
    assert len(report.unresolved) == 30
    assert report.admissible == []
    assert cl.distinct_triples(gv, count=30, seed=0) == triples


def test_admissible_triples_with_overlap():
    p = cl.godbillon_vey(cl.CECH_DE_RHAM, 2, 1, overlap=(1, 0))
    triples = cl.admissible_triples(p, count=10, seed=2)
    assert triples
    assert cl.check_jacobi_symbolic(p, triples).passed


def test_broken_kernel_leaves_defects():
    n, r = sp.symbols("n r")
    p = cl.godbillon_vey(cl.CECH_DE_RHAM, 2, 1, overlap=(1, 0))
    broken = cl.with_kernel(
        p, cl.Kernel("K_{+1,0}", "tuple-merge", shared=r - 1, output=n + 1)
    )
    triple = [("X+", ("h1", "h2")), ("X+", ("h1", "h2")), ("H", ("h2", "h3"))]

    assert cl.check_jacobi_symbolic(p, [triple]).passed
    report = cl.check_jacobi_symbolic(broken, [triple])
    assert not report.passed
    (result,) = report.results
    assert len(result.defects) == 2
    assert not result.admissible
    assert report.rows()[0]["residual"] != "0"


def test_symbolic_rejects_pairs(gv):
    with pytest.raises(ValidationError):
        cl.check_jacobi_symbolic(gv, [[("X+", ("h1",)), ("H", ("h2",))]])


def test_wrong_output_length_fails_sampled_triples():
    n, r = sp.symbols("n r")
    p = cl.godbillon_vey(cl.CECH_DE_RHAM, 2, 1, overlap=(1, 0))
    wrong = cl.with_kernel(
        p, cl.Kernel("K_{+1,0}", "tuple-merge", shared=r, output=n + 2)
    )
    triples = cl.admissible_triples(p, count=50, seed=0)
    assert cl.check_jacobi_symbolic(p, triples).passed

    report = cl.check_jacobi_symbolic(wrong, triples)
    assert not report.passed
    assert len(report.admissible) < len(triples)
    for result in report.results:
        if not result.admissible:
            assert {"X+", "H"} <= {atom.generator for atom in result.triple}
            assert "declares 4" in result.defects[0]


@pytest.mark.parametrize("lam", [1, 2])
def test_residual_scales_quadratically(E8, lam):
    kernels = cl.sl2_kernels(E8, epsilon=0.5)
    base = cl.check_jacobi_numeric(E8, kernels, seed=5)
    scaled = {name: k.scaled(lam) for name, k in kernels.items()}
    report = cl.check_jacobi_numeric(E8, scaled, seed=5)
    assert set(report.residuals) == set(base.residuals)
    for name, value in base.residuals.items():
        assert report.residuals[name] == pytest.approx(lam**2 * value, rel=1e-9, abs=1e-12)
    assert report.max_residual == pytest.approx(lam**2 * base.max_residual, rel=1e-9)
