import pytest

import contlie as cl


def test_law_symbols():
    chain = cl.law_symbols(cl.CHAIN)
    assert [s.name for s in chain] == ["A", "B", "C", "D"]
    assert all(len(s.degree) == 1 for s in chain)
    assert all(len(s.degree) == 2 for s in cl.law_symbols(cl.CECH_DE_RHAM))


def test_chain_laws():
    report = cl.dga_law_suite(cl.CHAIN, max_symbols=3, nsamples=20, seed=1)
    assert report.passed
    assert report.examples == []
    assert all(report.checked[law] > 0 for law in report.checked)


@pytest.mark.parametrize(
    "spec",
    [
        cl.CECH_DE_RHAM,
        cl.ComplexSpec(2, sign="total-degree"),
        cl.ComplexSpec(1, sign="shifted-total"),
        cl.ComplexSpec(1, shift=(2,)),
    ],
)
def test_laws_other_signatures(spec):
    report = cl.dga_law_suite(spec, max_symbols=2, nsamples=10)
    assert report.passed


def test_law_rows():
    report = cl.dga_law_suite(None, max_symbols=2, nsamples=5)
    rows = report.rows()
    assert [row["check"] for row in rows] == list(report.checked)
    assert {"check", "cases", "failures"} == set(rows[0])
    assert all(row["failures"] == 0 for row in rows)


def test_record_failure():
    report = cl.LawReport()
    report.record("leibniz", False, "x")
    assert not report.passed
    assert report.failed["leibniz"] == 1
    assert report.examples == [("leibniz", "x")]


@pytest.mark.slow
def test_default_suite():
    assert cl.dga_law_suite(cl.CHAIN).passed
