"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``).
"""

import pytest

from itint import acceptance
from itint.evaluator import EvalConfig
from itint.relations import DEFAULT_Z_POINTS

CFG = EvalConfig()


def test_tolerances_are_the_required_ones():
    a = acceptance
    assert (a.DUALITY_TOL, a.SUM_TOL, a.DIFF_TOL, a.FD_STEP) == (1e-6, 1e-6, 1e-4, 1e-5)
    assert (a.MZV_TOL, a.ZETA2_TOL, a.ORACLE_TOL, a.CLOSED_FORM_TOL) == (1e-9, 1e-10, 1e-5, 1e-8)
    assert (a.LIMIT_TOL, a.LEMMA_TOL, a.DUALITY_RUNTIME_LIMIT) == (1e-2, 1e-4, 300.0)
    assert DEFAULT_Z_POINTS == (2, -1, 3 + 2j)
    assert a.LIMIT_POINTS == (10.0, 100.0, 1000.0)
    assert a.LEMMA_CASES == ((3, 2), (4, 2), (4, 3), (5, 3))


def _report(capsys, result):
    worst = max((r.max_residual / r.tolerance for r in result.reports), default=0.0)
    line = (f"criterion {result.number}: {'PASS' if result.passed else 'FAIL'}  "
            f"{result.title}  ({len(result.reports)} checks, worst residual/tol = {worst:.2e})")
    with capsys.disabled():
        print("\n" + line)
    assert result.passed, [r.to_dict() for r in result.failures]


@pytest.mark.parametrize("number", [n for n, _, _ in acceptance.CRITERIA])
def test_criterion(number, capsys):
    _report(capsys, acceptance.run_criterion(number, CFG))


def test_criterion_coverage():
    # the sweeps cover exactly the required parameter ranges
    assert len(acceptance.words_up_to(3)) == 18
    assert len(acceptance.words_up_to(4)) == 54
    duality = acceptance.criterion_duality(CFG)
    assert len(duality) == 54 + 1
    assert all(r.z_points == list(DEFAULT_Z_POINTS) for r in duality[:-1])
    sums = [r for r in acceptance.criterion_sum(CFG) if r.relation_id.startswith("sum/k=")]
    assert {(r.parameters["k"], r.parameters["r"]) for r in sums} == {
        (k, r) for k in range(2, 8) for r in range(1, k + 1)}
    assert all(r.z_points == [2, -1] for r in sums)
