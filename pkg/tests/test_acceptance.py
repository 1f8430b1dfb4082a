"""Acceptance criteria, one test per criterion.

Each test runs the corresponding verification suite at its stated
tolerances, asserts every row, checks the runtime budget, and prints one
pass/fail line (visible with ``pytest -s`` or in the captured output).
"""

import time

import pytest

from swapalg.verify import run_suite

BUDGETS = {
    1: 5.0,
    2: 10.0,
    3: 30.0,
    4: 20.0,
    5: 30.0,
    6: 10.0,
    7: 10.0,
    8: 10.0,
    9: 10.0,
    10: 60.0,
}


def _run(number, label, suites, **kwargs):
    start = time.perf_counter()
    reports = [run_suite(name, **kwargs.get(name, {})) for name in suites]
    elapsed = time.perf_counter() - start
    ok = all(report.passed for report in reports)
    within_budget = elapsed < BUDGETS[number]
    status = "PASS" if (ok and within_budget) else "FAIL"
    print(f"criterion {number:2d} ({label}): {status}  [{elapsed:.2f}s]")
    for report in reports:
        if not report.passed:
            print(report.render())
    assert ok, f"criterion {number}: a check failed"
    assert within_budget, (
        f"criterion {number}: runtime {elapsed:.2f}s exceeds {BUDGETS[number]:.0f}s"
    )


def test_criterion_01_linking_axioms():
    _run(1, "linking-form axioms, exhaustive", ["linking-axioms"])


def test_criterion_02_six_point_identities():
    _run(2, "six-point identities, exhaustive", ["six-point"])


def test_criterion_03_jacobi_identity():
    _run(3, "Jacobi identity, 1000 seeded triples", ["jacobi"], jacobi={"seed": 42, "count": 1000})


def test_criterion_04_alpha_independence_and_closure():
    _run(
        4,
        "alpha independence and closure, 500 pairs",
        ["alpha-independence"],
        **{"alpha-independence": {"seed": 42, "count": 500}},
    )


def test_criterion_05_elementary_brackets():
    _run(5, "elementary-function bracket identities", ["braelem", "birelem"])


def test_criterion_06_period_equals_width():
    _run(
        6,
        "period = width, 100 + 20 matrices",
        ["period-width"],
        **{"period-width": {"seed": 42, "sl2_count": 100, "sl3_count": 20, "tolerance": 1e-9}},
    )


def test_criterion_07_wilson_ratio_convergence():
    _run(
        7,
        "trace-ratio convergence at the girth rate",
        ["wilson-limit"],
        **{"wilson-limit": {"seed": 42, "count": 20, "max_power": 40}},
    )


def test_criterion_08_chi_rank():
    _run(8, "rank detection by chi determinants", ["chi-rank"], **{"chi-rank": {"seed": 42, "count": 100}})


def test_criterion_09_wolpert_formula():
    _run(
        9,
        "length-bracket formula vs angle oracle",
        ["wolpert"],
        wolpert={"seed": 42, "count": 50, "tolerance": 1e-6},
    )


def test_criterion_10_oper_suite():
    _run(
        10,
        "operator backend: holonomy, cross ratios, reduced bracket",
        ["oper-crossratio", "df-swap"],
        **{
            "oper-crossratio": {"seed": 42, "steps": 4096, "quadruples": 100},
            "df-swap": {"seed": 42, "steps": 4096, "octuples": 50, "tolerance": 1e-5},
        },
    )
