"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-suite lines
with their timings; every suite also enforces its wall-clock budget.
"""

import pytest

from planarps import checks


def _run(name, budget_seconds):
    result = checks.run_suite(name)
    print(result.line())
    assert result.passed, result.detail
    assert result.seconds < budget_seconds, \
        "%s took %.2fs, budget %.0fs" % (name, result.seconds, budget_seconds)


def test_01_worked_degree4_example_exact():
    _run("degree4", 1)


def test_02_degree_sums_are_inverse_factorials():
    _run("expsum", 5)


def test_03_square_root_series_identities():
    _run("sqrtids", 5)


def test_04_composition_and_counting_identities():
    _run("composition", 60)


def test_05_rebase_path_independence():
    _run("pathindep", 30)


def test_06_exponential_translation_law():
    _run("translation", 10)


def test_07_inverse_suites():
    _run("inverses", 10)


def test_08_radius_estimates():
    _run("radius", 10)


def test_09_special_function_kernels():
    _run("kernels", 30)


def test_10_gamma_functional_equation_probe():
    _run("gammashift", 5)
